#pragma once

/// Finite fields F_{p^e} with explicit monic irreducible moduli.
///
/// A field is described by its characteristic p, extension degree e and a
/// modulus: a monic irreducible polynomial of degree e over F_p, stored as a
/// coefficient list in ascending degree order (length e + 1). Elements are
/// canonical integers in [0, p^e); the base-p digits of the value are the
/// coefficients of the representative polynomial, constant term first.
///
/// Two field values are interchangeable exactly when (p, e, modulus)
/// coincide. Arithmetic between elements of distinct fields is rejected.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace qrmc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over F_p, ascending degree, no trailing zeros.
using Poly = std::vector<int>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    poly_trim(r);
    return r;
}

// Remainder modulo a monic divisor.
inline Poly poly_rem(Poly a, const Poly& m, long p) {
    const std::size_t dm = m.size() - 1;
    poly_trim(a);
    while (a.size() > dm) {
        const long c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            long v = a[shift + i] - c * m[i];
            a[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        poly_trim(a);
    }
    return a;
}

// Brute trial division by every monic polynomial of degree 1..deg/2. Fine
// for the desk-scale degrees this library targets.
inline bool poly_irreducible(const Poly& m, long p) {
    const int e = static_cast<int>(m.size()) - 1;
    if (e == 1) return true;
    for (int d = 1; 2 * d <= e; ++d) {
        std::vector<int> digits(static_cast<std::size_t>(d), 0);
        while (true) {
            Poly cand(digits.begin(), digits.end());
            cand.push_back(1);
            if (poly_rem(m, cand, p).empty()) return false;
            int i = 0;
            for (; i < d; ++i) {
                if (++digits[static_cast<std::size_t>(i)] < p) break;
                digits[static_cast<std::size_t>(i)] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace detail

/// Default modulus for (p, e), available for p in {2, 3, 5} and e <= 6; the
/// lexicographically first irreducible under the canonical integer encoding.
inline std::optional<std::vector<int>> default_modulus(long p, int e) {
    if (e == 1) return std::vector<int>{0, 1};
    static const struct { long p; int e; std::vector<int> m; } table[] = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},
        {5, 4, {2, 0, 0, 0, 1}},
        {5, 5, {1, 4, 0, 0, 0, 1}},
        {5, 6, {2, 1, 0, 0, 0, 0, 1}},
    };
    for (const auto& row : table)
        if (row.p == p && row.e == e) return row.m;
    return std::nullopt;
}

/// Immutable field context. Create through Field::create and share by
/// FieldPtr; all element values are canonical integer encodings.
class Field {
public:
    /// Supported field sizes are capped at 2^20; full arithmetic tables are
    /// precomputed up to size 256 and discrete-log tables up to 2^16.
    static FieldPtr create(long p, int e,
                           std::optional<std::vector<int>> modulus = std::nullopt) {
        if (!detail::is_prime(p))
            throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                        " is not prime");
        if (e < 1)
            throw std::invalid_argument("field extension degree must be at least 1");
        unsigned long long q = sat_pow(static_cast<unsigned long long>(p),
                                       static_cast<unsigned long long>(e));
        if (q > (1ull << 20))
            throw std::invalid_argument("field size " + std::to_string(p) + "^" +
                                        std::to_string(e) +
                                        " exceeds the supported bound 2^20");
        std::vector<int> mod;
        if (modulus) {
            mod = *modulus;
            if (mod.size() != static_cast<std::size_t>(e) + 1)
                throw std::invalid_argument(
                    "modulus must list e + 1 coefficients, ascending degree");
            for (int c : mod)
                if (c < 0 || c >= p)
                    throw std::invalid_argument(
                        "modulus coefficient " + std::to_string(c) +
                        " out of range for characteristic " + std::to_string(p));
            if (mod.back() != 1)
                throw std::invalid_argument("modulus must be monic");
            if (!detail::poly_irreducible(mod, p))
                throw std::invalid_argument("modulus is reducible over F_" +
                                            std::to_string(p));
        } else {
            auto def = default_modulus(p, e);
            if (!def)
                throw std::invalid_argument(
                    "no default modulus for p=" + std::to_string(p) + ", e=" +
                    std::to_string(e) + "; provide one explicitly");
            mod = *def;
        }
        return FieldPtr(new Field(p, e, std::move(mod)));
    }

    long characteristic() const noexcept { return p_; }
    int degree() const noexcept { return e_; }
    long size() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return mod_; }

    /// Interchangeability of field values: identical (p, e, modulus).
    bool same(const Field& o) const noexcept {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }

    std::string name() const { return "F_" + std::to_string(q_); }

    /// Stable identity string, usable as a cache key.
    std::string key() const {
        std::string s = std::to_string(p_) + "^" + std::to_string(e_) + "/";
        for (int c : mod_) s += std::to_string(c) + ",";
        return s;
    }

    void check(long v, const char* what = "element value") const {
        if (v < 0 || v >= q_)
            throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                        " out of range for " + name());
    }

    int add(int a, int b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
        return digit_add(a, b);
    }

    int neg(int a) const {
        if (p_ == 2) return a;
        int r = 0;
        for (long place = 1; a != 0; place *= p_) {
            int d = static_cast<int>(a % p_);
            if (d != 0) r += static_cast<int>(place * (p_ - d));
            a = static_cast<int>(a / p_);
        }
        return r;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        if (!mul_tab_.empty()) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
        if (!log_.empty())
            return exp_[(static_cast<std::size_t>(log_[a]) + log_[b]) % (q_ - 1)];
        return slow_mul(a, b);
    }

    int inv(int a) const {
        if (a == 0) throw std::invalid_argument("division by zero in " + name());
        if (!inv_tab_.empty()) return inv_tab_[a];
        if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow(a, static_cast<unsigned long long>(q_) - 2);
    }

    int div(int a, int b) const { return mul(a, inv(b)); }

    int pow(int a, unsigned long long n) const {
        int r = 1;
        while (n > 0) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    /// A fixed primitive element (tables are always built, so always known).
    int generator() const noexcept { return gen_; }

    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<std::size_t>(e_));
        for (int i = 0; i < e_; ++i) {
            d[static_cast<std::size_t>(i)] = static_cast<int>(a % p_);
            a = static_cast<int>(a / p_);
        }
        return d;
    }

    int from_digits(const std::vector<int>& d) const {
        int v = 0;
        for (std::size_t i = d.size(); i-- > 0;)
            v = static_cast<int>(v * p_ + d[i]);
        return v;
    }

private:
    Field(long p, int e, std::vector<int> mod)
        : p_(p), e_(e), q_(1), mod_(std::move(mod)) {
        for (int i = 0; i < e_; ++i) q_ *= p_;
        build_tables();
    }

    int digit_add(int a, int b) const {
        int r = 0;
        for (long place = 1; a != 0 || b != 0; place *= p_) {
            int d = static_cast<int>((a % p_ + b % p_) % p_);
            r += static_cast<int>(place * d);
            a = static_cast<int>(a / p_);
            b = static_cast<int>(b / p_);
        }
        return r;
    }

    int slow_mul(int a, int b) const {
        detail::Poly pa, pb;
        for (int x = a; x != 0; x = static_cast<int>(x / p_))
            pa.push_back(static_cast<int>(x % p_));
        for (int x = b; x != 0; x = static_cast<int>(x / p_))
            pb.push_back(static_cast<int>(x % p_));
        detail::Poly r = detail::poly_rem(detail::poly_mul(pa, pb, p_), mod_, p_);
        int v = 0;
        for (std::size_t i = r.size(); i-- > 0;)
            v = static_cast<int>(v * p_ + r[i]);
        return v;
    }

    void build_tables() {
        // discrete-log tables up to 2^16
        if (q_ <= (1 << 16)) {
            exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
            log_.assign(static_cast<std::size_t>(q_), 0);
            for (int g = 1; g < q_; ++g) {
                int x = 1;
                long order = 0;
                do {
                    x = slow_mul(x, g);
                    ++order;
                } while (x != 1);
                if (order == q_ - 1 || q_ == 2) {
                    gen_ = g;
                    break;
                }
            }
            int x = 1;
            for (long i = 0; i < q_ - 1; ++i) {
                exp_[static_cast<std::size_t>(i)] = x;
                log_[static_cast<std::size_t>(x)] = static_cast<int>(i);
                x = slow_mul(x, gen_);
            }
        }
        // dense tables up to 256
        if (q_ <= 256) {
            const std::size_t q = static_cast<std::size_t>(q_);
            if (p_ != 2) {
                add_tab_.assign(q * q, 0);
                for (std::size_t a = 0; a < q; ++a)
                    for (std::size_t b = 0; b < q; ++b)
                        add_tab_[a * q + b] = digit_add(static_cast<int>(a),
                                                        static_cast<int>(b));
            }
            mul_tab_.assign(q * q, 0);
            for (std::size_t a = 0; a < q; ++a)
                for (std::size_t b = 0; b < q; ++b)
                    mul_tab_[a * q + b] = slow_mul(static_cast<int>(a),
                                                   static_cast<int>(b));
            inv_tab_.assign(q, 0);
            for (std::size_t a = 1; a < q; ++a)
                inv_tab_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        }
    }

    long p_;
    int e_;
    long q_;
    std::vector<int> mod_;
    std::vector<int32_t> add_tab_, mul_tab_, inv_tab_;
    std::vector<int32_t> exp_, log_;
    int gen_ = 1;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && a->same(*b));
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b,
                               const char* what) {
    if (!same_field(a, b))
        throw std::invalid_argument(std::string(what) +
                                    ": operands live in distinct fields");
}

/// A field element paired with its field, for the public API surface.
/// Arithmetic between elements of distinct fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, long value)
        : f_(std::move(field)), v_(static_cast<int>(value)) {
        if (!f_) throw std::invalid_argument("field element without a field");
        f_->check(value);
    }

    int value() const noexcept { return v_; }
    const FieldPtr& field() const noexcept { return f_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_, "addition");
        return FieldElement(a.f_, a.f_->add(a.v_, b.v_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_, "subtraction");
        return FieldElement(a.f_, a.f_->sub(a.v_, b.v_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_, "multiplication");
        return FieldElement(a.f_, a.f_->mul(a.v_, b.v_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_, "division");
        return FieldElement(a.f_, a.f_->div(a.v_, b.v_));
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return same_field(a.f_, b.f_) && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

private:
    FieldPtr f_;
    int v_;
};

}  // namespace qrmc
