#pragma once

/// Field extension towers F_q inside F_{q^m}, the trace map, and expansion
/// bases with their trace duals.
///
/// A tower pairs a base field F_q = F_{p^a} with an extension F_{q^m} =
/// F_{p^(a*m)} over the same prime and fixes an embedding of the base into
/// the extension (the canonical root of the base modulus, which for a prime
/// base is the identity on constants). An ExtensionBasis is an ordered
/// F_q-basis gamma_1..gamma_m of the extension; its dual is the unique
/// basis with Tr(gamma_i gamma*_j) = delta_ij.

#include <memory>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace qrmc {

class ExtensionTower;
using TowerPtr = std::shared_ptr<const ExtensionTower>;

class ExtensionTower {
public:
    static TowerPtr make(FieldPtr base, FieldPtr ext) {
        if (!base || !ext) throw std::invalid_argument("tower needs two fields");
        if (base->characteristic() != ext->characteristic())
            throw std::invalid_argument("tower fields have distinct characteristics");
        if (ext->degree() % base->degree() != 0)
            throw std::invalid_argument(
                "base degree does not divide extension degree; no subfield embedding");
        return TowerPtr(new ExtensionTower(std::move(base), std::move(ext)));
    }

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& ext() const noexcept { return ext_; }

    /// Degree of the extension over the base.
    int m() const noexcept { return m_; }

    /// Embedding F_q -> F_{q^m}.
    int embed(int a) const {
        base_->check(a);
        return embed_[static_cast<std::size_t>(a)];
    }

    /// Partial inverse of the embedding.
    std::optional<int> unembed(int x) const {
        ext_->check(x);
        int v = unembed_[static_cast<std::size_t>(x)];
        if (v < 0) return std::nullopt;
        return v;
    }

    /// x -> x^q, the generator of Gal(F_{q^m}/F_q).
    int frobenius(int x) const {
        return ext_->pow(x, static_cast<unsigned long long>(base_->size()));
    }

    /// Trace onto the base: x + x^q + ... + x^(q^(m-1)), reinterpreted as a
    /// base-field value.
    int trace(int x) const {
        ext_->check(x);
        int s = 0;
        int cur = x;
        for (int i = 0; i < m_; ++i) {
            s = ext_->add(s, cur);
            cur = frobenius(cur);
        }
        auto v = unembed(s);
        if (!v) throw std::logic_error("trace left the base field");  // unreachable
        return *v;
    }

    /// Powers 1, g, ..., g^(m-1) of the extension generator; an F_q-basis.
    /// For a prime base this is the polynomial basis.
    const std::vector<int32_t>& power_basis() const noexcept { return pow_basis_; }

    bool same(const ExtensionTower& o) const {
        return base_->same(*o.base_) && ext_->same(*o.ext_);
    }

private:
    ExtensionTower(FieldPtr base, FieldPtr ext)
        : base_(std::move(base)), ext_(std::move(ext)),
          m_(ext_->degree() / base_->degree()) {
        const long q = base_->size();
        embed_.assign(static_cast<std::size_t>(q), 0);
        unembed_.assign(static_cast<std::size_t>(ext_->size()), -1);
        if (base_->degree() == 1) {
            // constants embed as themselves
            for (long a = 0; a < q; ++a) embed_[static_cast<std::size_t>(a)] = static_cast<int32_t>(a);
        } else {
            // the smallest root of the base modulus in the extension defines
            // the embedding of the base generator
            int root = -1;
            for (long x = 0; x < ext_->size(); ++x) {
                int acc = 0;
                const auto& mod = base_->modulus();
                for (std::size_t i = mod.size(); i-- > 0;)
                    acc = ext_->add(ext_->mul(acc, static_cast<int>(x)), mod[i]);
                if (acc == 0) {
                    root = static_cast<int>(x);
                    break;
                }
            }
            if (root < 0)
                throw std::logic_error("base modulus has no root in the extension");
            for (long a = 0; a < q; ++a) {
                const std::vector<int> d = base_->digits(static_cast<int>(a));
                int img = 0, rp = 1;
                for (int i = 0; i < base_->degree(); ++i) {
                    img = ext_->add(img, ext_->mul(d[static_cast<std::size_t>(i)], rp));
                    rp = ext_->mul(rp, root);
                }
                embed_[static_cast<std::size_t>(a)] = img;
            }
        }
        for (long a = 0; a < q; ++a)
            unembed_[static_cast<std::size_t>(embed_[static_cast<std::size_t>(a)])] =
                static_cast<int32_t>(a);
        pow_basis_.resize(static_cast<std::size_t>(m_));
        int g = ext_->degree() == 1 ? 1 : static_cast<int>(ext_->characteristic());
        int cur = 1;
        for (int i = 0; i < m_; ++i) {
            pow_basis_[static_cast<std::size_t>(i)] = cur;
            cur = ext_->mul(cur, g);
        }
    }

    FieldPtr base_, ext_;
    int m_;
    std::vector<int32_t> embed_, unembed_;
    std::vector<int32_t> pow_basis_;
};

/// An ordered F_q-basis of F_{q^m}. Construction verifies independence; the
/// coordinate map is precomputed as an inverted F_p-linear system.
class ExtensionBasis {
public:
    ExtensionBasis(TowerPtr tower, std::vector<int32_t> elements)
        : tower_(std::move(tower)), gamma_(std::move(elements)) {
        const FieldPtr& ext = tower_->ext();
        const FieldPtr& base = tower_->base();
        const int m = tower_->m();
        if (static_cast<int>(gamma_.size()) != m)
            throw std::invalid_argument("expansion basis must have " + std::to_string(m) +
                                        " elements");
        for (int32_t g : gamma_) ext->check(g);
        // columns: F_p digits of embed(beta_j) * gamma_i for the polynomial
        // basis beta_j of the base field; invertibility == F_q-independence
        FieldPtr fp = Field::create(ext->characteristic(), 1);
        const int E = ext->degree();
        const int a = base->degree();
        Matrix sys(fp, E, E);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < a; ++j) {
                int beta = base->from_digits(unit_digits(a, j));
                int prod = ext->mul(tower_->embed(beta), gamma_[static_cast<std::size_t>(i)]);
                const std::vector<int> dig = ext->digits(prod);
                for (int r = 0; r < E; ++r)
                    sys.set(r, i * a + j, dig[static_cast<std::size_t>(r)]);
            }
        auto inv = sys.inverse();
        if (!inv)
            throw std::invalid_argument(
                "expansion basis elements are linearly dependent over the base field");
        solver_ = std::move(*inv);
    }

    const TowerPtr& tower() const noexcept { return tower_; }
    const std::vector<int32_t>& elements() const noexcept { return gamma_; }

    /// Coordinates of x over F_q: the unique c with x = sum_i embed(c_i) gamma_i.
    std::vector<int32_t> coords(int x) const {
        const FieldPtr& ext = tower_->ext();
        const FieldPtr& base = tower_->base();
        ext->check(x);
        const int E = ext->degree();
        const int a = base->degree();
        const std::vector<int> dig = ext->digits(x);
        std::vector<int32_t> c(static_cast<std::size_t>(tower_->m()));
        std::vector<int> block(static_cast<std::size_t>(a));
        for (int i = 0; i < tower_->m(); ++i) {
            for (int j = 0; j < a; ++j) {
                long acc = 0;
                const FieldPtr& fp = solver_.field();
                for (int t = 0; t < E; ++t)
                    acc = fp->add(static_cast<int>(acc),
                                  fp->mul(solver_.at(i * a + j, t), dig[static_cast<std::size_t>(t)]));
                block[static_cast<std::size_t>(j)] = static_cast<int>(acc);
            }
            c[static_cast<std::size_t>(i)] = base->from_digits(block);
        }
        return c;
    }

    /// Inverse of coords.
    int combine(const std::vector<int32_t>& c) const {
        if (static_cast<int>(c.size()) != tower_->m())
            throw std::invalid_argument("coordinate vector has wrong length");
        const FieldPtr& ext = tower_->ext();
        int x = 0;
        for (int i = 0; i < tower_->m(); ++i) {
            tower_->base()->check(c[static_cast<std::size_t>(i)]);
            x = ext->add(x, ext->mul(tower_->embed(c[static_cast<std::size_t>(i)]),
                                     gamma_[static_cast<std::size_t>(i)]));
        }
        return x;
    }

    /// Trace-dual basis: solves the m x m trace-pairing system over F_q.
    /// An involution: dual().dual() == *this.
    ExtensionBasis dual() const {
        const FieldPtr& base = tower_->base();
        const FieldPtr& ext = tower_->ext();
        const int m = tower_->m();
        Matrix t(base, m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                t.set(i, j, tower_->trace(ext->mul(gamma_[static_cast<std::size_t>(i)],
                                                   gamma_[static_cast<std::size_t>(j)])));
        auto inv = t.inverse();
        if (!inv) throw std::logic_error("trace form is degenerate");  // unreachable
        std::vector<int32_t> dual_elems(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            int x = 0;
            for (int k = 0; k < m; ++k)
                x = ext->add(x, ext->mul(tower_->embed(inv->at(k, j)),
                                         gamma_[static_cast<std::size_t>(k)]));
            dual_elems[static_cast<std::size_t>(j)] = x;
        }
        return ExtensionBasis(tower_, std::move(dual_elems));
    }

    bool operator==(const ExtensionBasis& o) const {
        return tower_->same(*o.tower_) && gamma_ == o.gamma_;
    }

private:
    static std::vector<int> unit_digits(int len, int pos) {
        std::vector<int> d(static_cast<std::size_t>(len), 0);
        d[static_cast<std::size_t>(pos)] = 1;
        return d;
    }

    TowerPtr tower_;
    std::vector<int32_t> gamma_;
    Matrix solver_;
};

/// The default expansion basis of a tower: powers of the extension generator.
inline ExtensionBasis default_basis(const TowerPtr& t) {
    return ExtensionBasis(t, t->power_basis());
}

/// Trace of an extension element onto the base field.
inline FieldElement field_trace(const TowerPtr& t, const FieldElement& x) {
    if (!same_field(x.field(), t->ext()))
        throw std::invalid_argument("trace argument does not live in the extension");
    return FieldElement(t->base(), t->trace(x.value()));
}

}  // namespace qrmc
