#pragma once

/// Subspaces of F_q^k in canonical form and the lattice operations on them:
/// sum, intersection, orthogonal complement (standard bilinear form, no
/// conjugation), and exhaustive enumeration in a fixed canonical order.
///
/// A subspace is represented by the RREF basis of its row span, so equal
/// subspaces have byte-identical keys. Enumeration is ordered by
/// (dimension, key) and its size is checked against a guard up front.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace qrmc {

class Subspace {
public:
    /// Row span of an arbitrary generator matrix, canonicalized.
    static Subspace span(const Matrix& rows) { return Subspace(rows.row_basis()); }

    static Subspace zero(FieldPtr f, int ambient) {
        return Subspace(Matrix(std::move(f), 0, ambient));
    }

    static Subspace full(FieldPtr f, int ambient) {
        return Subspace(Matrix::identity(std::move(f), ambient));
    }

    int dim() const noexcept { return basis_.rows(); }
    int ambient() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    const FieldPtr& field() const noexcept { return basis_.field(); }

    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient(); }

    bool contains(const std::vector<long>& v) const {
        if (static_cast<int>(v.size()) != ambient())
            throw std::invalid_argument("vector length does not match ambient dimension");
        Matrix probe = basis_.vstack(Matrix::from_rows(field(), {v}));
        return probe.rank() == dim();
    }

    bool contains(const Subspace& other) const {
        require_same_field(field(), other.field(), "subspace containment");
        if (ambient() != other.ambient())
            throw std::invalid_argument("subspace containment: ambient mismatch");
        if (other.dim() > dim()) return false;
        return basis_.vstack(other.basis_).rank() == dim();
    }

    std::string key() const { return basis_.key(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

inline Subspace row_space(const Matrix& m) { return Subspace::span(m); }
inline Subspace column_space(const Matrix& m) { return Subspace::span(m.transposed()); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field(), "subspace sum");
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace sum: ambient mismatch");
    return Subspace::span(a.basis().vstack(b.basis()));
}

/// Annihilator under the standard dot product; dim orth = ambient - dim.
inline Subspace orth(const Subspace& s) {
    return Subspace::span(s.basis().kernel());
}

/// Intersection via the double orthogonal complement.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    return orth(sum(orth(a), orth(b)));
}

/// Human-readable form like "<(1,0,0),(0,1,2)>"; "<0>" for the zero space.
inline std::string repr(const Subspace& s) {
    if (s.is_zero()) return "<0>";
    std::string out = "<";
    for (int r = 0; r < s.dim(); ++r) {
        out += r ? ",(" : "(";
        for (int c = 0; c < s.ambient(); ++c) {
            if (c) out += ",";
            out += std::to_string(s.basis().at(r, c));
        }
        out += ")";
    }
    return out + ">";
}

/// Gaussian binomial [k choose d]_q, saturating at the count cap.
inline unsigned long long gaussian_binomial(long q, int k, int d) {
    if (d < 0 || d > k) return 0;
    // product over i of (q^(k-i) - 1) / (q^(i+1) - 1); exact at every step
    unsigned long long num = 1;
    for (int i = 0; i < d; ++i) {
        unsigned long long top = sat_pow(static_cast<unsigned long long>(q),
                                         static_cast<unsigned long long>(k - i)) - 1;
        unsigned long long bot = sat_pow(static_cast<unsigned long long>(q),
                                         static_cast<unsigned long long>(i + 1)) - 1;
        num = sat_mul(num, top);
        if (num < count_cap) num /= bot;  // exact division when not saturated
    }
    return num;
}

inline unsigned long long subspace_total(long q, int k) {
    unsigned long long t = 0;
    for (int d = 0; d <= k; ++d) t = sat_add(t, gaussian_binomial(q, k, d));
    return t;
}

/// All subspaces of F_q^ambient (optionally of one dimension), ordered by
/// (dimension, canonical key). Count is checked against the guard first.
inline std::vector<Subspace> enumerate_subspaces(
    const FieldPtr& f, int ambient, std::optional<int> dim = std::nullopt,
    unsigned long long guard = guards::subspaces) {
    if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
    if (dim && (*dim < 0 || *dim > ambient))
        throw std::invalid_argument("subspace dimension out of range");
    const long q = f->size();
    const unsigned long long count =
        dim ? gaussian_binomial(q, ambient, *dim) : subspace_total(q, ambient);
    check_guard("subspace enumeration of F_" + std::to_string(q) + "^" +
                    std::to_string(ambient),
                count, guard);

    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(count));
    const int dlo = dim ? *dim : 0;
    const int dhi = dim ? *dim : ambient;
    for (int d = dlo; d <= dhi; ++d) {
        std::vector<Subspace> level;
        level.reserve(static_cast<std::size_t>(gaussian_binomial(q, ambient, d)));
        if (d == 0) {
            level.push_back(Subspace::zero(f, ambient));
        } else {
            // walk pivot-column combinations; free entries sit right of their
            // pivot and outside later pivot columns, so every matrix emitted
            // is already in RREF
            std::vector<int> piv(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) piv[static_cast<std::size_t>(i)] = i;
            while (true) {
                std::vector<std::pair<int, int>> free_cells;
                std::vector<bool> is_piv(static_cast<std::size_t>(ambient), false);
                for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
                for (int i = 0; i < d; ++i)
                    for (int j = piv[static_cast<std::size_t>(i)] + 1; j < ambient; ++j)
                        if (!is_piv[static_cast<std::size_t>(j)])
                            free_cells.emplace_back(i, j);
                std::vector<int> vals(free_cells.size(), 0);
                while (true) {
                    Matrix b(f, d, ambient);
                    for (int i = 0; i < d; ++i) b.set(i, piv[static_cast<std::size_t>(i)], 1);
                    for (std::size_t t = 0; t < free_cells.size(); ++t)
                        b.set(free_cells[t].first, free_cells[t].second, vals[t]);
                    level.push_back(Subspace::span(b));
                    std::size_t t = 0;
                    for (; t < vals.size(); ++t) {
                        if (++vals[t] < q) break;
                        vals[t] = 0;
                    }
                    if (t == vals.size()) break;
                }
                // next pivot combination in lexicographic order
                int i = d - 1;
                while (i >= 0 && piv[static_cast<std::size_t>(i)] ==
                                     ambient - d + i)
                    --i;
                if (i < 0) break;
                ++piv[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < d; ++j)
                    piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
        for (auto& s : level) out.push_back(std::move(s));
    }
    return out;
}

/// The full subspace lattice of F_q^ambient with index-based sum, meet and
/// complement tables. Instances are immutable and cached per (field,
/// ambient); pair tables are materialized lazily and only for lattices of
/// at most 1024 subspaces, larger ones fall back to per-call computation.
class SubspaceLattice {
public:
    static std::shared_ptr<const SubspaceLattice> get(
        const FieldPtr& f, int ambient, unsigned long long guard = guards::subspaces) {
        static std::mutex mx;
        static std::map<std::pair<std::string, int>, std::shared_ptr<const SubspaceLattice>>
            cache;
        std::lock_guard<std::mutex> lock(mx);
        auto key = std::make_pair(f->key(), ambient);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto lat = std::shared_ptr<const SubspaceLattice>(new SubspaceLattice(f, ambient, guard));
        cache.emplace(key, lat);
        return lat;
    }

    const std::vector<Subspace>& spaces() const noexcept { return spaces_; }
    int size() const noexcept { return static_cast<int>(spaces_.size()); }
    int ambient() const noexcept { return ambient_; }
    const FieldPtr& field() const noexcept { return field_; }

    int index_of(const Subspace& s) const {
        auto it = index_.find(s.key());
        if (it == index_.end())
            throw std::invalid_argument("subspace does not belong to this lattice");
        return it->second;
    }

    int dim(int i) const { return spaces_[static_cast<std::size_t>(i)].dim(); }
    int zero_index() const noexcept { return 0; }
    int full_index() const noexcept { return size() - 1; }

    int orth_index(int i) const { return orth_[static_cast<std::size_t>(i)]; }

    int sum_index(int i, int j) const {
        ensure_pair_tables();
        if (!sum_.empty()) return sum_[pos(i, j)];
        return index_of(sum(spaces_[static_cast<std::size_t>(i)],
                            spaces_[static_cast<std::size_t>(j)]));
    }

    int meet_index(int i, int j) const {
        ensure_pair_tables();
        if (!meet_.empty()) return meet_[pos(i, j)];
        return index_of(intersect(spaces_[static_cast<std::size_t>(i)],
                                  spaces_[static_cast<std::size_t>(j)]));
    }

    /// Containment i <= j through the sum table.
    bool leq(int i, int j) const { return sum_index(i, j) == j; }

private:
    SubspaceLattice(const FieldPtr& f, int ambient, unsigned long long guard)
        : field_(f), ambient_(ambient) {
        spaces_ = enumerate_subspaces(f, ambient, std::nullopt, guard);
        for (int i = 0; i < size(); ++i) index_.emplace(spaces_[static_cast<std::size_t>(i)].key(), i);
        orth_.resize(spaces_.size());
        for (int i = 0; i < size(); ++i)
            orth_[static_cast<std::size_t>(i)] = index_of(orth(spaces_[static_cast<std::size_t>(i)]));
    }

    std::size_t pos(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * spaces_.size() + static_cast<std::size_t>(j);
    }

    void ensure_pair_tables() const {
        if (spaces_.size() > 1024) return;
        std::call_once(pair_once_, [this] {
            const std::size_t n = spaces_.size();
            sum_.resize(n * n);
            meet_.resize(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    int s = index_of(sum(spaces_[i], spaces_[j]));
                    int m = index_of(intersect(spaces_[i], spaces_[j]));
                    sum_[i * n + j] = sum_[j * n + i] = s;
                    meet_[i * n + j] = meet_[j * n + i] = m;
                }
        });
    }

    FieldPtr field_;
    int ambient_;
    std::vector<Subspace> spaces_;
    std::map<std::string, int> index_;
    std::vector<int> orth_;
    mutable std::once_flag pair_once_;
    mutable std::vector<int> sum_, meet_;
};

using LatticePtr = std::shared_ptr<const SubspaceLattice>;

}  // namespace qrmc
