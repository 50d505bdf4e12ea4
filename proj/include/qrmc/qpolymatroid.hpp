#pragma once

/// q-Polymatroids: exact rational rank functions on the full subspace
/// lattice of F_q^n.
///
/// A table assigns one rational to every subspace, in the lattice's
/// canonical (dimension, key) order. The axioms are
///   (P1) 0 <= rho(A) <= dim A,
///   (P2) A <= B implies rho(A) <= rho(B),
///   (P3) rho(A+B) + rho(A meet B) <= rho(A) + rho(B),
/// checked exhaustively over all pairs. A q-matroid is an integer-valued
/// table. Rank tables extracted from codes use the cheap constraint-rank
/// form of the supported-subcode dimension, so building a table never
/// enumerates codewords.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix_code.hpp"
#include "rational.hpp"

namespace qrmc {

class QPolymatroid {
public:
    QPolymatroid(LatticePtr lat, std::vector<Rat> values)
        : lat_(std::move(lat)), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != lat_->size())
            throw std::invalid_argument(
                "rank table must cover all " + std::to_string(lat_->size()) +
                " subspaces, got " + std::to_string(values_.size()) + " values");
    }

    const LatticePtr& lattice() const noexcept { return lat_; }
    const FieldPtr& field() const noexcept { return lat_->field(); }
    int ground_dim() const noexcept { return lat_->ambient(); }
    const std::vector<Rat>& values() const noexcept { return values_; }

    const Rat& value_at(std::size_t idx) const { return values_.at(idx); }
    Rat rank(const Subspace& x) const { return values_[lat_->index_of(x)]; }
    Rat full_rank() const { return values_[lat_->full_index()]; }

private:
    LatticePtr lat_;
    std::vector<Rat> values_;  // one per lattice subspace, same order
};

/// Same ground space required; cross-(q, n) comparisons are rejected.
inline void require_same_ground(const QPolymatroid& p1, const QPolymatroid& p2,
                                const char* what) {
    if (!same_field(p1.field(), p2.field()) || p1.ground_dim() != p2.ground_dim())
        throw std::invalid_argument(
            std::string(what) + " needs tables over the same ground space");
}

/// Exact rank of X in the q-polymatroid of the code on the given side:
/// rho_c(C, J) = (dim C - dim C(J-perp, column))/m over F_q^n,
/// rho_r(C, K) = (dim C - dim C(K-perp, row))/n over F_q^m.
inline Rat rho(const MatrixCode& c, const Subspace& x, Side side) {
    require_oriented(c, "the rank function");
    const int ambient = side == Side::column ? c.n() : c.m();
    if (x.ambient() != ambient)
        throw std::invalid_argument(std::string("the ") + side_name(side) +
                                    " rank function takes subspaces of F_q^" +
                                    std::to_string(ambient));
    const int scale = side == Side::column ? c.m() : c.n();
    return Rat(c.dim() - supported_subcode_dim(c, orth(x), side), scale);
}

/// Complete rank table of the code's q-polymatroid on the given side.
inline QPolymatroid build_qpm(const MatrixCode& c, Side side,
                              unsigned long long guard = guards::subspaces) {
    require_oriented(c, "rank-table extraction");
    const int ambient = side == Side::column ? c.n() : c.m();
    const int scale = side == Side::column ? c.m() : c.n();
    LatticePtr lat = SubspaceLattice::get(c.field(), ambient, guard);
    std::vector<Rat> vals;
    vals.reserve(static_cast<std::size_t>(lat->size()));
    for (int i = 0; i < lat->size(); ++i) {
        const Subspace& perp = lat->spaces()[static_cast<std::size_t>(lat->orth_index(i))];
        vals.emplace_back(c.dim() - supported_subcode_dim(c, perp, side), scale);
    }
    return QPolymatroid(std::move(lat), std::move(vals));
}

struct AxiomReport {
    bool ok;
    std::string axiom;                    // "P1" | "P2" | "P3" when violated
    std::optional<Subspace> a, b;         // witness pair (b for P2/P3 only)
    std::string detail;
};

/// Exhaustive axiom check; reports the first violation in deterministic
/// order (all of P1, then P2 over ordered pairs, then P3 over unordered
/// pairs, each in lattice order).
inline AxiomReport check_axioms(const QPolymatroid& p) {
    const SubspaceLattice& lat = *p.lattice();
    const auto& v = p.values();
    for (int i = 0; i < lat.size(); ++i) {
        if (v[static_cast<std::size_t>(i)] < 0 ||
            v[static_cast<std::size_t>(i)] > Rat(lat.dim(i)))
            return {false, "P1", lat.spaces()[static_cast<std::size_t>(i)], std::nullopt,
                    "rho" + repr(lat.spaces()[static_cast<std::size_t>(i)]) + " = " + to_string(v[static_cast<std::size_t>(i)]) +
                        " is outside [0, " + std::to_string(lat.dim(i)) + "]"};
    }
    for (int i = 0; i < lat.size(); ++i)
        for (int j = 0; j < lat.size(); ++j) {
            if (i == j || !lat.leq(i, j)) continue;
            if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(j)])
                return {false, "P2", lat.spaces()[static_cast<std::size_t>(i)], lat.spaces()[static_cast<std::size_t>(j)],
                        "rho" + repr(lat.spaces()[static_cast<std::size_t>(i)]) + " = " + to_string(v[static_cast<std::size_t>(i)]) +
                            " exceeds rho" + repr(lat.spaces()[static_cast<std::size_t>(j)]) + " = " +
                            to_string(v[static_cast<std::size_t>(j)]) + " of a larger space"};
        }
    for (int i = 0; i < lat.size(); ++i)
        for (int j = i; j < lat.size(); ++j) {
            const Rat lhs = v[static_cast<std::size_t>(lat.sum_index(i, j))] +
                            v[static_cast<std::size_t>(lat.meet_index(i, j))];
            const Rat rhs = v[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)];
            if (lhs > rhs)
                return {false, "P3", lat.spaces()[static_cast<std::size_t>(i)], lat.spaces()[static_cast<std::size_t>(j)],
                        "rho(A+B) + rho(A meet B) = " + to_string(lhs) +
                            " exceeds rho(A) + rho(B) = " + to_string(rhs) +
                            " for A = " + repr(lat.spaces()[static_cast<std::size_t>(i)]) + ", B = " +
                            repr(lat.spaces()[static_cast<std::size_t>(j)])};
        }
    return {true, "", std::nullopt, std::nullopt, "all axioms hold"};
}

/// Dual table rho*(A) = dim A - rho(full) + rho(A-perp); an involution.
inline QPolymatroid qpm_dual(const QPolymatroid& p) {
    const SubspaceLattice& lat = *p.lattice();
    const Rat top = p.full_rank();
    std::vector<Rat> vals;
    vals.reserve(static_cast<std::size_t>(lat.size()));
    for (int i = 0; i < lat.size(); ++i)
        vals.push_back(Rat(lat.dim(i)) - top + p.values()[static_cast<std::size_t>(lat.orth_index(i))]);
    return QPolymatroid(p.lattice(), std::move(vals));
}

/// Table identity over the same ground space.
inline bool qpm_equal(const QPolymatroid& p1, const QPolymatroid& p2) {
    require_same_ground(p1, p2, "rank-table comparison");
    return p1.values() == p2.values();
}

/// True when every rank value is an integer.
inline bool is_qmatroid(const QPolymatroid& p) {
    return std::all_of(p.values().begin(), p.values().end(), is_integer);
}

/// Exhaustive search for an invertible lattice relabeling phi with
/// rho_1(A) = rho_2(A phi) for every subspace A. Returns the first witness
/// in canonical-key order over GL_n, or nullopt after a completed search.
inline std::optional<Matrix> qpm_equivalent(
    const QPolymatroid& p1, const QPolymatroid& p2,
    unsigned long long guard = guards::map_pairs) {
    require_same_ground(p1, p2, "rank-table equivalence");
    const SubspaceLattice& lat = *p1.lattice();
    const int n = p1.ground_dim();
    const long q = p1.field()->size();

    // the multiset of values per dimension is invariant under relabeling
    std::map<int, std::vector<Rat>> by_dim1, by_dim2;
    for (int i = 0; i < lat.size(); ++i) {
        by_dim1[lat.dim(i)].push_back(p1.values()[static_cast<std::size_t>(i)]);
        by_dim2[lat.dim(i)].push_back(p2.values()[static_cast<std::size_t>(i)]);
    }
    for (auto& [d, vals] : by_dim1) {
        std::sort(vals.begin(), vals.end());
        std::sort(by_dim2[d].begin(), by_dim2[d].end());
        if (vals != by_dim2[d]) return std::nullopt;
    }

    check_guard("rank-table equivalence search", detail::gl_order(q, n), guard);
    for (const Matrix& phi : detail::general_linear_group(p1.field(), n)) {
        bool match = true;
        for (int i = 0; i < lat.size() && match; ++i) {
            const Subspace image = Subspace::span(lat.spaces()[static_cast<std::size_t>(i)].basis() * phi);
            match = p1.values()[static_cast<std::size_t>(i)] == p2.values()[static_cast<std::size_t>(lat.index_of(image))];
        }
        if (match) return phi;
    }
    return std::nullopt;
}

/// The rank table of any MRD code with the given parameters:
/// rho(J) = min(dim J, n - d + 1).
inline QPolymatroid uniform_mrd_table(const FieldPtr& f, int n, int m, int d,
                                      unsigned long long guard = guards::subspaces) {
    if (!(1 <= d && d <= n && n <= m))
        throw std::invalid_argument("uniform table needs 1 <= d <= n <= m");
    LatticePtr lat = SubspaceLattice::get(f, n, guard);
    std::vector<Rat> vals;
    vals.reserve(static_cast<std::size_t>(lat->size()));
    for (int i = 0; i < lat->size(); ++i)
        vals.emplace_back(std::min(lat->dim(i), n - d + 1));
    return QPolymatroid(std::move(lat), std::move(vals));
}

/// The rank table shared by all optimal anticodes Mat(K, column) with
/// dim K = t: rho(J) = dim(J + <e_1..e_{n-t}>) - (n - t).
inline QPolymatroid anticode_table(const FieldPtr& f, int n, int t,
                                   unsigned long long guard = guards::subspaces) {
    if (t < 0 || t > n)
        throw std::invalid_argument("anticode table needs 0 <= t <= n");
    LatticePtr lat = SubspaceLattice::get(f, n, guard);
    Matrix head(f, n - t, n);
    for (int i = 0; i < n - t; ++i) head.set(i, i, 1);
    const Subspace e_span = Subspace::span(head);
    std::vector<Rat> vals;
    vals.reserve(static_cast<std::size_t>(lat->size()));
    for (int i = 0; i < lat->size(); ++i)
        vals.emplace_back(sum(lat->spaces()[static_cast<std::size_t>(i)], e_span).dim() - (n - t));
    return QPolymatroid(std::move(lat), std::move(vals));
}

/// Minimum distance recovered from a column-side table of a nonzero code
/// of the given dimension in Mat(n x m):
/// d = n + 1 - min{s : rho(J) = code_dim/m for every J of dim s}.
inline int qpm_min_distance(const QPolymatroid& p, int code_dim, int m) {
    if (code_dim < 1 || m < 1)
        throw std::invalid_argument("distance recovery needs a nonzero code");
    const Rat top(code_dim, m);
    if (p.full_rank() != top)
        throw std::invalid_argument(
            "table rank of the full space is " + to_string(p.full_rank()) +
            ", expected dim/m = " + to_string(top));
    const SubspaceLattice& lat = *p.lattice();
    const int n = p.ground_dim();
    for (int s = 0; s <= n; ++s) {
        bool all_top = true;
        for (int i = 0; i < lat.size() && all_top; ++i)
            if (lat.dim(i) == s) all_top = p.values()[static_cast<std::size_t>(i)] == top;
        if (all_top) return n + 1 - s;
    }
    throw std::logic_error("full space fails its own rank");  // unreachable
}

/// MRD iff rho(J) = dim J for every J of dimension n - d + 1.
inline bool qpm_is_mrd(const QPolymatroid& p, int code_dim, int m) {
    const int d = qpm_min_distance(p, code_dim, m);
    const int s = p.ground_dim() - d + 1;
    const SubspaceLattice& lat = *p.lattice();
    for (int i = 0; i < lat.size(); ++i)
        if (lat.dim(i) == s && p.values()[static_cast<std::size_t>(i)] != Rat(s)) return false;
    return true;
}

/// When the table is the q-matroid of an optimal anticode of max rank t,
/// its value set is exactly {0, 1, ..., t}; returns that t, else nullopt.
inline std::optional<int> qpm_anticode_profile(const QPolymatroid& p) {
    if (!is_integer(p.full_rank()) || p.full_rank() < 0) return std::nullopt;
    const int t = static_cast<int>(p.full_rank().numerator());
    std::vector<bool> seen(static_cast<std::size_t>(t) + 1, false);
    for (const Rat& v : p.values()) {
        if (!is_integer(v) || v < 0 || v > Rat(t)) return std::nullopt;
        seen[static_cast<std::size_t>(v.numerator())] = true;
    }
    for (bool s : seen)
        if (!s) return std::nullopt;
    return t;
}

}  // namespace qrmc
