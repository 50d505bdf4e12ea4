#pragma once

/// Generalized weights of rank-metric codes.
///
/// a_i(C) = (1/m) min{dim A : A an optimal anticode with dim(C cap A) >= i}.
/// The optimal anticodes of Mat(n x m, F_q) with n <= m are the spaces
/// Mat(J, column) for J <= F_q^n, plus Mat(K, row) for K <= F_q^n when
/// n = m (classification used as fact). The rank-function route computes
/// the same numbers as min{n - dim J : dim C - m rho_c(C, J) >= i} without
/// touching row-type anticodes unless n = m; both are implemented and
/// cross-checked. Support weights cs_i take exhaustive minima over
/// i-dimensional subcodes instead and are not isometry invariants.

#include <optional>
#include <string>
#include <vector>

#include "qpolymatroid.hpp"

namespace qrmc {

struct WeightProfile {
    std::vector<int> a;                    // a_1 .. a_k, k = dim C
    std::optional<std::vector<int>> cs;    // support weights, when computed
    std::string method;                    // "anticode" | "rank-function"
};

inline void require_nonzero(const MatrixCode& c, const char* what) {
    if (c.dim() == 0)
        throw std::invalid_argument(std::string(what) + " of the zero code is undefined");
}

/// All optimal anticodes of Mat(n x m), deduplicated, in canonical key
/// order: one code of dimension m*t per column-support space (and per
/// row-support space when n = m).
inline std::vector<MatrixCode> optimal_anticodes(
    const FieldPtr& f, int n, int m, unsigned long long guard = guards::subspaces) {
    if (n > m)
        throw orientation_error(
            "the anticode family requires n <= m; transpose the code first (" +
            std::to_string(n) + "x" + std::to_string(m) + " given)");
    std::vector<MatrixCode> out;
    for (const Subspace& j : enumerate_subspaces(f, n, std::nullopt, guard))
        out.push_back(MatrixCode::column_support_code(j, m));
    if (n == m)
        for (const Subspace& k : enumerate_subspaces(f, n, std::nullopt, guard))
            out.push_back(MatrixCode::row_support_code(n, k));
    std::sort(out.begin(), out.end(),
              [](const MatrixCode& a, const MatrixCode& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

/// dim(C cap A) through the dimension formula, no element enumeration.
inline int intersection_dim(const MatrixCode& c, const MatrixCode& a) {
    return c.dim() + a.dim() - c.flat().vstack(a.flat()).rank();
}

}  // namespace detail

/// Generalized weights by exhaustive minimization over the anticode family.
inline WeightProfile gen_weights_anticode(const MatrixCode& c,
                                          unsigned long long guard = guards::subspaces) {
    require_nonzero(c, "the weight profile");
    require_oriented(c, "the weight profile");
    const auto anticodes = optimal_anticodes(c.field(), c.n(), c.m(), guard);
    WeightProfile p;
    p.method = "anticode";
    p.a.assign(static_cast<std::size_t>(c.dim()), 0);
    for (int i = 1; i <= c.dim(); ++i) {
        int best = c.n() * c.m() + 1;
        for (const MatrixCode& a : anticodes)
            if (a.dim() < best && detail::intersection_dim(c, a) >= i) best = a.dim();
        // the full space always qualifies, so best <= nm; anticode dims are
        // multiples of m by construction
        p.a[static_cast<std::size_t>(i - 1)] = best / c.m();
    }
    return p;
}

/// Generalized weights from the rank function(s): the column expression
/// min{n - dim J : dim C - m rho_c(C, J) >= i} for m > n, and the minimum
/// of the column and row expressions when n = m.
inline WeightProfile gen_weights_qpm(const MatrixCode& c,
                                     unsigned long long guard = guards::subspaces) {
    require_nonzero(c, "the weight profile");
    require_oriented(c, "the weight profile");
    WeightProfile p;
    p.method = "rank-function";
    p.a.assign(static_cast<std::size_t>(c.dim()), 0);
    auto fold_side = [&](Side side, bool first) {
        const int ambient = side == Side::column ? c.n() : c.m();
        for (int i = 1; i <= c.dim(); ++i)
            if (first)
                p.a[static_cast<std::size_t>(i - 1)] = ambient + 1;
        for (const Subspace& j :
             enumerate_subspaces(c.field(), ambient, std::nullopt, guard)) {
            // dim C - scale * rho(C, J) = dim C(J-perp, side)
            const int drop = supported_subcode_dim(c, orth(j), side);
            for (int i = 1; i <= std::min(drop, c.dim()); ++i) {
                int& slot = p.a[static_cast<std::size_t>(i - 1)];
                slot = std::min(slot, ambient - j.dim());
            }
        }
    };
    fold_side(Side::column, true);
    if (c.n() == c.m()) fold_side(Side::row, false);
    return p;
}

/// Support weights cs_1 .. cs_k: exhaustive minimum of dim(support) over
/// the i-dimensional subcodes, enumerated through coefficient subspaces.
inline std::vector<int> support_weights(const MatrixCode& c,
                                        unsigned long long guard = guards::subspaces) {
    require_nonzero(c, "the support-weight profile");
    const int k = c.dim();
    std::vector<int> cs(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i) {
        int best = c.n();
        for (const Subspace& coeff :
             enumerate_subspaces(c.field(), k, i, guard)) {
            const Matrix flat = coeff.basis() * c.flat();
            // stack all column vectors of all generators of the subcode
            Matrix cols(c.field(), flat.rows() * c.m(), c.n());
            for (int r = 0; r < flat.rows(); ++r)
                for (int j = 0; j < c.m(); ++j)
                    for (int s = 0; s < c.n(); ++s)
                        cols.set(r * c.m() + j, s, flat.at(r, s * c.m() + j));
            best = std::min(best, cols.rank());
        }
        cs[static_cast<std::size_t>(i - 1)] = best;
    }
    return cs;
}

/// All optimal anticodes attaining the minimum in a_i, canonical order.
inline std::vector<MatrixCode> minimizing_anticodes(
    const MatrixCode& c, int i, unsigned long long guard = guards::subspaces) {
    require_nonzero(c, "the minimizer family");
    require_oriented(c, "the minimizer family");
    if (i < 1 || i > c.dim())
        throw std::invalid_argument("minimizer index must lie in 1.." +
                                    std::to_string(c.dim()));
    const auto anticodes = optimal_anticodes(c.field(), c.n(), c.m(), guard);
    int best = c.n() * c.m() + 1;
    for (const MatrixCode& a : anticodes)
        if (a.dim() < best && detail::intersection_dim(c, a) >= i) best = a.dim();
    std::vector<MatrixCode> out;
    for (const MatrixCode& a : anticodes)
        if (a.dim() == best && detail::intersection_dim(c, a) >= i) out.push_back(a);
    return out;  // already in canonical key order
}

}  // namespace qrmc
