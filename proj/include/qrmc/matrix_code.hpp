#pragma once

/// Rank-metric codes: F_q-linear spaces of n x m matrices.
///
/// A code is stored as the RREF basis of its image under row-major
/// flattening into F_q^(nm), so equal codes compare byte-identically. The
/// distance, weight and equivalence operations in this header are exact and
/// exhaustive; every scan is guarded by an instance count checked up front.
///
/// Operations that lean on the classification of maximal-dimension codes of
/// bounded rank (optimal anticodes) require the n <= m orientation and
/// throw orientation_error otherwise; duality, support and equivalence work
/// in either orientation.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace qrmc {

enum class Side { column, row };

inline const char* side_name(Side s) { return s == Side::column ? "column" : "row"; }

class MatrixCode {
public:
    /// Span of arbitrary generator matrices (shape-checked, canonicalized).
    static MatrixCode from_generators(FieldPtr f, int n, int m,
                                      const std::vector<Matrix>& gens) {
        check_shape(n, m);
        Matrix flat(f, static_cast<int>(gens.size()), n * m);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Matrix& g = gens[i];
            require_same_field(f, g.field(), "code generator");
            if (g.rows() != n || g.cols() != m)
                throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                            " is not an " + std::to_string(n) + "x" +
                                            std::to_string(m) + " matrix");
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < m; ++c)
                    flat.set(static_cast<int>(i), r * m + c, g.at(r, c));
        }
        return MatrixCode(std::move(f), n, m, flat.row_basis());
    }

    /// Span of flattened generators given as rows of length n*m.
    static MatrixCode from_flat(FieldPtr f, int n, int m, const Matrix& rows) {
        check_shape(n, m);
        if (rows.cols() != n * m)
            throw std::invalid_argument("flattened generators must have n*m columns");
        require_same_field(f, rows.field(), "code generators");
        return MatrixCode(std::move(f), n, m, rows.row_basis());
    }

    static MatrixCode zero(FieldPtr f, int n, int m) {
        check_shape(n, m);
        Matrix none(f, 0, n * m);
        return MatrixCode(std::move(f), n, m, std::move(none));
    }

    static MatrixCode full(FieldPtr f, int n, int m) {
        check_shape(n, m);
        Matrix id = Matrix::identity(f, n * m);
        return MatrixCode(std::move(f), n, m, std::move(id));
    }

    /// Mat(J, column): all matrices whose column space lies in J <= F_q^n.
    static MatrixCode column_support_code(const Subspace& j, int m) {
        const int n = j.ambient();
        std::vector<Matrix> gens;
        gens.reserve(static_cast<std::size_t>(j.dim()) * static_cast<std::size_t>(m));
        for (int r = 0; r < j.dim(); ++r)
            for (int c = 0; c < m; ++c) {
                Matrix g(j.field(), n, m);
                for (int i = 0; i < n; ++i) g.set(i, c, j.basis().at(r, i));
                gens.push_back(std::move(g));
            }
        return from_generators(j.field(), n, m, gens);
    }

    /// Mat(K, row): all matrices whose row space lies in K <= F_q^m.
    static MatrixCode row_support_code(int n, const Subspace& k) {
        const int m = k.ambient();
        std::vector<Matrix> gens;
        gens.reserve(static_cast<std::size_t>(k.dim()) * static_cast<std::size_t>(n));
        for (int r = 0; r < k.dim(); ++r)
            for (int i = 0; i < n; ++i) {
                Matrix g(k.field(), n, m);
                for (int c = 0; c < m; ++c) g.set(i, c, k.basis().at(r, c));
                gens.push_back(std::move(g));
            }
        return from_generators(k.field(), n, m, gens);
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int dim() const noexcept { return flat_.rows(); }
    const FieldPtr& field() const noexcept { return f_; }
    const Matrix& flat() const noexcept { return flat_; }

    /// i-th canonical basis element, unflattened.
    Matrix generator(int i) const {
        Matrix g(f_, n_, m_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < m_; ++c) g.set(r, c, flat_.at(i, r * m_ + c));
        return g;
    }

    std::vector<Matrix> generators() const {
        std::vector<Matrix> out;
        out.reserve(static_cast<std::size_t>(dim()));
        for (int i = 0; i < dim(); ++i) out.push_back(generator(i));
        return out;
    }

    /// The codeword with the given coefficients over the canonical basis.
    Matrix codeword(const std::vector<long>& coeffs) const {
        if (static_cast<int>(coeffs.size()) != dim())
            throw std::invalid_argument("coefficient count must equal the dimension");
        Matrix w(f_, n_, m_);
        for (int i = 0; i < dim(); ++i) {
            f_->check(coeffs[static_cast<std::size_t>(i)]);
            const int c = static_cast<int>(coeffs[static_cast<std::size_t>(i)]);
            if (c == 0) continue;
            for (int r = 0; r < n_; ++r)
                for (int j = 0; j < m_; ++j)
                    w.set(r, j, f_->add(w.at(r, j), f_->mul(c, flat_.at(i, r * m_ + j))));
        }
        return w;
    }

    bool contains(const Matrix& w) const {
        if (w.rows() != n_ || w.cols() != m_ || !same_field(w.field(), f_))
            return false;
        Matrix probe(f_, 1, n_ * m_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < m_; ++c) probe.set(0, r * m_ + c, w.at(r, c));
        return flat_.vstack(probe).rank() == dim();
    }

    std::string key() const {
        std::string s = std::to_string(n_) + "x" + std::to_string(m_) + ":";
        s += flat_.key();
        return s;
    }

    friend bool operator==(const MatrixCode& a, const MatrixCode& b) {
        return same_field(a.f_, b.f_) && a.n_ == b.n_ && a.m_ == b.m_ &&
               a.flat_ == b.flat_;
    }
    friend bool operator!=(const MatrixCode& a, const MatrixCode& b) {
        return !(a == b);
    }

private:
    MatrixCode(FieldPtr f, int n, int m, Matrix flat)
        : f_(std::move(f)), n_(n), m_(m), flat_(std::move(flat)) {}

    static void check_shape(int n, int m) {
        if (n < 1 || m < 1)
            throw std::invalid_argument("code shape must be at least 1x1");
    }

    FieldPtr f_;
    int n_, m_;
    Matrix flat_;  // dim x (n*m), RREF, no zero rows
};

namespace detail {

/// Walks all nonzero codewords with leading coefficient 1; every nonzero
/// codeword is a scalar multiple of exactly one visited word. The visitor
/// receives the flat word buffer; return false to stop early.
template <typename Fn>
void scan_normalized(const MatrixCode& c, Fn&& fn) {
    const Field& f = *c.field();
    const int k = c.dim();
    const int len = c.n() * c.m();
    const long q = f.size();
    std::vector<int32_t> word(static_cast<std::size_t>(len));
    std::vector<int> digits;
    auto add_row = [&](int row) {
        for (int t = 0; t < len; ++t)
            word[static_cast<std::size_t>(t)] = static_cast<int32_t>(
                f.add(word[static_cast<std::size_t>(t)], c.flat().at(row, t)));
    };
    for (int lead = 0; lead < k; ++lead) {
        std::fill(word.begin(), word.end(), 0);
        add_row(lead);
        const int tail = k - lead - 1;
        digits.assign(static_cast<std::size_t>(tail), 0);
        while (true) {
            if (!fn(static_cast<const std::vector<int32_t>&>(word))) return;
            int t = 0;
            for (; t < tail; ++t) {
                // bumping a digit adds one more copy of its generator; a
                // wrap adds the q-th copy, which restores the digit-0 word
                add_row(lead + 1 + t);
                if (++digits[static_cast<std::size_t>(t)] < q) break;
                digits[static_cast<std::size_t>(t)] = 0;
            }
            if (t == tail) break;
        }
    }
}

inline unsigned long long codeword_count(const MatrixCode& c) {
    return sat_pow(static_cast<unsigned long long>(c.field()->size()),
                   static_cast<unsigned long long>(c.dim()));
}

inline void check_codeword_guard(const MatrixCode& c, unsigned long long guard) {
    check_guard("codeword scan over " + std::to_string(c.dim()) +
                    "-dimensional code",
                codeword_count(c), guard);
}

}  // namespace detail

/// Number of codewords of each rank; exact census by normalized scan.
inline std::map<int, unsigned long long> rank_distribution(
    const MatrixCode& c, unsigned long long guard = guards::codewords) {
    detail::check_codeword_guard(c, guard);
    std::map<int, unsigned long long> dist;
    dist[0] = 1;
    const unsigned long long classes =
        static_cast<unsigned long long>(c.field()->size()) - 1;
    std::vector<int32_t> scratch(static_cast<std::size_t>(c.n() * c.m()));
    detail::scan_normalized(c, [&](const std::vector<int32_t>& w) {
        std::copy(w.begin(), w.end(), scratch.begin());
        const int r = rank_in_place(*c.field(), scratch.data(), c.n(), c.m());
        dist[r] += classes;
        return true;
    });
    return dist;
}

/// Minimum rank of a nonzero codeword. Undefined for the zero code.
inline int min_distance(const MatrixCode& c, unsigned long long guard = guards::codewords) {
    if (c.dim() == 0)
        throw std::invalid_argument("minimum distance of the zero code is undefined");
    detail::check_codeword_guard(c, guard);
    int best = std::min(c.n(), c.m());
    std::vector<int32_t> scratch(static_cast<std::size_t>(c.n() * c.m()));
    detail::scan_normalized(c, [&](const std::vector<int32_t>& w) {
        std::copy(w.begin(), w.end(), scratch.begin());
        best = std::min(best, rank_in_place(*c.field(), scratch.data(), c.n(), c.m()));
        return best > 1;
    });
    return best;
}

/// Maximum rank of a codeword; 0 for the zero code.
inline int maxrk(const MatrixCode& c, unsigned long long guard = guards::codewords) {
    if (c.dim() == 0) return 0;
    detail::check_codeword_guard(c, guard);
    int best = 0;
    const int cap = std::min(c.n(), c.m());
    std::vector<int32_t> scratch(static_cast<std::size_t>(c.n() * c.m()));
    detail::scan_normalized(c, [&](const std::vector<int32_t>& w) {
        std::copy(w.begin(), w.end(), scratch.begin());
        best = std::max(best, rank_in_place(*c.field(), scratch.data(), c.n(), c.m()));
        return best < cap;
    });
    return best;
}

/// Dual under the trace form Tr(M N^t) = sum_ij M_ij N_ij.
inline MatrixCode dual(const MatrixCode& c) {
    return MatrixCode::from_flat(c.field(), c.n(), c.m(), c.flat().kernel());
}

inline void require_oriented(const MatrixCode& c, const char* what) {
    if (c.n() > c.m())
        throw orientation_error(
            std::string(what) + " requires n <= m; transpose the code first (" +
            std::to_string(c.n()) + "x" + std::to_string(c.m()) + " given)");
}

/// Meets the Singleton-like bound dim = m (n - d + 1)?
inline bool is_mrd(const MatrixCode& c, unsigned long long guard = guards::codewords) {
    require_oriented(c, "the MRD test");
    if (c.dim() == 0)
        throw std::invalid_argument("the MRD test needs a nonzero code");
    const int d = min_distance(c, guard);
    return c.dim() == c.m() * (c.n() - d + 1);
}

/// Attains dim = m * maxrk (the anticode bound)?
inline bool is_optimal_anticode(const MatrixCode& c,
                                unsigned long long guard = guards::codewords) {
    require_oriented(c, "the optimal-anticode test");
    return c.dim() == c.m() * maxrk(c, guard);
}

/// Dimension of {M in C : side-space of M lies in X}; cheap rank form.
inline int supported_subcode_dim(const MatrixCode& c, const Subspace& x, Side side) {
    require_same_field(c.field(), x.field(), "supported subcode");
    const int keep = x.ambient();
    if ((side == Side::column && keep != c.n()) ||
        (side == Side::row && keep != c.m()))
        throw std::invalid_argument("support space has the wrong ambient dimension");
    const Matrix h = orth(x).basis();
    if (h.rows() == 0 || c.dim() == 0) return c.dim();
    Matrix t(c.field(), c.dim(),
             h.rows() * (side == Side::column ? c.m() : c.n()));
    for (int i = 0; i < c.dim(); ++i) {
        const Matrix g = c.generator(i);
        const Matrix constr = side == Side::column ? h * g : g * h.transposed();
        int t_col = 0;
        for (int r = 0; r < constr.rows(); ++r)
            for (int cc = 0; cc < constr.cols(); ++cc)
                t.set(i, t_col++, constr.at(r, cc));
    }
    return c.dim() - t.rank();
}

/// The subcode {M in C : side-space of M lies in X}, canonicalized.
inline MatrixCode supported_subcode(const MatrixCode& c, const Subspace& x, Side side) {
    require_same_field(c.field(), x.field(), "supported subcode");
    const int keep = x.ambient();
    if ((side == Side::column && keep != c.n()) ||
        (side == Side::row && keep != c.m()))
        throw std::invalid_argument("support space has the wrong ambient dimension");
    const Matrix h = orth(x).basis();
    if (h.rows() == 0 || c.dim() == 0) return c;
    Matrix t(c.field(), c.dim(),
             h.rows() * (side == Side::column ? c.m() : c.n()));
    for (int i = 0; i < c.dim(); ++i) {
        const Matrix g = c.generator(i);
        const Matrix constr = side == Side::column ? h * g : g * h.transposed();
        int t_col = 0;
        for (int r = 0; r < constr.rows(); ++r)
            for (int cc = 0; cc < constr.cols(); ++cc)
                t.set(i, t_col++, constr.at(r, cc));
    }
    // coefficient vectors of codewords satisfying the constraints
    const Matrix coeffs = t.transposed().kernel();
    return MatrixCode::from_flat(c.field(), c.n(), c.m(), coeffs * c.flat());
}

/// Sum of the column spaces of all codewords (spanned by any basis).
inline Subspace support(const MatrixCode& c) {
    Matrix cols(c.field(), c.dim() * c.m(), c.n());
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.m(); ++j)
            for (int r = 0; r < c.n(); ++r)
                cols.set(i * c.m() + j, r, c.flat().at(i, r * c.m() + j));
    return Subspace::span(cols);
}

/// The isometry M -> A M B for invertible A, B.
inline MatrixCode transform(const MatrixCode& c, const Matrix& a, const Matrix& b) {
    require_same_field(c.field(), a.field(), "transform");
    require_same_field(c.field(), b.field(), "transform");
    if (a.rows() != c.n() || a.cols() != c.n() || b.rows() != c.m() || b.cols() != c.m())
        throw std::invalid_argument("transform matrices have the wrong shape");
    if (!a.invertible() || !b.invertible())
        throw std::invalid_argument("transform matrices must be invertible");
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(c.dim()));
    for (int i = 0; i < c.dim(); ++i) gens.push_back(a * c.generator(i) * b);
    return MatrixCode::from_generators(c.field(), c.n(), c.m(), gens);
}

/// Entrywise transposition; defined for square shapes only.
inline MatrixCode transpose_code(const MatrixCode& c) {
    if (c.n() != c.m())
        throw std::invalid_argument("transposition needs a square shape n = m");
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(c.dim()));
    for (int i = 0; i < c.dim(); ++i) gens.push_back(c.generator(i).transposed());
    return MatrixCode::from_generators(c.field(), c.n(), c.m(), gens);
}

/// Largest distance from any ambient matrix to the code; exhaustive over
/// the q^(nm) ambient words.
inline int covering_radius(const MatrixCode& c,
                           unsigned long long ambient_guard = guards::ambient_words,
                           unsigned long long codeword_guard = guards::codewords) {
    const int len = c.n() * c.m();
    const long q = c.field()->size();
    check_guard("covering-radius scan over " + std::to_string(len) + " entries",
                sat_pow(static_cast<unsigned long long>(q),
                        static_cast<unsigned long long>(len)),
                ambient_guard);
    if (c.dim() == len) return 0;
    detail::check_codeword_guard(c, codeword_guard);

    // materialize the codewords once
    std::vector<std::vector<int32_t>> words;
    words.reserve(static_cast<std::size_t>(detail::codeword_count(c)));
    words.emplace_back(static_cast<std::size_t>(len), 0);
    if (c.dim() > 0) {
        const Field& f = *c.field();
        detail::scan_normalized(c, [&](const std::vector<int32_t>& w) {
            for (int s = 1; s < q; ++s) {
                std::vector<int32_t> scaled(w.size());
                for (std::size_t t = 0; t < w.size(); ++t)
                    scaled[t] = static_cast<int32_t>(f.mul(s, w[t]));
                words.push_back(std::move(scaled));
            }
            return true;
        });
    }

    const Field& f = *c.field();
    std::vector<int32_t> word(static_cast<std::size_t>(len), 0);
    std::vector<int32_t> scratch(static_cast<std::size_t>(len));
    int cov = 0;
    while (true) {
        int best = std::min(c.n(), c.m());
        for (const auto& w : words) {
            for (int t = 0; t < len; ++t)
                scratch[static_cast<std::size_t>(t)] = static_cast<int32_t>(
                    f.sub(word[static_cast<std::size_t>(t)], w[static_cast<std::size_t>(t)]));
            best = std::min(best, rank_in_place(f, scratch.data(), c.n(), c.m()));
            if (best <= cov) break;  // cannot raise the maximum
        }
        cov = std::max(cov, best);
        int t = 0;
        for (; t < len; ++t) {
            int32_t& d = word[static_cast<std::size_t>(t)];
            if (++d < q) break;
            d = 0;
        }
        if (t == len) break;
    }
    return cov;
}

struct EquivalenceWitness {
    Matrix a;          // left factor, n x n
    Matrix b;          // right factor, m x m
    bool transposed;   // whether the map transposes first (n = m only)
};

namespace detail {

/// All invertible n x n matrices over f in lexicographic entry order.
/// Cached per (field, n); the caller is responsible for guard checks.
inline const std::vector<Matrix>& general_linear_group(const FieldPtr& f, int n) {
    static std::mutex mx;
    static std::map<std::pair<std::string, int>, std::vector<Matrix>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(f->key(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Matrix> out;
    const long q = f->size();
    std::vector<int32_t> word(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int32_t> scratch(word.size());
    while (true) {
        std::copy(word.begin(), word.end(), scratch.begin());
        if (rank_in_place(*f, scratch.data(), n, n) == n) {
            Matrix m(f, n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    m.set(r, c, word[static_cast<std::size_t>(r) * n + c]);
            out.push_back(std::move(m));
        }
        // odometer with the most significant digit first, so matrices come
        // out in lexicographic row-major order
        int t = n * n - 1;
        for (; t >= 0; --t) {
            int32_t& d = word[static_cast<std::size_t>(t)];
            if (++d < q) break;
            d = 0;
        }
        if (t < 0) break;
    }
    return cache.emplace(key, std::move(out)).first->second;
}

inline unsigned long long gl_order(long q, int n) {
    unsigned long long qn = sat_pow(static_cast<unsigned long long>(q),
                                    static_cast<unsigned long long>(n));
    unsigned long long r = 1;
    unsigned long long qi = 1;
    for (int i = 0; i < n; ++i) {
        r = sat_mul(r, qn - qi);
        qi = sat_mul(qi, static_cast<unsigned long long>(q));
    }
    return r;
}

}  // namespace detail

/// Exhaustive search for an isometry M -> A M B (or A M^t B when n = m)
/// carrying c1 onto c2. Returns the first witness in (transposed, A, B)
/// lexicographic order, or nullopt after a completed search: the negative
/// is definitive. The pair count is guarded up front.
inline std::optional<EquivalenceWitness> is_equivalent(
    const MatrixCode& c1, const MatrixCode& c2,
    unsigned long long pair_guard = guards::map_pairs,
    unsigned long long codeword_guard = guards::codewords) {
    require_same_field(c1.field(), c2.field(), "code equivalence");
    if (c1.n() != c2.n() || c1.m() != c2.m())
        throw std::invalid_argument("code equivalence needs matching shapes");
    if (c1.dim() != c2.dim()) return std::nullopt;

    const long q = c1.field()->size();
    const bool square = c1.n() == c1.m();
    const unsigned long long pairs =
        sat_mul(sat_mul(detail::gl_order(q, c1.n()), detail::gl_order(q, c1.m())),
                square ? 2 : 1);
    check_guard("equivalence search", pairs, pair_guard);

    // rank distributions are isometry invariants; cheap pruning when the
    // codeword scan itself is feasible
    if (detail::codeword_count(c1) <= codeword_guard &&
        rank_distribution(c1, codeword_guard) != rank_distribution(c2, codeword_guard))
        return std::nullopt;

    const auto& gl_n = detail::general_linear_group(c1.field(), c1.n());
    const auto& gl_m = detail::general_linear_group(c1.field(), c1.m());
    for (int pass = 0; pass < (square ? 2 : 1); ++pass) {
        const MatrixCode base = pass == 0 ? c1 : transpose_code(c1);
        for (const Matrix& a : gl_n)
            for (const Matrix& b : gl_m)
                if (transform(base, a, b) == c2)
                    return EquivalenceWitness{a, b, pass == 1};
    }
    return std::nullopt;
}

}  // namespace qrmc
