#pragma once

/// Rank-metric codes given as F_{q^m}-linear subspaces of F_{q^m}^n.
///
/// A vector code is stored as the RREF of its generator matrix over the
/// extension field. Expansion along an F_q-basis gamma of F_{q^m} turns a
/// vector v into the n x m base-field matrix whose i-th row holds the
/// gamma-coordinates of v_i; the expansion of a code is the base-linear
/// span of the expansions of its codewords, a matrix code of dimension m*k.

#include <optional>
#include <string>
#include <vector>

#include "extension.hpp"
#include "matrix_code.hpp"

namespace qrmc {

class VectorCode {
public:
    /// Span of the rows of gen, a matrix over the extension field.
    static VectorCode from_generators(TowerPtr t, int n, const Matrix& gen) {
        if (n < 1) throw std::invalid_argument("code length must be at least 1");
        if (gen.cols() != n)
            throw std::invalid_argument("generator rows must have length " +
                                        std::to_string(n));
        require_same_field(t->ext(), gen.field(), "vector code generators");
        return VectorCode(std::move(t), n, gen.row_basis());
    }

    static VectorCode zero(TowerPtr t, int n) {
        if (n < 1) throw std::invalid_argument("code length must be at least 1");
        Matrix none(t->ext(), 0, n);
        return VectorCode(std::move(t), n, std::move(none));
    }

    static VectorCode full(TowerPtr t, int n) {
        if (n < 1) throw std::invalid_argument("code length must be at least 1");
        Matrix id = Matrix::identity(t->ext(), n);
        return VectorCode(std::move(t), n, std::move(id));
    }

    int n() const noexcept { return n_; }

    /// Dimension over the extension field.
    int k() const noexcept { return gen_.rows(); }

    const TowerPtr& tower() const noexcept { return t_; }
    const Matrix& gen() const noexcept { return gen_; }

    bool contains(const Matrix& row) const {
        if (row.rows() != 1 || row.cols() != n_ || !same_field(row.field(), t_->ext()))
            return false;
        return gen_.vstack(row).rank() == k();
    }

    std::string key() const { return std::to_string(n_) + ":" + gen_.key(); }

    friend bool operator==(const VectorCode& a, const VectorCode& b) {
        return a.t_->same(*b.t_) && a.n_ == b.n_ && a.gen_ == b.gen_;
    }
    friend bool operator!=(const VectorCode& a, const VectorCode& b) {
        return !(a == b);
    }

private:
    VectorCode(TowerPtr t, int n, Matrix gen)
        : t_(std::move(t)), n_(n), gen_(std::move(gen)) {}

    TowerPtr t_;
    int n_;
    Matrix gen_;  // k x n over the extension, RREF
};

/// Expansion of one vector: row i holds the gamma-coordinates of v[i].
inline Matrix expand_vector(const ExtensionBasis& gamma, const Matrix& v) {
    const TowerPtr& t = gamma.tower();
    if (v.rows() != 1 || !same_field(v.field(), t->ext()))
        throw std::invalid_argument("expansion expects a row vector over the extension");
    Matrix out(t->base(), v.cols(), t->m());
    for (int i = 0; i < v.cols(); ++i) {
        const std::vector<int32_t> c = gamma.coords(v.at(0, i));
        for (int j = 0; j < t->m(); ++j) out.set(i, j, c[static_cast<std::size_t>(j)]);
    }
    return out;
}

/// Rank weight of a vector: the rank of its expansion, the same for every
/// choice of basis.
inline int rank_weight(const TowerPtr& t, const Matrix& v) {
    return expand_vector(default_basis(t), v).rank();
}

/// Dual under the standard bilinear form sum_i u_i v_i over the extension.
inline VectorCode vdual(const VectorCode& c) {
    return VectorCode::from_generators(c.tower(), c.n(), c.gen().kernel());
}

/// Expansion of a code along gamma: the base-field span of the expansions
/// of its codewords, an n x m matrix code of dimension m*k.
inline MatrixCode gamma_expand(const VectorCode& c, const ExtensionBasis& gamma) {
    const TowerPtr& t = c.tower();
    if (!t->same(*gamma.tower()))
        throw std::invalid_argument("expansion basis belongs to a different tower");
    const FieldPtr& ext = t->ext();
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(c.k()) * static_cast<std::size_t>(t->m()));
    for (int i = 0; i < c.k(); ++i)
        for (int j = 0; j < t->m(); ++j) {
            // gamma_j * (i-th generator) ranges over an F_q-basis of the code
            Matrix row(ext, 1, c.n());
            for (int s = 0; s < c.n(); ++s)
                row.set(0, s, ext->mul(gamma.elements()[static_cast<std::size_t>(j)],
                                       c.gen().at(i, s)));
            gens.push_back(expand_vector(gamma, row));
        }
    return MatrixCode::from_generators(t->base(), c.n(), t->m(), gens);
}

inline MatrixCode gamma_expand(const VectorCode& c) {
    return gamma_expand(c, default_basis(c.tower()));
}

/// Minimum rank weight of a nonzero codeword.
inline int vmin_distance(const VectorCode& c,
                         unsigned long long guard = guards::codewords) {
    if (c.k() == 0)
        throw std::invalid_argument("minimum distance of the zero code is undefined");
    return min_distance(gamma_expand(c), guard);
}

/// Evaluation code of the q-polynomials of q-degree < k at the given
/// points: row i of the generator matrix is the q^i-th Frobenius power of
/// the point row. Points default to the first n elements of the power
/// basis and must be linearly independent over the base, which forces
/// n <= m; the minimum distance is then exactly n - k + 1.
inline VectorCode gabidulin(const TowerPtr& t, int n, int k,
                            std::vector<int32_t> points = {}) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("evaluation code needs 1 <= k <= n");
    if (points.empty()) {
        if (n > t->m())
            throw std::invalid_argument(
                "length exceeds the extension degree; supply " + std::to_string(n) +
                " independent points explicitly (none exist)");
        points.assign(t->power_basis().begin(), t->power_basis().begin() + n);
    }
    if (static_cast<int>(points.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " evaluation points");
    ExtensionBasis gamma = default_basis(t);
    Matrix pts(t->ext(), 1, n);
    for (int i = 0; i < n; ++i) pts.set(0, i, points[static_cast<std::size_t>(i)]);
    if (expand_vector(gamma, pts).rank() != n)
        throw std::invalid_argument(
            "evaluation points are linearly dependent over the base field");
    Matrix gen(t->ext(), k, n);
    for (int j = 0; j < n; ++j) {
        int cur = points[static_cast<std::size_t>(j)];
        for (int i = 0; i < k; ++i) {
            gen.set(i, j, cur);
            cur = t->frobenius(cur);
        }
    }
    return VectorCode::from_generators(t, n, gen);
}

/// The rank isometry v -> alpha * (v B) with alpha a nonzero extension
/// element and B an invertible n x n matrix over the base field.
inline VectorCode vtransform(const VectorCode& c, int alpha, const Matrix& b) {
    const TowerPtr& t = c.tower();
    t->ext()->check(alpha, "scale factor");
    if (alpha == 0) throw std::invalid_argument("scale factor must be nonzero");
    require_same_field(t->base(), b.field(), "transform matrix");
    if (b.rows() != c.n() || b.cols() != c.n())
        throw std::invalid_argument("transform matrix has the wrong shape");
    if (!b.invertible())
        throw std::invalid_argument("transform matrix must be invertible");
    const FieldPtr& ext = t->ext();
    Matrix be(ext, c.n(), c.n());
    for (int r = 0; r < c.n(); ++r)
        for (int s = 0; s < c.n(); ++s) be.set(r, s, t->embed(b.at(r, s)));
    Matrix moved = c.gen() * be;
    Matrix out(ext, moved.rows(), moved.cols());
    for (int r = 0; r < moved.rows(); ++r)
        for (int s = 0; s < moved.cols(); ++s)
            out.set(r, s, ext->mul(alpha, moved.at(r, s)));
    return VectorCode::from_generators(t, c.n(), out);
}

}  // namespace qrmc
