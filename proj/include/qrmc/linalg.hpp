#pragma once

/// Dense matrices over a runtime finite field, with the row-reduction
/// toolkit the rest of the library is built on: RREF, rank, kernel,
/// inverse. Reduction is deterministic (leftmost pivot, topmost row), so
/// RREF output is a canonical representative of the row space.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace qrmc {

class Matrix {
public:
    Matrix() = default;

    Matrix(FieldPtr field, int rows, int cols)
        : f_(std::move(field)), r_(rows), c_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
        if (!f_) throw std::invalid_argument("matrix without a field");
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("matrix shape must be non-negative");
    }

    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<long>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        Matrix m(std::move(field), r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("ragged rows in matrix literal");
            for (int j = 0; j < c; ++j) {
                long v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                m.f_->check(v);
                m.a_[m.idx(i, j)] = static_cast<int32_t>(v);
            }
        }
        return m;
    }

    static Matrix identity(FieldPtr field, int n) {
        Matrix m(std::move(field), n, n);
        for (int i = 0; i < n; ++i) m.a_[m.idx(i, i)] = 1;
        return m;
    }

    int rows() const noexcept { return r_; }
    int cols() const noexcept { return c_; }
    const FieldPtr& field() const noexcept { return f_; }
    bool empty() const noexcept { return r_ == 0 || c_ == 0; }

    int at(int r, int c) const {
        bounds(r, c);
        return a_[idx(r, c)];
    }
    void set(int r, int c, long v) {
        bounds(r, c);
        f_->check(v);
        a_[idx(r, c)] = static_cast<int32_t>(v);
    }

    std::vector<long> row(int r) const {
        bounds(r, 0);
        std::vector<long> out(static_cast<std::size_t>(c_));
        for (int j = 0; j < c_; ++j) out[static_cast<std::size_t>(j)] = a_[idx(r, j)];
        return out;
    }

    bool is_zero() const {
        for (int32_t v : a_)
            if (v != 0) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        compatible(o, "matrix addition");
        Matrix m(f_, r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            m.a_[i] = static_cast<int32_t>(f_->add(a_[i], o.a_[i]));
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        compatible(o, "matrix subtraction");
        Matrix m(f_, r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            m.a_[i] = static_cast<int32_t>(f_->sub(a_[i], o.a_[i]));
        return m;
    }

    Matrix scaled(int c) const {
        Matrix m(f_, r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            m.a_[i] = static_cast<int32_t>(f_->mul(c, a_[i]));
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(f_, o.f_, "matrix product");
        if (c_ != o.r_)
            throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(f_, r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const int v = a_[idx(i, k)];
                if (v == 0) continue;
                for (int j = 0; j < o.c_; ++j)
                    m.a_[m.idx(i, j)] = static_cast<int32_t>(
                        f_->add(m.a_[m.idx(i, j)], f_->mul(v, o.a_[o.idx(k, j)])));
            }
        return m;
    }

    Matrix transposed() const {
        Matrix m(f_, c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.a_[m.idx(j, i)] = a_[idx(i, j)];
        return m;
    }

    Matrix vstack(const Matrix& o) const {
        require_same_field(f_, o.f_, "vstack");
        if (c_ != o.c_) throw std::invalid_argument("vstack column mismatch");
        Matrix m(f_, r_ + o.r_, c_);
        std::copy(a_.begin(), a_.end(), m.a_.begin());
        std::copy(o.a_.begin(), o.a_.end(), m.a_.begin() + static_cast<long>(a_.size()));
        return m;
    }

    /// Gauss-Jordan to reduced row echelon form; returns the pivot columns.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int piv = -1;
            for (int i = row; i < r_; ++i)
                if (a_[idx(i, col)] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != row)
                for (int j = 0; j < c_; ++j)
                    std::swap(a_[idx(piv, j)], a_[idx(row, j)]);
            const int inv = f_->inv(a_[idx(row, col)]);
            if (inv != 1)
                for (int j = col; j < c_; ++j)
                    a_[idx(row, j)] = static_cast<int32_t>(f_->mul(inv, a_[idx(row, j)]));
            for (int i = 0; i < r_; ++i) {
                if (i == row) continue;
                const int v = a_[idx(i, col)];
                if (v == 0) continue;
                for (int j = col; j < c_; ++j)
                    a_[idx(i, j)] = static_cast<int32_t>(
                        f_->sub(a_[idx(i, j)], f_->mul(v, a_[idx(row, j)])));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    Matrix rref() const {
        Matrix m = *this;
        m.rref_in_place();
        return m;
    }

    /// RREF with zero rows dropped: the canonical basis of the row space.
    Matrix row_basis() const {
        Matrix m = *this;
        const int rank = static_cast<int>(m.rref_in_place().size());
        Matrix out(f_, rank, c_);
        std::copy(m.a_.begin(), m.a_.begin() + static_cast<long>(out.a_.size()),
                  out.a_.begin());
        return out;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref_in_place().size());
    }

    /// Canonical basis (as rows) of {x : this * x^t = 0}.
    Matrix kernel() const {
        Matrix m = *this;
        const std::vector<int> pivots = m.rref_in_place();
        std::vector<bool> is_pivot(static_cast<std::size_t>(c_), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        Matrix out(f_, c_ - static_cast<int>(pivots.size()), c_);
        int k = 0;
        for (int free = 0; free < c_; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            out.a_[out.idx(k, free)] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                out.a_[out.idx(k, pivots[i])] = static_cast<int32_t>(
                    f_->neg(m.a_[m.idx(static_cast<int>(i), free)]));
            ++k;
        }
        return out.row_basis();
    }

    std::optional<Matrix> inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
        Matrix aug(f_, r_, 2 * c_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug.a_[aug.idx(i, j)] = a_[idx(i, j)];
            aug.a_[aug.idx(i, c_ + i)] = 1;
        }
        const std::vector<int> pivots = aug.rref_in_place();
        // singular iff any pivot falls into the identity block
        if (r_ > 0 && (static_cast<int>(pivots.size()) != r_ || pivots.back() >= c_))
            return std::nullopt;
        Matrix inv(f_, r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) inv.a_[inv.idx(i, j)] = aug.a_[aug.idx(i, c_ + j)];
        return inv;
    }

    bool invertible() const { return r_ == c_ && rank() == r_; }

    /// Byte key: shape then entries, fixed width; equal keys iff equal
    /// matrices over the same field.
    std::string key() const {
        std::string s;
        s.reserve(8 + a_.size() * 4);
        append32(s, static_cast<std::uint32_t>(r_));
        append32(s, static_cast<std::uint32_t>(c_));
        for (int32_t v : a_) append32(s, static_cast<std::uint32_t>(v));
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return same_field(a.f_, b.f_) && a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // raw access for hot loops; no bounds checks
    int32_t* data() noexcept { return a_.data(); }
    const int32_t* data() const noexcept { return a_.data(); }

private:
    static void append32(std::string& s, std::uint32_t v) {
        s.push_back(static_cast<char>((v >> 24) & 0xff));
        s.push_back(static_cast<char>((v >> 16) & 0xff));
        s.push_back(static_cast<char>((v >> 8) & 0xff));
        s.push_back(static_cast<char>(v & 0xff));
    }

    std::size_t idx(int r, int c) const noexcept {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(c_) +
               static_cast<std::size_t>(c);
    }
    void bounds(int r, int c) const {
        if (r < 0 || r >= r_ || c < 0 || c >= c_)
            throw std::invalid_argument("matrix index out of range");
    }
    void compatible(const Matrix& o, const char* what) const {
        require_same_field(f_, o.f_, what);
        if (r_ != o.r_ || c_ != o.c_)
            throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }

    FieldPtr f_;
    int r_ = 0, c_ = 0;
    std::vector<int32_t> a_;
};

/// Rank of a flat row-major buffer, allocation-free; used by scan loops.
/// The buffer is destroyed in place.
inline int rank_in_place(const Field& f, int32_t* a, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i * cols + col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rank * cols + j]);
        const int inv = f.inv(a[rank * cols + col]);
        if (inv != 1)
            for (int j = col; j < cols; ++j)
                a[rank * cols + j] = static_cast<int32_t>(f.mul(inv, a[rank * cols + j]));
        for (int i = rank + 1; i < rows; ++i) {
            const int v = a[i * cols + col];
            if (v == 0) continue;
            for (int j = col; j < cols; ++j)
                a[i * cols + j] = static_cast<int32_t>(
                    f.sub(a[i * cols + j], f.mul(v, a[rank * cols + j])));
        }
        ++rank;
    }
    return rank;
}

}  // namespace qrmc
