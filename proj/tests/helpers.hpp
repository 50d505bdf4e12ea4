#pragma once

// Shared fixtures for the test suites: the small hand-checked codes and
// random-sampling helpers with fixed seeds.

#include <random>
#include <vector>

#include "qrmc/extension.hpp"
#include "qrmc/matrix_code.hpp"

namespace qrmc::testing {

inline Matrix mat(const FieldPtr& f, std::vector<std::vector<long>> rows) {
    return Matrix::from_rows(f, rows);
}

// dim-3 code in Mat(3x3, F_2) with one word of every rank
inline MatrixCode worked_example(const FieldPtr& f2) {
    return MatrixCode::from_generators(
        f2, 3, 3,
        {mat(f2, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
         mat(f2, {{0, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
         mat(f2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}})});
}

// all 2x2 binary matrices with rows in <(1,1)>
inline MatrixCode row_line_code(const FieldPtr& f2) {
    return MatrixCode::from_generators(
        f2, 2, 2, {mat(f2, {{1, 1}, {0, 0}}), mat(f2, {{0, 0}, {1, 1}})});
}

// the 4x4 binary MRD code with covering radius 2
inline MatrixCode mrd_4x4_first(const FieldPtr& f2) {
    return MatrixCode::from_generators(
        f2, 4, 4,
        {mat(f2, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}),
         mat(f2, {{0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}, {1, 1, 0, 0}}),
         mat(f2, {{0, 0, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}}),
         mat(f2, {{0, 0, 0, 1}, {1, 1, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 1}})});
}

// dim-3 code over F_3 in Mat(2x2) whose rank table is not integer-valued
inline MatrixCode nonmatroid_example(const FieldPtr& f3) {
    return MatrixCode::from_generators(
        f3, 2, 2,
        {mat(f3, {{1, 0}, {0, 0}}), mat(f3, {{0, 1}, {0, 0}}),
         mat(f3, {{0, 0}, {1, 0}})});
}

// the two dim-2 binary 2x2 codes with equal weights but distinct tables
inline MatrixCode pair_c1(const FieldPtr& f2) {
    return MatrixCode::from_generators(
        f2, 2, 2, {mat(f2, {{1, 0}, {0, 1}}), mat(f2, {{0, 1}, {0, 0}})});
}

inline MatrixCode pair_c2(const FieldPtr& f2) {
    return MatrixCode::from_generators(
        f2, 2, 2, {mat(f2, {{0, 1}, {1, 0}}), mat(f2, {{0, 1}, {0, 0}})});
}

inline MatrixCode random_code(const FieldPtr& f, int n, int m, int k,
                              std::mt19937& rng) {
    std::uniform_int_distribution<long> pick(0, f->size() - 1);
    while (true) {
        std::vector<Matrix> gens;
        for (int i = 0; i < k; ++i) {
            Matrix g(f, n, m);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < m; ++c) g.set(r, c, pick(rng));
            gens.push_back(std::move(g));
        }
        MatrixCode c = MatrixCode::from_generators(f, n, m, gens);
        if (c.dim() == k) return c;
    }
}

inline Matrix random_invertible(const FieldPtr& f, int n, std::mt19937& rng) {
    std::uniform_int_distribution<long> pick(0, f->size() - 1);
    while (true) {
        Matrix a(f, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a.set(r, c, pick(rng));
        if (a.invertible()) return a;
    }
}

}  // namespace qrmc::testing
