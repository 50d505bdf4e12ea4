#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <qrmc/subspace.hpp>

using namespace qrmc;

namespace {

Matrix random_matrix(const FieldPtr& f, int r, int c, std::mt19937& rng) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(f->size()) - 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, dist(rng));
    return m;
}

Subspace random_subspace(const FieldPtr& f, int ambient, std::mt19937& rng) {
    std::uniform_int_distribution<int> rows(0, ambient);
    return Subspace::span(random_matrix(f, rows(rng), ambient, rng));
}

}  // namespace

TEST_CASE("rref and rank") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("hand-checked reductions") {
        Matrix a = Matrix::from_rows(f2, {{0, 1, 1}, {1, 1, 0}});
        REQUIRE(a.rref() == Matrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));
        REQUIRE(a.rank() == 2);

        Matrix b = Matrix::from_rows(f3, {{2, 1}, {1, 2}});
        REQUIRE(b.rref() == Matrix::from_rows(f3, {{1, 2}, {0, 0}}));
        REQUIRE(b.rank() == 1);

        Matrix c = Matrix::from_rows(f2, {{1, 1}, {1, 1}, {0, 0}});
        REQUIRE(c.rank() == 1);
    }
    SECTION("rref is idempotent and rank-preserving on random input") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            auto f = trial % 2 == 0 ? f2 : f3;
            Matrix m = random_matrix(f, 1 + trial % 5, 1 + (trial / 2) % 5, rng);
            Matrix r = m.rref();
            REQUIRE(r.rref() == r);
            REQUIRE(r.rank() == m.rank());
        }
    }
    SECTION("kernel vectors satisfy the system and count dimensions") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            auto f = trial % 2 == 0 ? f2 : f3;
            Matrix m = random_matrix(f, 1 + trial % 4, 1 + (trial / 3) % 5, rng);
            Matrix k = m.kernel();
            REQUIRE(k.rows() == m.cols() - m.rank());
            if (k.rows() > 0) REQUIRE((m * k.transposed()).is_zero());
        }
    }
    SECTION("inverse") {
        Matrix a = Matrix::from_rows(f3, {{1, 1}, {1, 2}});
        auto inv = a.inverse();
        REQUIRE(inv.has_value());
        REQUIRE((a * *inv) == Matrix::identity(f3, 2));
        Matrix s = Matrix::from_rows(f3, {{1, 1}, {2, 2}});
        REQUIRE_FALSE(s.inverse().has_value());
        REQUIRE_FALSE(s.invertible());
    }
    SECTION("entry validation") {
        REQUIRE_THROWS_AS(Matrix::from_rows(f2, {{0, 2}}), std::invalid_argument);
        REQUIRE_THROWS_AS(Matrix::from_rows(f2, {{0, 1}, {1}}), std::invalid_argument);
    }
}

TEST_CASE("subspace operations") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("column and row space") {
        Matrix m = Matrix::from_rows(f2, {{1, 1}, {0, 0}});
        REQUIRE(column_space(m) == Subspace::span(Matrix::from_rows(f2, {{1, 0}})));
        REQUIRE(row_space(m) == Subspace::span(Matrix::from_rows(f2, {{1, 1}})));
    }
    SECTION("orth in F_3^2") {
        Subspace j = Subspace::span(Matrix::from_rows(f3, {{1, 0}}));
        REQUIRE(orth(j) == Subspace::span(Matrix::from_rows(f3, {{0, 1}})));
    }
    SECTION("orth is an involution with complementary dimension") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 150; ++trial) {
            auto f = trial % 2 == 0 ? f2 : f3;
            Subspace s = random_subspace(f, 1 + trial % 5, rng);
            REQUIRE(orth(s).dim() == s.ambient() - s.dim());
            REQUIRE(orth(orth(s)) == s);
        }
    }
    SECTION("sum and intersection against brute-force membership") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            auto f = trial % 2 == 0 ? f2 : f3;
            const int k = 3;
            Subspace a = random_subspace(f, k, rng);
            Subspace b = random_subspace(f, k, rng);
            Subspace i = intersect(a, b);
            Subspace u = sum(a, b);
            REQUIRE(i.dim() == a.dim() + b.dim() - u.dim());
            const long q = f->size();
            for (long w = 0; w < q * q * q; ++w) {
                std::vector<long> v = {w % q, (w / q) % q, (w / q / q) % q};
                REQUIRE(i.contains(v) == (a.contains(v) && b.contains(v)));
                if (a.contains(v) || b.contains(v)) REQUIRE(u.contains(v));
            }
            REQUIRE(u.contains(a));
            REQUIRE(u.contains(b));
            REQUIRE(a.contains(i));
        }
    }
    SECTION("modular law for subspaces") {
        // dim(A + B) + dim(A meet B) == dim A + dim B
        std::mt19937 rng(9);
        for (int trial = 0; trial < 120; ++trial) {
            auto f = trial % 2 == 0 ? f2 : f3;
            const int k = 4;
            Subspace a = random_subspace(f, k, rng);
            Subspace b = random_subspace(f, k, rng);
            REQUIRE(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
        }
    }
}

TEST_CASE("subspace enumeration") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("F_2^2 has five subspaces") {
        auto all = enumerate_subspaces(f2, 2);
        REQUIRE(all.size() == 5);
        REQUIRE(all.front().is_zero());
        REQUIRE(all.back().is_full());
    }
    SECTION("counts match Gaussian binomials") {
        REQUIRE(gaussian_binomial(2, 4, 2) == 35);
        REQUIRE(gaussian_binomial(3, 4, 2) == 130);
        REQUIRE(subspace_total(2, 4) == 67);
        REQUIRE(subspace_total(3, 4) == 212);
        for (long q : {2L, 3L}) {
            auto f = q == 2 ? f2 : f3;
            for (int k = 0; k <= 4; ++k) {
                if (q == 3 && k > 3) continue;
                auto all = enumerate_subspaces(f, k);
                REQUIRE(all.size() == subspace_total(q, k));
                for (int d = 0; d <= k; ++d) {
                    auto level = enumerate_subspaces(f, k, d);
                    REQUIRE(level.size() == gaussian_binomial(q, k, d));
                    for (const auto& s : level) REQUIRE(s.dim() == d);
                }
            }
        }
    }
    SECTION("order is by dimension then key, without duplicates") {
        auto all = enumerate_subspaces(f3, 3);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            REQUIRE(seen.insert(all[i].key()).second);
            if (i > 0) {
                const auto& a = all[i - 1];
                const auto& b = all[i];
                REQUIRE((a.dim() < b.dim() ||
                         (a.dim() == b.dim() && a.key() < b.key())));
            }
        }
    }
    SECTION("guard refusal carries the exact count") {
        try {
            enumerate_subspaces(f2, 5, std::nullopt, 300);
            FAIL("guard did not trigger");
        } catch (const guard_exceeded& e) {
            REQUIRE(e.count() == subspace_total(2, 5));
            REQUIRE(std::string(e.what()).find(std::to_string(e.count())) !=
                    std::string::npos);
        }
    }
}

TEST_CASE("subspace lattice tables") {
    auto f2 = Field::create(2, 1);
    auto lat = SubspaceLattice::get(f2, 3);
    REQUIRE(lat->size() == static_cast<int>(subspace_total(2, 3)));
    for (int i = 0; i < lat->size(); ++i) {
        const auto& s = lat->spaces()[static_cast<std::size_t>(i)];
        REQUIRE(lat->index_of(s) == i);
        REQUIRE(lat->dim(lat->orth_index(i)) == 3 - s.dim());
        for (int j = 0; j < lat->size(); ++j) {
            const auto& t = lat->spaces()[static_cast<std::size_t>(j)];
            REQUIRE(lat->spaces()[static_cast<std::size_t>(lat->sum_index(i, j))] ==
                    sum(s, t));
            REQUIRE(lat->spaces()[static_cast<std::size_t>(lat->meet_index(i, j))] ==
                    intersect(s, t));
            REQUIRE(lat->leq(i, j) == t.contains(s));
        }
    }
    REQUIRE(lat->dim(lat->zero_index()) == 0);
    REQUIRE(lat->dim(lat->full_index()) == 3);
    // cached: same object comes back
    REQUIRE(SubspaceLattice::get(f2, 3).get() == lat.get());
}
