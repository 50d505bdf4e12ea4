#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "qrmc/qpolymatroid.hpp"

using namespace qrmc;
using namespace qrmc::testing;

namespace {

Subspace line(const FieldPtr& f, std::vector<long> v) {
    return Subspace::span(Matrix::from_rows(f, {v}));
}

// table over the F_2^2 lattice in its canonical order:
// zero, <(0,1)>, <(1,0)>, <(1,1)>, full
QPolymatroid table_2_2(const FieldPtr& f2, std::vector<Rat> vals) {
    return QPolymatroid(SubspaceLattice::get(f2, 2), std::move(vals));
}

}  // namespace

TEST_CASE("rank function values") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("non-integer rank values over F_3") {
        MatrixCode c = nonmatroid_example(f3);
        REQUIRE(rho(c, line(f3, {1, 0}), Side::column) == Rat(1));
        REQUIRE(rho(c, line(f3, {0, 1}), Side::column) == Rat(1, 2));
        REQUIRE(rho(c, Subspace::zero(f3, 2), Side::column) == Rat(0));
        REQUIRE(rho(c, Subspace::full(f3, 2), Side::column) == Rat(3, 2));
    }

    SECTION("full-space ranks recover the dimension") {
        std::mt19937 rng(314);
        for (int trial = 0; trial < 10; ++trial) {
            const FieldPtr& f = trial % 2 ? f3 : f2;
            MatrixCode c = random_code(f, 2, 3, trial % 5, rng);
            REQUIRE(rho(c, Subspace::full(f, 2), Side::column) * c.m() == Rat(c.dim()));
            REQUIRE(rho(c, Subspace::full(f, 3), Side::row) * c.n() == Rat(c.dim()));
        }
    }

    SECTION("validation") {
        MatrixCode tall = MatrixCode::full(f2, 3, 2);
        REQUIRE_THROWS_AS(rho(tall, Subspace::zero(f2, 3), Side::column),
                          orientation_error);
        MatrixCode c = worked_example(f2);
        REQUIRE_THROWS_AS(rho(c, Subspace::zero(f2, 2), Side::column),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(rho(c, Subspace::zero(f3, 3), Side::column),
                          std::invalid_argument);
    }
}

TEST_CASE("rank tables") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("the two displayed 2x2 tables") {
        QPolymatroid p1 = build_qpm(pair_c1(f2), Side::column);
        QPolymatroid p2 = build_qpm(pair_c2(f2), Side::column);
        std::vector<Rat> want1{Rat(0), Rat(1, 2), Rat(1), Rat(1), Rat(1)};
        std::vector<Rat> want2{Rat(0), Rat(1, 2), Rat(1, 2), Rat(1), Rat(1)};
        REQUIRE(p1.values() == want1);
        REQUIRE(p2.values() == want2);
    }

    SECTION("zero and full codes") {
        QPolymatroid z = build_qpm(MatrixCode::zero(f3, 2, 2), Side::column);
        for (const Rat& v : z.values()) REQUIRE(v == Rat(0));
        REQUIRE(check_axioms(z).ok);
        QPolymatroid full = build_qpm(MatrixCode::full(f3, 2, 2), Side::column);
        for (int i = 0; i < full.lattice()->size(); ++i)
            REQUIRE(full.value_at(static_cast<std::size_t>(i)) ==
                    Rat(full.lattice()->dim(i)));
    }

    SECTION("table agrees with pointwise evaluation") {
        std::mt19937 rng(2718);
        MatrixCode c = random_code(f3, 2, 3, 2, rng);
        for (Side side : {Side::column, Side::row}) {
            QPolymatroid p = build_qpm(c, side);
            for (const Subspace& x : p.lattice()->spaces())
                REQUIRE(p.rank(x) == rho(c, x, side));
        }
    }

    SECTION("value count must match the lattice") {
        REQUIRE_THROWS_AS(table_2_2(f2, {Rat(0), Rat(1)}), std::invalid_argument);
    }
}

TEST_CASE("axiom checking") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("code tables always pass") {
        std::mt19937 rng(161803);
        for (int trial = 0; trial < 8; ++trial) {
            const FieldPtr& f = trial % 2 ? f3 : f2;
            MatrixCode c = random_code(f, 2, 2 + trial % 2, trial % 5, rng);
            for (Side side : {Side::column, Side::row})
                REQUIRE(check_axioms(build_qpm(c, side)).ok);
        }
    }

    SECTION("boundedness violation") {
        AxiomReport r = check_axioms(
            table_2_2(f2, {Rat(0), Rat(2), Rat(0), Rat(0), Rat(1)}));
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.axiom == "P1");
        REQUIRE(r.a == line(f2, {0, 1}));
        REQUIRE_FALSE(r.b.has_value());
        AxiomReport neg = check_axioms(
            table_2_2(f2, {Rat(0), Rat(-1, 2), Rat(0), Rat(0), Rat(1)}));
        REQUIRE(neg.axiom == "P1");
    }

    SECTION("monotonicity violation") {
        AxiomReport r = check_axioms(
            table_2_2(f2, {Rat(0), Rat(1), Rat(1), Rat(1), Rat(0)}));
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.axiom == "P2");
        REQUIRE(r.a == line(f2, {0, 1}));
        REQUIRE(r.b == Subspace::full(f2, 2));
    }

    SECTION("submodularity violation") {
        AxiomReport r = check_axioms(table_2_2(
            f2, {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(3, 2)}));
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.axiom == "P3");
        REQUIRE(r.a == line(f2, {0, 1}));
        REQUIRE(r.b == line(f2, {1, 0}));
        REQUIRE_FALSE(r.detail.empty());
    }
}

TEST_CASE("table duality") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("dual of the uniform table is uniform") {
        for (int d = 1; d <= 3; ++d) {
            QPolymatroid u = uniform_mrd_table(f2, 3, 3, d);
            QPolymatroid du = qpm_dual(u);
            const int k = 3 - d + 1;
            for (int i = 0; i < du.lattice()->size(); ++i)
                REQUIRE(du.value_at(static_cast<std::size_t>(i)) ==
                        Rat(std::min(du.lattice()->dim(i), 3 - k)));
        }
    }

    SECTION("dual of the zero table is the free table") {
        QPolymatroid z = build_qpm(MatrixCode::zero(f3, 2, 2), Side::column);
        QPolymatroid dz = qpm_dual(z);
        for (int i = 0; i < dz.lattice()->size(); ++i)
            REQUIRE(dz.value_at(static_cast<std::size_t>(i)) ==
                    Rat(dz.lattice()->dim(i)));
    }

    SECTION("involution and validity on code tables") {
        std::mt19937 rng(1414);
        for (int trial = 0; trial < 6; ++trial) {
            const FieldPtr& f = trial % 2 ? f3 : f2;
            MatrixCode c = random_code(f, 2, 3, 1 + trial % 4, rng);
            QPolymatroid p = build_qpm(c, Side::column);
            QPolymatroid dp = qpm_dual(p);
            REQUIRE(check_axioms(dp).ok);
            REQUIRE(qpm_equal(qpm_dual(dp), p));
        }
    }

    SECTION("code duality commutes with table duality") {
        std::mt19937 rng(577);
        for (int trial = 0; trial < 6; ++trial) {
            const FieldPtr& f = trial % 2 ? f3 : f2;
            MatrixCode c = random_code(f, 2, 2 + trial % 2, trial % 5, rng);
            for (Side side : {Side::column, Side::row})
                REQUIRE(qpm_equal(qpm_dual(build_qpm(c, side)),
                                  build_qpm(dual(c), side)));
        }
    }
}

TEST_CASE("table equality and equivalence") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("cross-ground comparisons are rejected") {
        QPolymatroid a = build_qpm(MatrixCode::zero(f2, 2, 2), Side::column);
        QPolymatroid b = build_qpm(MatrixCode::zero(f3, 2, 2), Side::column);
        QPolymatroid c = build_qpm(MatrixCode::zero(f2, 3, 3), Side::column);
        REQUIRE_THROWS_AS(qpm_equal(a, b), std::invalid_argument);
        REQUIRE_THROWS_AS(qpm_equal(a, c), std::invalid_argument);
        REQUIRE_THROWS_AS(qpm_equivalent(a, b), std::invalid_argument);
    }

    SECTION("the displayed pair: equal weights, inequivalent tables") {
        QPolymatroid p1 = build_qpm(pair_c1(f2), Side::column);
        QPolymatroid p2 = build_qpm(pair_c2(f2), Side::column);
        REQUIRE_FALSE(qpm_equal(p1, p2));
        REQUIRE_FALSE(qpm_equivalent(p1, p2).has_value());
        // within each code, column and row tables are equivalent
        QPolymatroid r1 = build_qpm(pair_c1(f2), Side::row);
        auto phi = qpm_equivalent(p1, r1);
        REQUIRE(phi.has_value());
        for (const Subspace& x : p1.lattice()->spaces())
            REQUIRE(p1.rank(x) == r1.rank(Subspace::span(x.basis() * *phi)));
        REQUIRE(qpm_equivalent(build_qpm(pair_c2(f2), Side::column),
                               build_qpm(pair_c2(f2), Side::row))
                    .has_value());
    }

    SECTION("equivalent codes give equivalent tables") {
        std::mt19937 rng(6022);
        for (int trial = 0; trial < 5; ++trial) {
            MatrixCode c = random_code(f3, 2, 2, 1 + trial % 3, rng);
            MatrixCode moved = transform(c, random_invertible(f3, 2, rng),
                                         random_invertible(f3, 2, rng));
            auto phi = qpm_equivalent(build_qpm(c, Side::column),
                                      build_qpm(moved, Side::column));
            REQUIRE(phi.has_value());
        }
    }

    SECTION("self-equivalence") {
        QPolymatroid p = build_qpm(worked_example(f2), Side::column);
        REQUIRE(qpm_equal(p, p));
        REQUIRE(qpm_equivalent(p, p).has_value());
    }

    SECTION("search guard") {
        MatrixCode c = MatrixCode::zero(f3, 4, 4);
        QPolymatroid p = build_qpm(c, Side::column);
        QPolymatroid p2 = build_qpm(c, Side::row);
        try {
            qpm_equivalent(p, p2);
            FAIL("expected guard_exceeded");
        } catch (const guard_exceeded& e) {
            REQUIRE(e.count() == 24261120ull);  // |GL_4(F_3)|
        }
    }
}

TEST_CASE("closed-form tables") {
    auto f2 = Field::create(2, 1);

    SECTION("uniform table matches the 4x4 binary code with d = 4") {
        QPolymatroid want = uniform_mrd_table(f2, 4, 4, 4);
        REQUIRE(qpm_equal(want, build_qpm(mrd_4x4_first(f2), Side::column)));
        REQUIRE(qpm_equal(want, build_qpm(mrd_4x4_first(f2), Side::row)));
    }

    SECTION("uniform edge cases") {
        QPolymatroid free = uniform_mrd_table(f2, 2, 3, 1);
        for (int i = 0; i < free.lattice()->size(); ++i)
            REQUIRE(free.value_at(static_cast<std::size_t>(i)) ==
                    Rat(free.lattice()->dim(i)));
        QPolymatroid low = uniform_mrd_table(f2, 2, 3, 2);
        for (int i = 0; i < low.lattice()->size(); ++i)
            REQUIRE(low.value_at(static_cast<std::size_t>(i)) ==
                    Rat(std::min(low.lattice()->dim(i), 1)));
        REQUIRE_THROWS_AS(uniform_mrd_table(f2, 3, 2, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(uniform_mrd_table(f2, 2, 3, 0), std::invalid_argument);
    }

    SECTION("anticode closed form") {
        // t = n: free table; t = 0: zero table
        QPolymatroid top = anticode_table(f2, 2, 2);
        for (int i = 0; i < top.lattice()->size(); ++i)
            REQUIRE(top.value_at(static_cast<std::size_t>(i)) ==
                    Rat(top.lattice()->dim(i)));
        QPolymatroid bottom = anticode_table(f2, 2, 0);
        for (const Rat& v : bottom.values()) REQUIRE(v == Rat(0));
        REQUIRE_THROWS_AS(anticode_table(f2, 2, 3), std::invalid_argument);

        // exact match for the trailing-coordinate support space
        Subspace k = line(f2, {0, 1});
        QPolymatroid built =
            build_qpm(MatrixCode::column_support_code(k, 2), Side::column);
        REQUIRE(qpm_equal(anticode_table(f2, 2, 1), built));

        // other support spaces give equivalent tables
        QPolymatroid other = build_qpm(
            MatrixCode::column_support_code(line(f2, {1, 1}), 2), Side::column);
        REQUIRE_FALSE(qpm_equal(anticode_table(f2, 2, 1), other));
        REQUIRE(qpm_equivalent(anticode_table(f2, 2, 1), other).has_value());
        REQUIRE(check_axioms(anticode_table(f2, 3, 2)).ok);
    }
}

TEST_CASE("integrality and derived invariants") {
    auto f2 = Field::create(2, 1);
    auto f3 = Field::create(3, 1);

    SECTION("q-matroid recognition") {
        REQUIRE_FALSE(is_qmatroid(build_qpm(nonmatroid_example(f3), Side::column)));
        REQUIRE(is_qmatroid(build_qpm(mrd_4x4_first(f2), Side::column)));
        REQUIRE(is_qmatroid(build_qpm(row_line_code(f2), Side::row)));
    }

    SECTION("no rescaling makes the F_3 example a q-matroid") {
        QPolymatroid p = build_qpm(nonmatroid_example(f3), Side::column);
        for (long long num = 1; num <= 4; ++num)
            for (long long den : {1, 2}) {
                const Rat lambda(num, den);
                std::vector<Rat> scaled;
                for (const Rat& v : p.values()) scaled.push_back(v * lambda);
                QPolymatroid q(p.lattice(), std::move(scaled));
                REQUIRE_FALSE((check_axioms(q).ok && is_qmatroid(q)));
            }
    }

    SECTION("distance recovery") {
        std::mt19937 rng(8886);
        for (int trial = 0; trial < 8; ++trial) {
            const FieldPtr& f = trial % 2 ? f3 : f2;
            MatrixCode c = random_code(f, 2, 3, 1 + trial % 4, rng);
            QPolymatroid p = build_qpm(c, Side::column);
            REQUIRE(qpm_min_distance(p, c.dim(), c.m()) == min_distance(c));
            REQUIRE(qpm_is_mrd(p, c.dim(), c.m()) == is_mrd(c));
        }
        QPolymatroid big = build_qpm(mrd_4x4_first(f2), Side::column);
        REQUIRE(qpm_min_distance(big, 4, 4) == 4);
        REQUIRE(qpm_is_mrd(big, 4, 4));
        REQUIRE_THROWS_AS(qpm_min_distance(big, 8, 4), std::invalid_argument);
        REQUIRE_THROWS_AS(qpm_min_distance(big, 0, 4), std::invalid_argument);
    }

    SECTION("anticode profiles") {
        MatrixCode exnot = row_line_code(f2);
        REQUIRE(qpm_anticode_profile(build_qpm(exnot, Side::row)) == 1);
        REQUIRE(qpm_anticode_profile(
                    build_qpm(transpose_code(exnot), Side::column)) == 1);
        REQUIRE_FALSE(qpm_anticode_profile(build_qpm(exnot, Side::column))
                          .has_value());
        REQUIRE_FALSE(qpm_anticode_profile(
                          build_qpm(worked_example(f2), Side::column))
                          .has_value());
        REQUIRE(qpm_anticode_profile(
                    build_qpm(MatrixCode::full(f2, 2, 3), Side::column)) == 2);
        REQUIRE(qpm_anticode_profile(
                    build_qpm(MatrixCode::zero(f2, 2, 3), Side::column)) == 0);
    }
}
