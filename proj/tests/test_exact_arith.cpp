#include <catch2/catch_amalgamated.hpp>

#include "liedef/linalg.hpp"
#include "liedef/poly.hpp"
#include "liedef/rational.hpp"
#include "test_util.hpp"

using namespace liedef;

TEST_CASE("rational parsing and canonical form") {
    REQUIRE(rat_parse("2/4") == rat(1, 2));
    REQUIRE(rat_parse("-6/4") == rat(-3, 2));
    REQUIRE(rat_parse("7") == rat(7));
    REQUIRE(rat_str(rat(-3, 2)) == "-3/2");
    REQUIRE(rat_str(rat(5)) == "5");
    REQUIRE_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_parse("abc"), std::invalid_argument);

    // exact reconstruction, no rounding
    REQUIRE(rat(1, 3) + rat(1, 6) == rat(1, 2));
    REQUIRE(rat(1, 10) * 10 == 1);
}

TEST_CASE("rational round trip on random values") {
    auto g = testutil::rng(11);
    for (int k = 0; k < 200; ++k) {
        Rational q = testutil::rand_rational(g);
        REQUIRE(rat_parse(rat_str(q)) == q);
    }
}

TEST_CASE("rref basics") {
    SECTION("proportional rows") {
        QMatrix m(2, 2);
        m.at(0, 0) = 1;
        m.at(0, 1) = 2;
        m.at(1, 0) = 2;
        m.at(1, 1) = 4;
        auto rr = rref(m);
        REQUIRE(rr.rank == 1);
        REQUIRE(rr.pivots == std::vector<int>{0});
        REQUIRE(rr.reduced.at(0, 0) == 1);
        REQUIRE(rr.reduced.at(0, 1) == 2);
        REQUIRE(vec_is_zero(rr.reduced.row(1)));
    }
    SECTION("identity") {
        auto rr = rref(QMatrix::identity(5));
        REQUIRE(rr.rank == 5);
        REQUIRE(rr.reduced == QMatrix::identity(5));
    }
    SECTION("empty") {
        REQUIRE(rref(QMatrix(0, 0)).rank == 0);
        REQUIRE(rref(QMatrix(0, 4)).rank == 0);
        REQUIRE(rref(QMatrix(3, 0)).rank == 0);
    }
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
    auto g = testutil::rng(17);
    for (int k = 0; k < 50; ++k) {
        QMatrix m = testutil::rand_matrix(g, 30);
        auto rr = rref(m);
        auto again = rref(rr.reduced);
        REQUIRE(again.reduced == rr.reduced);
        REQUIRE(again.rank == rr.rank);
        REQUIRE(rr.rank + kernel_basis(m).dim() == m.cols);
        REQUIRE(rr.rank == testutil::naive_rank(m));
    }
}

TEST_CASE("kernel basis") {
    SECTION("zero matrix: standard basis") {
        auto b = kernel_basis(QMatrix(3, 3));
        REQUIRE(b.dim() == 3);
        for (int i = 0; i < 3; ++i) {
            RatVec e(3);
            e[static_cast<size_t>(i)] = 1;
            REQUIRE(b.vectors[static_cast<size_t>(i)] == e);
        }
    }
    SECTION("invertible matrix: empty") {
        QMatrix m = QMatrix::identity(4);
        m.at(0, 3) = 7;
        m.at(2, 1) = rat(-1, 3);
        REQUIRE(kernel_basis(m).dim() == 0);
    }
    SECTION("kernel vectors are annihilated") {
        auto g = testutil::rng(23);
        for (int k = 0; k < 20; ++k) {
            QMatrix m = testutil::rand_matrix(g, 12);
            for (const auto& v : kernel_basis(m).vectors) REQUIRE(vec_is_zero(m.mul(v)));
        }
    }
}

TEST_CASE("solve_particular") {
    SECTION("identity returns b") {
        RatVec b{rat(1), rat(-2, 3), rat(5)};
        auto x = solve_particular(QMatrix::identity(3), b);
        REQUIRE(x.has_value());
        REQUIRE(*x == b);
    }
    SECTION("zero matrix, nonzero b: no solution") {
        RatVec b{rat(1), rat(0)};
        REQUIRE_FALSE(solve_particular(QMatrix(2, 3), b).has_value());
    }
    SECTION("solvable systems solve exactly, free variables zero") {
        auto g = testutil::rng(31);
        for (int k = 0; k < 30; ++k) {
            QMatrix m = testutil::rand_matrix(g, 10);
            RatVec y(static_cast<size_t>(m.cols));
            for (auto& v : y) v = testutil::rand_rational(g);
            RatVec b = m.mul(y);
            auto x = solve_particular(m, b);
            REQUIRE(x.has_value());
            REQUIRE(m.mul(*x) == b);
            auto rr = rref(m);
            std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
            for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
            for (int c = 0; c < m.cols; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) REQUIRE(sgn((*x)[static_cast<size_t>(c)]) == 0);
        }
    }
}

TEST_CASE("subspace basis membership and canonical equality") {
    std::vector<RatVec> span1 = {{rat(1), rat(0), rat(1)}, {rat(0), rat(1), rat(1)}};
    std::vector<RatVec> span2 = {{rat(1), rat(1), rat(2)}, {rat(1), rat(-1), rat(0)}};
    auto b1 = SubspaceBasis::from_spanning(span1, 3);
    auto b2 = SubspaceBasis::from_spanning(span2, 3);
    REQUIRE(b1 == b2);
    REQUIRE(b1.contains({rat(2), rat(3), rat(5)}));
    REQUIRE_FALSE(b1.contains({rat(1), rat(0), rat(0)}));
}

TEST_CASE("monomials and graded order") {
    ParamMonomial t1t2{1, 1, 0, 0}, t3sq{0, 0, 2, 0}, t1{1, 0, 0, 0};
    REQUIRE(t1t2.degree() == 2);
    REQUIRE(t1t2.str() == "t1*t2");
    REQUIRE(t3sq.str() == "t3^2");
    REQUIRE(ParamMonomial::unit(4).str() == "1");
    MonomialOrder less;
    REQUIRE(less(t1, t1t2));    // lower degree first
    REQUIRE(less(t1t2, t3sq));  // within a degree, t1-heavy first
}

TEST_CASE("polynomial ring operations") {
    const int r = 3;
    auto t1 = ParamPoly::variable(r, 0);
    auto t2 = ParamPoly::variable(r, 1);
    auto t3 = ParamPoly::variable(r, 2);

    SECTION("difference of squares") {
        REQUIRE((t1 + t2) * (t1 - t2) == t1 * t1 - t2 * t2);
    }
    SECTION("homogeneous part") {
        auto p = ParamPoly::constant(r, 1) + t1 * t2 + t3 * t3 + t1;
        REQUIRE(p.homogeneous_part(2) == t1 * t2 + t3 * t3);
        REQUIRE(p.homogeneous_part(0) == ParamPoly::constant(r, 1));
        REQUIRE(p.homogeneous_part(3).is_zero());
        // graded decomposition is lossless
        ParamPoly sum(r);
        for (int m = 0; m <= p.max_degree(); ++m) sum = sum + p.homogeneous_part(m);
        REQUIRE(sum == p);
    }
    SECTION("scaling") {
        auto p = (t3 * t3).scaled(2);
        REQUIRE(p.scaled(rat(1, 2)) == t3 * t3);
        REQUIRE(p.scaled(0).is_zero());
    }
    SECTION("parameter count mismatch is an error") {
        REQUIRE_THROWS_AS(t1 + ParamPoly::variable(2, 0), std::invalid_argument);
    }
    SECTION("rendering") {
        auto p = t1 * t2 - (t3 * t3).scaled(rat(1, 2)) + ParamPoly::constant(r, 1);
        REQUIRE(p.str() == "1 + t1*t2 - 1/2*t3^2");
    }
}

TEST_CASE("polynomial multiplication commutes and distributes (randomized)") {
    auto g = testutil::rng(41);
    std::uniform_int_distribution<int> expo(0, 2), nterms(1, 4);
    auto rand_poly = [&](int r) {
        ParamPoly p(r);
        int n = nterms(g);
        for (int k = 0; k < n; ++k) {
            ParamMonomial m(r);
            for (auto& e : m.exponents) e = static_cast<uint32_t>(expo(g));
            p.add_term(m, testutil::rand_rational(g));
        }
        return p;
    };
    for (int k = 0; k < 100; ++k) {
        auto a = rand_poly(3), b = rand_poly(3), c = rand_poly(3);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("polynomial evaluation") {
    const int r = 2;
    auto p = ParamPoly::variable(r, 0) * ParamPoly::variable(r, 0) + ParamPoly::variable(r, 1).scaled(rat(1, 2));
    REQUIRE(p.eval({rat(2), rat(4)}) == rat(6));
    REQUIRE(p.eval({rat(0), rat(0)}) == 0);
}
