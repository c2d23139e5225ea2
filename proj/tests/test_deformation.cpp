#include <catch2/catch_amalgamated.hpp>

#include "liedef/deformation.hpp"
#include "liedef/reference_case.hpp"
#include "test_util.hpp"

using namespace liedef;
using namespace liedef::refcase;

namespace {

const LieHom& rho() {
    static LieHom h = reference_hom();
    return h;
}

const std::vector<Cochain>& gens() {
    static std::vector<Cochain> g = h1_generators();
    return g;
}

DeformationSeries integrated() {
    auto res = integrate(rho(), gens(), 10);
    REQUIRE(std::holds_alternative<DeformationSeries>(res));
    return std::get<DeformationSeries>(res);
}

/// Zero map of a 2-dim abelian algebra into gl(2), with a cocycle whose
/// self-cup is not a coboundary: the textbook obstructed case.
struct Obstructed {
    LieHom h;
    Cochain c;
    Obstructed() {
        LieAlgebra ab(2);
        ab.labels = {"u", "v"};
        h = LieHom::zero_map(ab, gl_algebra(2));
        c = Cochain(1, 2, 4);
        c.slot(0, 1) = 1;  // u* ⊗ e12
        c.slot(1, 2) = 1;  // v* ⊗ e21
    }
};

}  // namespace

TEST_CASE("cup products of the generators") {
    const auto& g = rho().target;
    auto r = gens();
    REQUIRE(cup(g, r[0], r[1]) == two_cochain({{WXZ, 3, 1, 1}}));
    REQUIRE(cup(g, r[0], r[2]) == two_cochain({{WXZ, 3, 2, 2}, {WXY, 3, 1, 1}}));
    REQUIRE(cup(g, r[2], r[2]) == two_cochain({{WYZ, 2, 1, -2}}));
    REQUIRE(cup(g, r[0], r[0]).is_zero());

    // full table: everything else vanishes
    for (const auto& [i, j, value] : cup_table_nonzero()) REQUIRE(cup(g, r[static_cast<size_t>(i - 1)], r[static_cast<size_t>(j - 1)]) == value);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            bool listed = (i == 0 && j == 1) || (i == 0 && j == 2) || (i == 2 && j == 2);
            if (!listed) REQUIRE(cup(g, r[static_cast<size_t>(i)], r[static_cast<size_t>(j)]).is_zero());
        }
}

TEST_CASE("cup is symmetric") {
    auto g = testutil::rng(3);
    for (int k = 0; k < 50; ++k) {
        Cochain a = testutil::rand_cochain(g, 1, 3, 9);
        Cochain b = testutil::rand_cochain(g, 1, 3, 9);
        REQUIRE(cup(rho().target, a, b) == cup(rho().target, b, a));
    }
}

TEST_CASE("order-2 right-hand side") {
    DeformationSeries d = first_order_series(rho(), gens());
    TwoCochainPoly rhs = mc_rhs(d, 2);

    auto at = [&](const ParamMonomial& m) {
        auto it = rhs.terms.find(m);
        return it == rhs.terms.end() ? Cochain(2, 3, 9) : it->second;
    };
    REQUIRE(at(mono({1, 1, 0, 0})) == two_cochain({{WXZ, 3, 1, 1}}));               // t1*t2
    REQUIRE(at(mono({1, 0, 1, 0})) == two_cochain({{WXZ, 3, 2, 2}, {WXY, 3, 1, 1}}));  // t1*t3
    REQUIRE(at(mono({0, 0, 2, 0})) == two_cochain({{WYZ, 2, 1, -1}}));              // t3^2: half the self-cup
    REQUIRE(at(mono({0, 0, 0, 2})).is_zero());                                      // t4^2
    REQUIRE(rhs.terms.size() == 3);

    DeformationSeries base_only;
    base_only.base = rho();
    base_only.param_count = 4;
    for (int m = 1; m <= 5; ++m) REQUIRE(mc_rhs(base_only, m).is_zero());
}

TEST_CASE("extend_order reproduces the construction order by order") {
    DeformationSeries d = first_order_series(rho(), gens());

    auto r2 = extend_order(d, 2);
    REQUIRE(std::holds_alternative<DeformationSeries>(r2));
    d = std::get<DeformationSeries>(r2);
    REQUIRE(d.term_or_zero(mono({1, 1, 0, 0})) == term_t1t2());
    REQUIRE(d.term_or_zero(mono({1, 0, 1, 0})) == term_t1t3());
    REQUIRE(d.term_or_zero(mono({0, 0, 2, 0})) == term_t3sq_proof());
    REQUIRE(d.terms.size() == 7);  // 4 linear + 3 quadratic

    auto r3 = extend_order(d, 3);
    REQUIRE(std::holds_alternative<DeformationSeries>(r3));
    d = std::get<DeformationSeries>(r3);
    REQUIRE(d.term_or_zero(mono({1, 0, 2, 0})) == term_t1t3sq_proof());
    REQUIRE(d.terms.size() == 8);

    for (int m = 4; m <= 6; ++m) {
        auto rm = extend_order(d, m);
        REQUIRE(std::holds_alternative<DeformationSeries>(rm));
        d = std::get<DeformationSeries>(rm);
        REQUIRE(d.terms.size() == 8);  // nothing new appears
    }
}

TEST_CASE("integration of the reference instance") {
    DeformationSeries d = integrated();
    REQUIRE(d.max_degree() == 3);
    std::vector<ParamMonomial> support;
    for (const auto& [m, c] : d.terms) support.push_back(m);
    REQUIRE(support == expected_support());
    REQUIRE(mc_residual(d).is_zero());
}

TEST_CASE("residual examples") {
    SECTION("base map alone") {
        DeformationSeries d;
        d.base = rho();
        d.param_count = 0;
        REQUIRE(mc_residual(d).is_zero());
    }
    SECTION("single cocycle direction rho1") {
        DeformationSeries d = first_order_series(rho(), {gens()[0]});
        REQUIRE(mc_residual(d).is_zero());  // cup(rho1,rho1) = 0
    }
}

TEST_CASE("single-cocycle integrations terminate at once") {
    SECTION("rho4") {
        auto res = integrate(rho(), {gens()[3]}, 10);
        auto d = std::get<DeformationSeries>(res);
        REQUIRE(d.terms.size() == 1);
        REQUIRE(d.max_degree() == 1);
        REQUIRE(mc_residual(d).is_zero());
    }
    SECTION("rho2") {
        auto res = integrate(rho(), {gens()[1]}, 10);
        auto d = std::get<DeformationSeries>(res);
        REQUIRE(d.terms.size() == 1);
        REQUIRE(mc_residual(d).is_zero());
    }
    SECTION("empty cocycle list") {
        auto res = integrate(rho(), {}, 10);
        auto d = std::get<DeformationSeries>(res);
        REQUIRE(d.terms.empty());
    }
}

TEST_CASE("guard bounds the examined order") {
    REQUIRE_THROWS_AS(integrate(rho(), gens(), 1), GuardExceeded);
    // guard 6 is exactly enough: termination happens once 7 > 2*3
    auto res = integrate(rho(), gens(), 6);
    REQUIRE(std::holds_alternative<DeformationSeries>(res));
}

TEST_CASE("non-cocycles are rejected as first-order data") {
    Cochain bad = one_cochain({{DZ, 2, 3, 1}});  // delta1 of this is Y*^Z*⊗e21
    REQUIRE_THROWS_AS(first_order_series(rho(), {bad}), std::invalid_argument);
}

TEST_CASE("obstructed instance reports the blocking class") {
    Obstructed ob;
    auto res = integrate(ob.h, {ob.c}, 10);
    REQUIRE(std::holds_alternative<ObstructionReport>(res));
    auto rep = std::get<ObstructionReport>(res);
    REQUIRE(rep.order == 2);
    REQUIRE(rep.monomial == ParamMonomial{2});
    // (1/2)[[c,c]](u,v) = [e12,e21] = e11 - e22
    Cochain expected(2, 2, 4);
    expected.slot(0, 0) = 1;
    expected.slot(0, 3) = -1;
    REQUIRE(rep.cocycle == expected);
    // im delta1 is zero here, so the class coordinates are the cocycle itself
    REQUIRE(rep.class_coords == expected.coords);
    REQUIRE_FALSE(vec_is_zero(rep.class_coords));
}

TEST_CASE("delta2 of the recursion right-hand side vanishes at every order") {
    DeformationSeries d = first_order_series(rho(), gens());
    for (int m = 2; m <= 7; ++m) {
        for (const auto& [mnm, c] : mc_rhs(d, m).terms) REQUIRE(delta(2, rho(), c).is_zero());
        auto r = extend_order(d, m);
        d = std::get<DeformationSeries>(r);
    }
}

TEST_CASE("gauge transformations") {
    DeformationSeries d = integrated();

    SECTION("no generators: unchanged") {
        DeformationSeries gd = gauge(d, std::vector<std::pair<ParamMonomial, RatVec>>{}, 6);
        REQUIRE(gd.terms == d.terms);
    }

    SECTION("first-order gauge shifts the t1 term by a coboundary") {
        GlElement a = e(1, 2) + e(2, 2).scaled(rat(3, 5));
        std::vector<std::pair<ParamMonomial, GlElement>> g{{mono({1, 0, 0, 0}), a}};
        DeformationSeries gd = gauge(d, g, 1);
        Cochain a0(0, 3, 9);
        a0.coords = a.flat();
        Cochain shift = delta(0, rho(), a0);
        REQUIRE(gd.term_or_zero(mono({1, 0, 0, 0})) == d.term_or_zero(mono({1, 0, 0, 0})) + shift);
        for (int i = 1; i < 4; ++i) {
            ParamMonomial ti = ParamMonomial::variable(4, i);
            REQUIRE(gd.term_or_zero(ti) == d.term_or_zero(ti));
        }
    }

    SECTION("gauge preserves the vanishing residual through the working degree") {
        auto g = testutil::rng(29);
        std::uniform_int_distribution<int> pick(0, 3), deg2(0, 1);
        const int working = 6;
        for (int k = 0; k < 10; ++k) {
            GlElement a(3);
            for (auto& x : a.a) x = testutil::rand_rational(g);
            ParamMonomial m(4);
            m.exponents[static_cast<size_t>(pick(g))] += 1;
            if (deg2(g)) m.exponents[static_cast<size_t>(pick(g))] += 1;
            std::vector<std::pair<ParamMonomial, GlElement>> gen{{m, a}};
            DeformationSeries gd = gauge(d, gen, working);
            REQUIRE(mc_residual(gd).truncated(working).is_zero());
        }
    }

    SECTION("degree-0 gauge monomials are rejected") {
        std::vector<std::pair<ParamMonomial, GlElement>> g{{ParamMonomial::unit(4), e(1, 2)}};
        REQUIRE_THROWS_AS(gauge(d, g, 4), std::invalid_argument);
    }
}

TEST_CASE("difference classes of two order-m solutions") {
    DeformationSeries d = integrated();
    CohomologyReport rep = cohomology(1, rho());

    SECTION("identical series: all classes vanish") {
        auto res = order_difference_class(d, d, 2, rep);
        REQUIRE(res.both_solutions);
        REQUIRE(res.classes.size() == 3);
        for (const auto& [m, cls] : res.classes) REQUIRE(vec_is_zero(cls));
    }

    SECTION("solutions differing by a non-coboundary cocycle") {
        DeformationSeries d2 = d;
        d2.set_term(mono({1, 1, 0, 0}), d.term_or_zero(mono({1, 1, 0, 0})) + gens()[0]);
        auto res = order_difference_class(d2, d, 2, rep);
        REQUIRE(res.both_solutions);
        REQUIRE(res.classes.at(mono({1, 1, 0, 0})) == class_coordinates(gens()[0].coords, rep));
        REQUIRE_FALSE(vec_is_zero(res.classes.at(mono({1, 1, 0, 0}))));
    }

    SECTION("the two printed t3^2 choices are not both solutions") {
        DeformationSeries d2 = d;
        d2.set_term(mono({0, 0, 2, 0}), term_t3sq_theorem());
        auto res = order_difference_class(d, d2, 2, rep);
        REQUIRE_FALSE(res.both_solutions);
        REQUIRE(res.non_cocycle_monomial == mono({0, 0, 2, 0}));
    }

    SECTION("disagreement below the order is a precondition violation") {
        DeformationSeries d2 = d;
        d2.set_term(mono({1, 0, 0, 0}), d.term_or_zero(mono({1, 0, 0, 0})).scaled(2));
        REQUIRE_THROWS_AS(order_difference_class(d, d2, 2, rep), std::invalid_argument);
    }
}

TEST_CASE("applying the series to elements") {
    DeformationSeries d = integrated();

    SECTION("parameters zero reproduce the base embedding") {
        // generic element with letters (a, c, b) placed as a*X + c*Y + b*Z
        RatVec elem{rat(5), rat(7), rat(11)};  // a = 5, c = 7, b = 11
        auto grid = apply_symbolic(d, elem, 3);
        RatVec zero(4);
        REQUIRE(grid[1][0].eval(zero) == 5);   // a at (2,1)
        REQUIRE(grid[2][0].eval(zero) == 7);   // c at (3,1)
        REQUIRE(grid[2][1].eval(zero) == 11);  // b at (3,2)
        REQUIRE(grid[0][0].eval(zero) == 0);
        REQUIRE(grid[1][1].eval(zero) == 0);
        REQUIRE(grid[2][2].eval(zero) == 0);
    }

    SECTION("a series with only the t1 term contributes nothing on Z") {
        DeformationSeries d1 = first_order_series(rho(), {gens()[0]});
        RatVec z_elem{rat(0), rat(0), rat(1)};
        auto grid = apply_symbolic(d1, z_elem, 1 * 0 + 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == 2 && j == 1)
                    REQUIRE(grid[static_cast<size_t>(i)][static_cast<size_t>(j)] == ParamPoly::constant(1, 1));
                else
                    REQUIRE(grid[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero());
            }
    }

    SECTION("closed-form comparison: eight entries agree, (3,2) differs") {
        auto cmp = compare_closed_form(d);
        REQUIRE(cmp.agree_count == 8);
        for (const auto& entry : cmp.entries) {
            bool expect_agree = !(entry.i == 3 && entry.j == 2);
            INFO("entry (" << entry.i << "," << entry.j << "): computed " << entry.computed
                           << " vs reference " << entry.reference);
            REQUIRE(entry.agree == expect_agree);
        }
        REQUIRE(cmp.variant_t3sq == "proof");
        REQUIRE(cmp.variant_t1t3sq == "proof");
        REQUIRE(cmp.residual_zero_with_proof_terms);
        REQUIRE_FALSE(cmp.residual_zero_with_theorem_terms);
    }
}

TEST_CASE("pointwise evaluation agrees with the homomorphism property") {
    DeformationSeries d = integrated();
    auto g = testutil::rng(47);
    for (int k = 0; k < 20; ++k) {
        RatVec params(4);
        for (auto& p : params) p = testutil::rand_rational(g);
        LieHom at = evaluate_at(d, params);
        REQUIRE(check_homomorphism(at).ok);
    }
}
