#include <catch2/catch_amalgamated.hpp>

#include "liedef/lie.hpp"

using namespace liedef;

namespace {
GlElement e(int i, int j) { return GlElement::unit(3, i, j); }
}  // namespace

TEST_CASE("matrix commutators") {
    REQUIRE(commutator(e(2, 1), e(3, 2)) == e(3, 1).scaled(-1));  // [X,Z] = -Y
    REQUIRE(commutator(e(2, 1), e(3, 1)).is_zero());              // [X,Y] = 0
    REQUIRE(commutator(e(3, 1), e(3, 2)).is_zero());              // [Y,Z] = 0
    GlElement a = e(1, 2) + e(2, 3).scaled(rat(5, 7));
    REQUIRE(commutator(a, a).is_zero());
    REQUIRE_THROWS_AS(commutator(e(1, 1), GlElement::unit(2, 1, 1)), std::invalid_argument);
}

TEST_CASE("gl(n) as a Lie algebra") {
    LieAlgebra gl3 = gl_algebra(3);
    REQUIRE(gl3.dim == 9);
    REQUIRE(gl3.labels[0] == "e11");
    REQUIRE(gl3.labels[8] == "e33");
    REQUIRE(gl3.antisymmetry_holds());
    REQUIRE(gl3.jacobi_holds());
    // [e21, e32] = -e31 in coordinates
    RatVec br = gl3.bracket(e(2, 1).flat(), e(3, 2).flat());
    REQUIRE(br == e(3, 1).scaled(-1).flat());
}

TEST_CASE("algebra from matrix generators") {
    SECTION("heisenberg triple") {
        auto [h, rho] = algebra_from_matrices({e(2, 1), e(3, 1), e(3, 2)}, {"X", "Y", "Z"});
        REQUIRE(h.dim == 3);
        REQUIRE(h.antisymmetry_holds());
        REQUIRE(h.jacobi_holds());
        // only nonzero bracket: [X,Z] = -Y (up to antisymmetry)
        RatVec minus_y{rat(0), rat(-1), rat(0)};
        REQUIRE(h.structure[0][2] == minus_y);
        REQUIRE(h.structure[2][0] == vec_scale(-1, minus_y));
        REQUIRE(vec_is_zero(h.structure[0][1]));
        REQUIRE(vec_is_zero(h.structure[1][2]));
        REQUIRE(check_homomorphism(rho).ok);
    }
    SECTION("single diagonal generator: abelian") {
        auto [h, rho] = algebra_from_matrices({e(1, 1)});
        REQUIRE(h.dim == 1);
        REQUIRE(vec_is_zero(h.structure[0][0]));
        REQUIRE(check_homomorphism(rho).ok);
    }
    SECTION("non-closed span is rejected, naming the pair") {
        REQUIRE_THROWS_WITH(algebra_from_matrices({e(1, 2), e(2, 1)}, {"u", "v"}),
                            Catch::Matchers::ContainsSubstring("[u,v]"));
    }
    SECTION("dependent generators are rejected") {
        REQUIRE_THROWS_AS(algebra_from_matrices({e(1, 1), e(1, 1)}), std::invalid_argument);
    }
}

TEST_CASE("homomorphism check") {
    auto [h, rho] = algebra_from_matrices({e(2, 1), e(3, 1), e(3, 2)}, {"X", "Y", "Z"});

    SECTION("standard embedding passes") { REQUIRE(check_homomorphism(rho).ok); }

    SECTION("zero map passes") {
        LieHom zero = LieHom::zero_map(h, gl_algebra(3));
        REQUIRE(check_homomorphism(zero).ok);
    }

    SECTION("X -> e12, Y -> 0, Z -> e21 fails on the (X,Z) pair") {
        LieHom bad{h, gl_algebra(3), {e(1, 2).flat(), RatVec(9), e(2, 1).flat()}};
        auto res = check_homomorphism(bad);
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.violations.size() == 1);
        REQUIRE(res.violations[0].i == 0);
        REQUIRE(res.violations[0].j == 2);
        // [X,Z] = -Y maps to 0, but [e12,e21] = e11 - e22
        REQUIRE(res.violations[0].image_of_bracket == RatVec(9));
        REQUIRE(res.violations[0].bracket_of_images == (e(1, 1) - e(2, 2)).flat());
    }
}

TEST_CASE("structure constants match a recomputed commutator table") {
    auto [h, rho] = algebra_from_matrices({e(2, 1), e(3, 1), e(3, 2)}, {"X", "Y", "Z"});
    std::vector<GlElement> gens{e(2, 1), e(3, 1), e(3, 2)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            GlElement lhs = commutator(gens[static_cast<size_t>(i)], gens[static_cast<size_t>(j)]);
            GlElement rhs(3);
            for (int k = 0; k < 3; ++k)
                rhs = rhs + gens[static_cast<size_t>(k)].scaled(h.structure[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)]);
            REQUIRE(lhs == rhs);
        }
}
