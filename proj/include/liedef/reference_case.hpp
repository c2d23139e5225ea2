#pragma once

// Reference instance: the inclusion of the Heisenberg algebra h1 (strictly
// lower triangular 3x3 matrices, basis X = e21, Y = e31, Z = e32) into
// gl(3). Its first cohomology and miniversal deformation are known in closed
// form; the tables below are the published values, entered verbatim, and the
// test suite recomputes every one of them from scratch.

#include <array>
#include <string>
#include <vector>

#include "liedef/cochain.hpp"
#include "liedef/deformation.hpp"
#include "liedef/lie.hpp"
#include "liedef/poly.hpp"

namespace liedef::refcase {

inline constexpr int DX = 0, DY = 1, DZ = 2;     // dual-basis slots X*, Y*, Z*
inline constexpr int WXY = 0, WXZ = 1, WYZ = 2;  // wedge slots X*^Y*, X*^Z*, Y*^Z*

inline int gl_idx(int i, int j) { return (i - 1) * 3 + (j - 1); }  // e_ij, 1-based

struct Term1 {
    int dual, gi, gj;
    Rational coef;
};
inline Cochain one_cochain(std::initializer_list<Term1> ts) {
    Cochain c(1, 3, 9);
    for (const auto& t : ts) c.slot(t.dual, gl_idx(t.gi, t.gj)) += t.coef;
    return c;
}

struct Term2 {
    int wedge, gi, gj;
    Rational coef;
};
inline Cochain two_cochain(std::initializer_list<Term2> ts) {
    Cochain c(2, 3, 9);
    for (const auto& t : ts) c.slot(t.wedge, gl_idx(t.gi, t.gj)) += t.coef;
    return c;
}

inline GlElement e(int i, int j) { return GlElement::unit(3, i, j); }

/// The reference homomorphism, built from the matrix generators.
inline LieHom reference_hom() {
    auto [h, rho] = algebra_from_matrices({e(2, 1), e(3, 1), e(3, 2)}, {"X", "Y", "Z"});
    return rho;
}

/// The 11 basis cocycles of Z^1.
inline std::vector<Cochain> z1_basis_listed() {
    return {
        one_cochain({{DX, 3, 2, 1}}),                                            // e1
        one_cochain({{DZ, 2, 1, 1}}),                                            // e2
        one_cochain({{DX, 3, 3, 1}, {DX, 2, 2, 1}, {DX, 1, 1, 1}}),              // e3
        one_cochain({{DZ, 2, 2, 1}, {DZ, 1, 1, rat(1, 2)}, {DY, 2, 1, rat(1, 2)}}),  // e4
        one_cochain({{DZ, 3, 1, 1}}),                                            // e5
        one_cochain({{DY, 3, 1, 1}, {DX, 2, 1, 1}}),                             // e6
        one_cochain({{DY, 3, 2, 1}, {DX, 2, 2, 1}, {DX, 1, 1, -1}}),             // e7
        one_cochain({{DX, 3, 1, 1}}),                                            // e8
        one_cochain({{DZ, 3, 2, 1}, {DY, 3, 1, 1}}),                             // e9
        one_cochain({{DX, 2, 3, 1}, {DY, 3, 3, 1}, {DY, 1, 1, -1}, {DZ, 1, 2, -1}}),  // e10
        one_cochain({{DZ, 3, 3, 1}, {DZ, 1, 1, rat(1, 2)}, {DY, 2, 1, rat(-1, 2)}}),  // e11
    };
}

/// Preferred generators of H^1: rho1 = X*⊗e32, rho2 = Z*⊗e21,
/// rho3 = Z*⊗(2e22+e11) + Y*⊗e21, rho4 = X*⊗(e11+e22+e33).
inline std::vector<Cochain> h1_generators() {
    return {
        one_cochain({{DX, 3, 2, 1}}),
        one_cochain({{DZ, 2, 1, 1}}),
        one_cochain({{DZ, 2, 2, 2}, {DZ, 1, 1, 1}, {DY, 2, 1, 1}}),
        one_cochain({{DX, 1, 1, 1}, {DX, 2, 2, 1}, {DX, 3, 3, 1}}),
    };
}

// ---- delta1 on basis 1-cochains --------------------------------------------

struct Delta1Image {
    int dual, gi, gj;  // input slot: dual*⊗e_{gi,gj}
    Cochain image;
};

/// Every listed delta1 image, in the listed order: the 14-member independent
/// family, the two further independent ones, then the dependent ones.
inline std::vector<Delta1Image> delta1_images_listed() {
    return {
        {DX, 1, 1, two_cochain({{WXY, 3, 1, 1}})},
        {DX, 1, 2, two_cochain({{WXY, 3, 2, 1}})},
        {DX, 1, 3, two_cochain({{WXY, 3, 3, 1}, {WXY, 1, 1, -1}, {WXZ, 1, 2, -1}})},
        {DX, 2, 1, two_cochain({{WXZ, 3, 1, 1}})},
        {DX, 2, 2, two_cochain({{WXZ, 3, 2, 1}})},
        {DX, 2, 3, two_cochain({{WXY, 2, 1, -1}, {WXZ, 3, 3, 1}, {WXZ, 2, 2, -1}})},
        {DY, 1, 1, two_cochain({{WXY, 2, 1, -1}, {WXZ, 1, 1, -1}})},
        {DY, 1, 2, two_cochain({{WXY, 1, 1, 1}, {WXY, 2, 2, -1}, {WXZ, 1, 2, -1}})},
        {DY, 1, 3, two_cochain({{WXY, 2, 3, -1}, {WXZ, 1, 3, -1}, {WYZ, 1, 2, -1}})},
        {DY, 2, 1, two_cochain({{WXZ, 2, 1, -1}, {WYZ, 3, 1, 1}})},
        {DY, 2, 2, two_cochain({{WXY, 2, 1, 1}, {WXZ, 2, 2, -1}, {WYZ, 3, 2, 1}})},
        {DY, 2, 3, two_cochain({{WXZ, 2, 3, -1}, {WYZ, 3, 3, 1}, {WYZ, 2, 2, -1}})},
        {DZ, 1, 3, two_cochain({{WXZ, 2, 3, -1}, {WYZ, 3, 3, -1}, {WYZ, 1, 1, 1}})},
        {DZ, 2, 3, two_cochain({{WYZ, 2, 1, 1}})},
        {DY, 3, 3, two_cochain({{WXZ, 3, 3, -1}, {WYZ, 3, 2, -1}})},
        {DZ, 1, 1, two_cochain({{WXZ, 2, 1, -1}, {WYZ, 3, 1, -1}})},
        {DX, 3, 3, two_cochain({{WXY, 3, 1, -1}, {WXZ, 3, 2, -1}})},
        {DY, 3, 1, two_cochain({{WXZ, 3, 1, -1}})},
        {DY, 3, 2, two_cochain({{WXY, 3, 1, 1}, {WXZ, 3, 2, -1}})},
        {DZ, 1, 2, two_cochain({{WXZ, 2, 2, -1}, {WXZ, 1, 1, 1}, {WYZ, 3, 2, -1}})},
        {DZ, 2, 2, two_cochain({{WXZ, 2, 1, 1}})},
        {DZ, 3, 2, two_cochain({{WXZ, 3, 1, 1}})},
        {DZ, 3, 3, two_cochain({{WYZ, 3, 1, 1}})},
    };
}

/// The four vanishing delta1 images.
inline std::vector<std::array<int, 3>> delta1_zero_slots() {
    return {{DX, 3, 1}, {DX, 3, 2}, {DZ, 2, 1}, {DZ, 3, 1}};
}

/// Input slots of the 14-member maximal free family, in listed order.
inline std::vector<std::array<int, 3>> delta1_independent_slots() {
    return {{DX, 1, 1}, {DX, 1, 2}, {DX, 1, 3}, {DX, 2, 1}, {DX, 2, 2}, {DX, 2, 3}, {DY, 1, 1},
            {DY, 1, 2}, {DY, 1, 3}, {DY, 2, 1}, {DY, 2, 2}, {DY, 2, 3}, {DZ, 1, 3}, {DZ, 2, 3}};
}

/// Listed dependence relations among the delta1 images.
struct DeltaRelation {
    std::string name;
    std::array<int, 3> lhs;
    std::vector<std::pair<Rational, std::array<int, 3>>> rhs;
};
inline std::vector<DeltaRelation> delta1_relations() {
    return {
        {"dX33 = -dX22 - dX11", {DX, 3, 3}, {{-1, {DX, 2, 2}}, {-1, {DX, 1, 1}}}},
        {"dY31 = -dX21", {DY, 3, 1}, {{-1, {DX, 2, 1}}}},
        {"dY32 = -dX22 + dX11", {DY, 3, 2}, {{-1, {DX, 2, 2}}, {1, {DX, 1, 1}}}},
        {"dZ22 = -1/2 dZ11 - 1/2 dY21", {DZ, 2, 2}, {{rat(-1, 2), {DZ, 1, 1}}, {rat(-1, 2), {DY, 2, 1}}}},
        {"dZ32 = -dY31", {DZ, 3, 2}, {{-1, {DY, 3, 1}}}},
        {"dZ12 = -dY11 + dX23 + dY33", {DZ, 1, 2}, {{-1, {DY, 1, 1}}, {1, {DX, 2, 3}}, {1, {DY, 3, 3}}}},
        {"dZ33 = -1/2 dZ11 + 1/2 dY21", {DZ, 3, 3}, {{rat(-1, 2), {DZ, 1, 1}}, {rat(1, 2), {DY, 2, 1}}}},
    };
}

// ---- delta0 images ----------------------------------------------------------

struct Delta0Image {
    int gi, gj;  // input e_{gi,gj}
    Cochain image;
};

/// The seven independent coboundary images delta0(e_ij).
inline std::vector<Delta0Image> delta0_images_independent() {
    return {
        {1, 1, one_cochain({{DX, 2, 1, -1}, {DY, 3, 1, -1}})},
        {1, 2, one_cochain({{DX, 1, 1, 1}, {DX, 2, 2, -1}, {DY, 3, 2, -1}})},
        {1, 3, one_cochain({{DX, 2, 3, -1}, {DY, 1, 1, 1}, {DY, 3, 3, -1}, {DZ, 1, 2, 1}})},
        {2, 1, one_cochain({{DZ, 3, 1, -1}})},
        {2, 2, one_cochain({{DX, 2, 1, 1}, {DZ, 3, 2, -1}})},
        {2, 3, one_cochain({{DY, 2, 1, 1}, {DZ, 2, 2, 1}, {DZ, 3, 3, -1}})},
        {3, 2, one_cochain({{DX, 3, 1, 1}})},
    };
}

/// delta0(e33), listed as dependent (delta0(e31) is the other, it vanishes).
inline Cochain delta0_e33() { return one_cochain({{DY, 3, 1, 1}, {DZ, 3, 2, 1}}); }

// ---- cup products of the generators ----------------------------------------

/// Nonzero cup products among rho1..rho4 (1-based index pairs, i <= j);
/// everything else vanishes.
struct CupEntry {
    int i, j;
    Cochain value;
};
inline std::vector<CupEntry> cup_table_nonzero() {
    return {
        {1, 2, two_cochain({{WXZ, 3, 1, 1}})},
        {1, 3, two_cochain({{WXZ, 3, 2, 2}, {WXY, 3, 1, 1}})},
        {3, 3, two_cochain({{WYZ, 2, 1, -2}})},  // printed as 2 Z*^Y*⊗e21
    };
}

// ---- the deformation itself -------------------------------------------------

/// Higher-order terms chosen in the step-by-step construction:
/// rho12 = X*⊗e21, rho13 = X*⊗(2e22+e11), rho33 = -Z*⊗e23, rho331 = -X*⊗e23.
inline Cochain term_t1t2() { return one_cochain({{DX, 2, 1, 1}}); }
inline Cochain term_t1t3() { return one_cochain({{DX, 2, 2, 2}, {DX, 1, 1, 1}}); }
inline Cochain term_t3sq_proof() { return one_cochain({{DZ, 2, 3, -1}}); }
inline Cochain term_t1t3sq_proof() { return one_cochain({{DX, 2, 3, -1}}); }

/// The closed-form statement prints these with an extra factor 2; the
/// residual oracle decides which variant actually solves the recursion.
inline Cochain term_t3sq_theorem() { return one_cochain({{DZ, 2, 3, -2}}); }
inline Cochain term_t1t3sq_theorem() { return one_cochain({{DX, 2, 3, -2}}); }

inline ParamMonomial mono(std::initializer_list<uint32_t> e) { return ParamMonomial(e); }

/// Expected monomial support of the integrated series.
inline std::vector<ParamMonomial> expected_support() {
    return {mono({1, 0, 0, 0}), mono({0, 1, 0, 0}), mono({0, 0, 1, 0}), mono({0, 0, 0, 1}),
            mono({1, 1, 0, 0}), mono({1, 0, 1, 0}), mono({0, 0, 2, 0}), mono({1, 0, 2, 0})};
}

// ---- closed-form result matrix ----------------------------------------------

/// Matrix entry linear in the generic-element letters: a*A + b*B + c*C + plain,
/// with polynomial coefficients in t1..t4. The letters follow the printed
/// generic element, which is a*X + c*Y + b*Z (a at (2,1), c at (3,1), b at (3,2)).
struct LetterPoly {
    ParamPoly a{4}, b{4}, c{4}, plain{4};
    bool operator==(const LetterPoly& o) const {
        return a == o.a && b == o.b && c == o.c && plain == o.plain;
    }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && plain.is_zero(); }
    std::string str() const {
        std::string s;
        auto app = [&s](const std::string& letter, const ParamPoly& p) {
            if (p.is_zero()) return;
            if (!s.empty()) s += " + ";
            if (letter.empty()) {
                s += p.str();
            } else if (p.terms.size() == 1 && p.terms.begin()->second == 1) {
                s += letter + (p.terms.begin()->first.is_unit() ? "" : "*" + p.str());
            } else {
                s += letter + "*(" + p.str() + ")";
            }
        };
        app("a", a);
        app("b", b);
        app("c", c);
        app("", plain);
        return s.empty() ? "0" : s;
    }
};

inline ParamPoly tpoly(std::initializer_list<std::pair<ParamMonomial, Rational>> terms) {
    ParamPoly p(4);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

/// The printed 3x3 result of applying the deformed map to the generic element.
inline std::array<std::array<LetterPoly, 3>, 3> printed_result_matrix() {
    std::array<std::array<LetterPoly, 3>, 3> m;
    // (1,1) = b t3 + a t1 t3 + a t4
    m[0][0].a = tpoly({{mono({1, 0, 1, 0}), 1}, {mono({0, 0, 0, 1}), 1}});
    m[0][0].b = tpoly({{mono({0, 0, 1, 0}), 1}});
    // (2,1) = a + b t2 + a t1 t2 + c t3
    m[1][0].a = tpoly({{mono({0, 0, 0, 0}), 1}, {mono({1, 1, 0, 0}), 1}});
    m[1][0].b = tpoly({{mono({0, 1, 0, 0}), 1}});
    m[1][0].c = tpoly({{mono({0, 0, 1, 0}), 1}});
    // (2,2) = 2b t3 + 2a t1 t3 + a t4
    m[1][1].a = tpoly({{mono({1, 0, 1, 0}), 2}, {mono({0, 0, 0, 1}), 1}});
    m[1][1].b = tpoly({{mono({0, 0, 1, 0}), 2}});
    // (2,3) = -b t3^2 - a t1 t3^2
    m[1][2].a = tpoly({{mono({1, 0, 2, 0}), -1}});
    m[1][2].b = tpoly({{mono({0, 0, 2, 0}), -1}});
    // (3,1) = c
    m[2][0].c = tpoly({{mono({0, 0, 0, 0}), 1}});
    // (3,2) = b + t1   (the bare t1 carries no element letter as printed)
    m[2][1].b = tpoly({{mono({0, 0, 0, 0}), 1}});
    m[2][1].plain = tpoly({{mono({1, 0, 0, 0}), 1}});
    // (3,3) = a t4
    m[2][2].a = tpoly({{mono({0, 0, 0, 1}), 1}});
    return m;
}

// ---- closed-form comparison ---------------------------------------------------

struct Theorem2Comparison {
    struct Entry {
        int i, j;  // 1-based
        bool agree;
        std::string computed, reference;
    };
    std::vector<Entry> entries;
    int agree_count = 0;
    // which printed variant of the t3^2 / t1*t3^2 terms the integrated series
    // carries, and the residual status when each variant is substituted
    std::string variant_t3sq = "neither";
    std::string variant_t1t3sq = "neither";
    bool residual_zero_with_proof_terms = false;
    bool residual_zero_with_theorem_terms = false;
};

inline Theorem2Comparison compare_closed_form(const DeformationSeries& d) {
    Theorem2Comparison cmp;
    // computed letter parts: grids for the unit elements X, Y, Z
    RatVec ex{rat(1), rat(0), rat(0)}, ey{rat(0), rat(1), rat(0)}, ez{rat(0), rat(0), rat(1)};
    auto gx = apply_symbolic(d, ex, 3);
    auto gy = apply_symbolic(d, ey, 3);
    auto gz = apply_symbolic(d, ez, 3);
    auto printed = printed_result_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            LetterPoly comp;
            comp.a = gx[static_cast<size_t>(i)][static_cast<size_t>(j)];
            comp.c = gy[static_cast<size_t>(i)][static_cast<size_t>(j)];
            comp.b = gz[static_cast<size_t>(i)][static_cast<size_t>(j)];
            bool agree = comp == printed[static_cast<size_t>(i)][static_cast<size_t>(j)];
            cmp.entries.push_back({i + 1, j + 1, agree, comp.str(),
                                   printed[static_cast<size_t>(i)][static_cast<size_t>(j)].str()});
            if (agree) ++cmp.agree_count;
        }

    auto classify = [&](const ParamMonomial& m, const Cochain& proof_term, const Cochain& theorem_term) {
        Cochain t = d.term_or_zero(m);
        if (t == proof_term) return std::string("proof");
        if (t == theorem_term) return std::string("theorem");
        return std::string("neither");
    };
    cmp.variant_t3sq = classify(mono({0, 0, 2, 0}), term_t3sq_proof(), term_t3sq_theorem());
    cmp.variant_t1t3sq = classify(mono({1, 0, 2, 0}), term_t1t3sq_proof(), term_t1t3sq_theorem());

    auto with_terms = [&](const Cochain& t3sq, const Cochain& t1t3sq) {
        DeformationSeries s = d;
        s.set_term(mono({0, 0, 2, 0}), t3sq);
        s.set_term(mono({1, 0, 2, 0}), t1t3sq);
        return mc_residual(s).is_zero();
    };
    cmp.residual_zero_with_proof_terms = with_terms(term_t3sq_proof(), term_t1t3sq_proof());
    cmp.residual_zero_with_theorem_terms = with_terms(term_t3sq_theorem(), term_t1t3sq_theorem());
    return cmp;
}

}  // namespace liedef::refcase
