#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "liedef/cochain.hpp"
#include "liedef/lie.hpp"
#include "liedef/poly.hpp"
#include "liedef/rational.hpp"

namespace liedef {

/// Cup product (Nijenhuis-Richardson) of 1-cochains:
///   [[a,b]](x,y) = [a(x),b(y)] - [a(y),b(x)],
/// a symmetric pairing into 2-cochains.
inline Cochain cup(const LieAlgebra& g, const Cochain& a, const Cochain& b) {
    if (a.degree != 1 || b.degree != 1) throw std::invalid_argument("cup expects 1-cochains");
    if (a.hdim != b.hdim || a.gdim != b.gdim || a.gdim != g.dim)
        throw std::invalid_argument("cup dimension mismatch");
    Cochain out(2, a.hdim, a.gdim);
    const auto tuples = wedge_tuples(a.hdim, 2);
    for (const auto& t : tuples) {
        RatVec v = g.bracket(a.value_at({t[0]}), b.value_at({t[1]}));
        v = vec_sub(v, g.bracket(a.value_at({t[1]}), b.value_at({t[0]})));
        int w = wedge_rank(t, a.hdim);
        for (int k = 0; k < a.gdim; ++k) out.slot(w, k) = v[static_cast<size_t>(k)];
    }
    return out;
}

/// Polynomial with 2-cochain coefficients; zero cochains are never stored.
struct TwoCochainPoly {
    std::map<ParamMonomial, Cochain, MonomialOrder> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const ParamMonomial& m, const Cochain& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    TwoCochainPoly truncated(int max_deg) const {
        TwoCochainPoly out;
        for (const auto& [m, c] : terms)
            if (m.degree() <= max_deg) out.terms.emplace(m, c);
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }
};

/// Polynomial deformation of a homomorphism: the degree-0 term is `base`
/// and `terms` holds the homogeneous pieces of degree >= 1, one 1-cochain
/// per parameter monomial.
struct DeformationSeries {
    LieHom base;
    int param_count = 0;
    std::map<ParamMonomial, Cochain, MonomialOrder> terms;

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    Cochain term_or_zero(const ParamMonomial& m) const {
        auto it = terms.find(m);
        if (it != terms.end()) return it->second;
        return Cochain(1, base.source.dim, base.target.dim);
    }

    void set_term(const ParamMonomial& m, const Cochain& c) {
        if (m.params() != param_count) throw std::invalid_argument("parameter count mismatch");
        if (m.degree() == 0) throw std::invalid_argument("degree-0 term is the base map");
        if (c.is_zero())
            terms.erase(m);
        else
            terms[m] = c;
    }
};

/// First-order series rho0 + sum_i t_i c_i. Each c_i must be a 1-cocycle
/// (the infinitesimal integrability condition).
inline DeformationSeries first_order_series(const LieHom& rho0, const std::vector<Cochain>& cocycles) {
    DeformationSeries d;
    d.base = rho0;
    d.param_count = static_cast<int>(cocycles.size());
    for (size_t i = 0; i < cocycles.size(); ++i) {
        if (!delta(1, rho0, cocycles[i]).is_zero())
            throw std::invalid_argument("cocycle " + std::to_string(i + 1) + " does not satisfy delta1 = 0");
        if (!cocycles[i].is_zero())
            d.terms.emplace(ParamMonomial::variable(d.param_count, static_cast<int>(i)), cocycles[i]);
    }
    return d;
}

/// Homogeneous degree-m right-hand side of the order-m recursion:
///   (1/2) sum_{i+j=m} [[rho_i(t), rho_j(t)]],
/// expanded monomial by monomial over the literal double sum.
inline TwoCochainPoly mc_rhs(const DeformationSeries& d, int m) {
    TwoCochainPoly out;
    const Rational half = rat(1, 2);
    for (const auto& [ma, ca] : d.terms) {
        int da = ma.degree();
        if (da >= m) continue;
        for (const auto& [mb, cb] : d.terms) {
            if (da + mb.degree() != m) continue;
            out.add_term(ma * mb, cup(d.base.target, ca, cb).scaled(half));
        }
    }
    return out;
}

/// Full Maurer-Cartan residual  delta phi(t) - (1/2)[[phi(t),phi(t)]]  with
/// phi = series minus base. Identically zero iff the series is a Lie
/// homomorphism for every parameter value.
inline TwoCochainPoly mc_residual(const DeformationSeries& d) {
    TwoCochainPoly out;
    for (const auto& [m, c] : d.terms) out.add_term(m, delta(1, d.base, c));
    const Rational minus_half = rat(-1, 2);
    for (const auto& [ma, ca] : d.terms)
        for (const auto& [mb, cb] : d.terms)
            out.add_term(ma * mb, cup(d.base.target, ca, cb).scaled(minus_half));
    return out;
}

/// Cohomology class blocking the extension: order, monomial, and the
/// 2-cocycle's coordinates reduced modulo the image of delta1.
struct ObstructionReport {
    int order = 0;
    ParamMonomial monomial;
    RatVec class_coords;
    Cochain cocycle;
};

using ExtendResult = std::variant<DeformationSeries, ObstructionReport>;

/// Solves  delta1 rho_mu = rhs_mu  for every degree-m monomial and merges the
/// solutions into the series; the first monomial whose right-hand side is not
/// a coboundary is returned as the obstruction. The right-hand side must be a
/// 2-cocycle (hard error otherwise -- that would mean the lower orders are
/// inconsistent).
inline ExtendResult extend_order(const DeformationSeries& d, int m) {
    TwoCochainPoly rhs = mc_rhs(d, m);
    DeformationSeries merged = d;
    if (rhs.is_zero()) return merged;
    SubspaceBasis im_d1 = image_basis(delta_matrix(1, d.base));
    for (const auto& [mono, c] : rhs.terms) {
        if (!delta(2, d.base, c).is_zero())
            throw std::logic_error("internal inconsistency: order-" + std::to_string(m) +
                                   " right-hand side is not a 2-cocycle");
        auto pre = coboundary_preimage(c, d.base);
        if (!pre) return ObstructionReport{m, mono, im_d1.reduce(c.coords), c};
        if (!pre->is_zero()) merged.set_term(mono, *pre);
    }
    return merged;
}

struct GuardExceeded : std::runtime_error {
    int order;
    explicit GuardExceeded(int m)
        : std::runtime_error("integration needs order " + std::to_string(m) + " beyond the configured guard"),
          order(m) {}
};

/// Order-by-order integration starting from the given 1-cocycles. Terminates
/// once the order exceeds twice the maximal nonzero degree D: every further
/// right-hand side is a sum of cup products of terms whose degrees cannot
/// reach it. The guard bounds the highest order examined.
inline ExtendResult integrate(const LieHom& rho0, const std::vector<Cochain>& cocycles, int guard = 10) {
    DeformationSeries d = first_order_series(rho0, cocycles);
    for (int m = 2;; ++m) {
        if (m > 2 * d.max_degree()) break;
        if (m > guard) throw GuardExceeded(m);
        ExtendResult r = extend_order(d, m);
        if (std::holds_alternative<ObstructionReport>(r)) return r;
        d = std::get<DeformationSeries>(std::move(r));
    }
    return d;
}

/// 1-cochain x -> [A, c(x)] for a target element A.
inline Cochain ad_action(const LieAlgebra& g, const RatVec& a_coords, const Cochain& c) {
    Cochain out(1, c.hdim, c.gdim);
    for (int x = 0; x < c.hdim; ++x) {
        RatVec v = g.bracket(a_coords, c.value_at({x}));
        for (int k = 0; k < c.gdim; ++k) out.slot(x, k) = v[static_cast<size_t>(k)];
    }
    return out;
}

/// Conjugation by the inner automorphism exp(sum_alpha t^alpha ad A_alpha),
/// truncated at working_degree. Generator monomials must have degree >= 1,
/// otherwise the exponential would not truncate degree by degree.
inline DeformationSeries gauge(const DeformationSeries& d,
                               const std::vector<std::pair<ParamMonomial, RatVec>>& gens,
                               int working_degree) {
    for (const auto& [m, a] : gens) {
        if (m.params() != d.param_count) throw std::invalid_argument("gauge monomial parameter count mismatch");
        if (m.degree() < 1) throw std::invalid_argument("gauge generator monomial must have degree >= 1");
        if (static_cast<int>(a.size()) != d.base.target.dim)
            throw std::invalid_argument("gauge generator must be a target element");
    }

    using TermMap = std::map<ParamMonomial, Cochain, MonomialOrder>;
    auto add_into = [](TermMap& acc, const ParamMonomial& m, const Cochain& c) {
        auto it = acc.find(m);
        if (it == acc.end()) {
            if (!c.is_zero()) acc.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };

    // Full map including the base as the unit-monomial term.
    Cochain base_cochain(1, d.base.source.dim, d.base.target.dim);
    for (int x = 0; x < d.base.source.dim; ++x)
        for (int k = 0; k < d.base.target.dim; ++k)
            base_cochain.slot(x, k) = d.base.images[static_cast<size_t>(x)][static_cast<size_t>(k)];

    TermMap out, cur;
    out.emplace(ParamMonomial::unit(d.param_count), base_cochain);
    cur = out;
    for (const auto& [m, c] : d.terms)
        if (m.degree() <= working_degree) {
            out.emplace(m, c);
            cur.emplace(m, c);
        }

    Rational factorial = 1;
    for (int k = 1; k <= working_degree; ++k) {
        TermMap next;
        for (const auto& [alpha, a] : gens)
            for (const auto& [mu, c] : cur) {
                ParamMonomial nu = alpha * mu;
                if (nu.degree() > working_degree) continue;
                add_into(next, nu, ad_action(d.base.target, a, c));
            }
        if (next.empty()) break;
        cur = std::move(next);
        factorial *= k;
        Rational inv = 1 / factorial;
        for (const auto& [m, c] : cur) add_into(out, m, c.scaled(inv));
    }

    DeformationSeries res;
    res.base = d.base;
    res.param_count = d.param_count;
    for (const auto& [m, c] : out) {
        if (m.is_unit()) {
            if (!(c == base_cochain)) throw std::logic_error("gauge must not move the base term");
            continue;
        }
        res.terms.emplace(m, c);
    }
    return res;
}

inline DeformationSeries gauge(const DeformationSeries& d,
                               const std::vector<std::pair<ParamMonomial, GlElement>>& gens,
                               int working_degree) {
    std::vector<std::pair<ParamMonomial, RatVec>> raw;
    raw.reserve(gens.size());
    for (const auto& [m, a] : gens) raw.emplace_back(m, a.flat());
    return gauge(d, raw, working_degree);
}

/// Per-monomial cohomology classes of the difference of two solutions at
/// order m. If some difference fails to be a 1-cocycle the two series cannot
/// both solve the order-m equation, and that is reported instead.
struct DifferenceClasses {
    bool both_solutions = true;
    std::optional<ParamMonomial> non_cocycle_monomial;
    std::map<ParamMonomial, RatVec, MonomialOrder> classes;
};

inline DifferenceClasses order_difference_class(const DeformationSeries& d1, const DeformationSeries& d2,
                                                int m, const CohomologyReport& h1) {
    if (d1.param_count != d2.param_count) throw std::invalid_argument("parameter count mismatch");
    for (const auto& [mono, c] : d1.terms)
        if (mono.degree() < m && !(d2.term_or_zero(mono) == c))
            throw std::invalid_argument("series disagree below order " + std::to_string(m));
    for (const auto& [mono, c] : d2.terms)
        if (mono.degree() < m && !(d1.term_or_zero(mono) == c))
            throw std::invalid_argument("series disagree below order " + std::to_string(m));

    DifferenceClasses out;
    std::vector<ParamMonomial> monos;
    for (const auto& [mono, c] : d1.terms)
        if (mono.degree() == m) monos.push_back(mono);
    for (const auto& [mono, c] : d2.terms)
        if (mono.degree() == m && d1.terms.find(mono) == d1.terms.end()) monos.push_back(mono);

    for (const auto& mono : monos) {
        Cochain diff = d1.term_or_zero(mono) - d2.term_or_zero(mono);
        if (!delta(1, d1.base, diff).is_zero()) {
            out.both_solutions = false;
            out.non_cocycle_monomial = mono;
            return out;
        }
        out.classes[mono] = class_coordinates(diff.coords, h1);
    }
    return out;
}

/// The deformed map applied to a fixed source element, entries as polynomials
/// in the parameters; requires a matrix-algebra target of size n.
inline std::vector<std::vector<ParamPoly>> apply_symbolic(const DeformationSeries& d, const RatVec& element,
                                                          int n) {
    if (n * n != d.base.target.dim) throw std::invalid_argument("target is not gl(n) for the given n");
    if (static_cast<int>(element.size()) != d.base.source.dim)
        throw std::invalid_argument("element has wrong dimension");
    const int r = d.param_count;
    std::vector<std::vector<ParamPoly>> grid(static_cast<size_t>(n),
                                             std::vector<ParamPoly>(static_cast<size_t>(n), ParamPoly(r)));
    auto add_at = [&](const ParamMonomial& mono, const RatVec& gcoords) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rational& c = gcoords[static_cast<size_t>(i) * n + j];
                if (sgn(c) != 0) grid[static_cast<size_t>(i)][static_cast<size_t>(j)].add_term(mono, c);
            }
    };
    add_at(ParamMonomial::unit(r), d.base.apply(element));
    for (const auto& [mono, c] : d.terms) {
        RatVec v(static_cast<size_t>(d.base.target.dim));
        for (int x = 0; x < d.base.source.dim; ++x)
            if (sgn(element[static_cast<size_t>(x)]) != 0)
                vec_add_scaled(v, element[static_cast<size_t>(x)], c.value_at({x}));
        add_at(mono, v);
    }
    return grid;
}

/// The series at a concrete parameter point, as a plain linear map. This is
/// the evaluation path the pointwise homomorphism oracle runs through.
inline LieHom evaluate_at(const DeformationSeries& d, const RatVec& params) {
    if (static_cast<int>(params.size()) != d.param_count) throw std::invalid_argument("parameter count mismatch");
    LieHom h = d.base;
    for (const auto& [mono, c] : d.terms) {
        Rational scale = 1;
        for (int i = 0; i < d.param_count; ++i)
            for (uint32_t k = 0; k < mono.exponents[static_cast<size_t>(i)]; ++k)
                scale *= params[static_cast<size_t>(i)];
        if (sgn(scale) == 0) continue;
        for (int x = 0; x < d.base.source.dim; ++x)
            vec_add_scaled(h.images[static_cast<size_t>(x)], scale, c.value_at({x}));
    }
    return h;
}

}  // namespace liedef
