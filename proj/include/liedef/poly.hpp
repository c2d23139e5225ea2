#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liedef/rational.hpp"

namespace liedef {

/// Monomial in the deformation parameters t1..tr, stored as its exponent
/// vector. The all-zero vector is the unit monomial.
struct ParamMonomial {
    std::vector<uint32_t> exponents;

    ParamMonomial() = default;
    explicit ParamMonomial(int r) : exponents(static_cast<size_t>(r), 0) {}
    ParamMonomial(std::initializer_list<uint32_t> e) : exponents(e) {}

    int params() const { return static_cast<int>(exponents.size()); }
    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }
    bool is_unit() const { return degree() == 0; }

    static ParamMonomial unit(int r) { return ParamMonomial(r); }
    static ParamMonomial variable(int r, int i, uint32_t power = 1) {
        ParamMonomial m(r);
        m.exponents[static_cast<size_t>(i)] = power;
        return m;
    }

    ParamMonomial operator*(const ParamMonomial& o) const {
        if (exponents.size() != o.exponents.size())
            throw std::invalid_argument("parameter count mismatch");
        ParamMonomial m(*this);
        for (size_t i = 0; i < exponents.size(); ++i) m.exponents[i] += o.exponents[i];
        return m;
    }

    bool operator==(const ParamMonomial& o) const { return exponents == o.exponents; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "t" + std::to_string(i + 1);
            if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Graded order: by total degree, then t1-heavy monomials first, so one
/// degree-2 block reads t1*t2, t1*t3, ..., t2^2, ...
struct MonomialOrder {
    bool operator()(const ParamMonomial& x, const ParamMonomial& y) const {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        return x.exponents > y.exponents;  // lexicographically larger exponents first
    }
};

/// Sparse multivariate polynomial over the rationals; zero coefficients are
/// never stored.
struct ParamPoly {
    int r = 0;
    std::map<ParamMonomial, Rational, MonomialOrder> terms;

    ParamPoly() = default;
    explicit ParamPoly(int params) : r(params) {}

    static ParamPoly constant(int params, const Rational& c) {
        ParamPoly p(params);
        if (sgn(c) != 0) p.terms[ParamMonomial::unit(params)] = c;
        return p;
    }
    static ParamPoly monomial(int params, const ParamMonomial& m, const Rational& c = 1) {
        if (m.params() != params) throw std::invalid_argument("parameter count mismatch");
        ParamPoly p(params);
        if (sgn(c) != 0) p.terms[m] = c;
        return p;
    }
    static ParamPoly variable(int params, int i) {
        return monomial(params, ParamMonomial::variable(params, i));
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const ParamMonomial& m, const Rational& c) {
        if (m.params() != r) throw std::invalid_argument("parameter count mismatch");
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (sgn(c) != 0) terms.emplace(m, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms.erase(it);
        }
    }

    ParamPoly operator+(const ParamPoly& o) const {
        check(o);
        ParamPoly p(*this);
        for (const auto& [m, c] : o.terms) p.add_term(m, c);
        return p;
    }
    ParamPoly operator-(const ParamPoly& o) const {
        check(o);
        ParamPoly p(*this);
        for (const auto& [m, c] : o.terms) p.add_term(m, -c);
        return p;
    }
    ParamPoly operator*(const ParamPoly& o) const {
        check(o);
        ParamPoly p(r);
        for (const auto& [ma, ca] : terms)
            for (const auto& [mb, cb] : o.terms) p.add_term(ma * mb, ca * cb);
        return p;
    }
    ParamPoly scaled(const Rational& s) const {
        ParamPoly p(r);
        if (sgn(s) == 0) return p;
        for (const auto& [m, c] : terms) p.terms.emplace(m, s * c);
        return p;
    }

    bool operator==(const ParamPoly& o) const { return r == o.r && terms == o.terms; }

    /// Degree-m homogeneous slice; summing the slices recovers the polynomial.
    ParamPoly homogeneous_part(int m) const {
        ParamPoly p(r);
        for (const auto& [mono, c] : terms)
            if (mono.degree() == m) p.terms.emplace(mono, c);
        return p;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [mono, c] : terms) d = std::max(d, mono.degree());
        return d;
    }

    Rational eval(const RatVec& values) const {
        if (static_cast<int>(values.size()) != r) throw std::invalid_argument("parameter count mismatch");
        Rational acc = 0;
        for (const auto& [mono, c] : terms) {
            Rational t = c;
            for (int i = 0; i < r; ++i)
                for (uint32_t k = 0; k < mono.exponents[static_cast<size_t>(i)]; ++k) t *= values[static_cast<size_t>(i)];
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mono, c] : terms) {
            Rational ac = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            if (mono.is_unit())
                os << ac.get_str();
            else if (ac == 1)
                os << mono.str();
            else
                os << ac.get_str() << "*" << mono.str();
        }
        return os.str();
    }

private:
    void check(const ParamPoly& o) const {
        if (r != o.r) throw std::invalid_argument("parameter count mismatch");
    }
};

}  // namespace liedef
