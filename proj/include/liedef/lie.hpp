#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liedef/linalg.hpp"
#include "liedef/rational.hpp"

namespace liedef {

/// Element of gl(n) as a dense rational n x n matrix. Flat coordinates are
/// row-major, matching the e11,e12,...,e33 basis order used everywhere.
struct GlElement {
    int n = 0;
    RatVec a;  // n*n, row-major

    GlElement() = default;
    explicit GlElement(int size) : n(size), a(static_cast<size_t>(size) * size) {}

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    /// Matrix unit e_{ij} (1-based indices, as in the usual notation).
    static GlElement unit(int size, int i, int j) {
        GlElement m(size);
        m.at(i - 1, j - 1) = 1;
        return m;
    }
    static GlElement identity(int size) {
        GlElement m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }
    static GlElement from_flat(int size, RatVec flat) {
        if (static_cast<int>(flat.size()) != size * size) throw std::invalid_argument("bad flat size");
        GlElement m(size);
        m.a = std::move(flat);
        return m;
    }

    const RatVec& flat() const { return a; }
    bool is_zero() const { return vec_is_zero(a); }

    GlElement operator+(const GlElement& o) const {
        check(o);
        GlElement m(n);
        m.a = vec_add(a, o.a);
        return m;
    }
    GlElement operator-(const GlElement& o) const {
        check(o);
        GlElement m(n);
        m.a = vec_sub(a, o.a);
        return m;
    }
    GlElement scaled(const Rational& s) const {
        GlElement m(n);
        m.a = vec_scale(s, a);
        return m;
    }
    bool operator==(const GlElement& o) const { return n == o.n && a == o.a; }

    GlElement mul(const GlElement& o) const {
        check(o);
        GlElement m(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (sgn(at(i, k)) == 0) continue;
                for (int j = 0; j < n; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
            }
        return m;
    }

private:
    void check(const GlElement& o) const {
        if (n != o.n) throw std::invalid_argument("gl element size mismatch");
    }
};

/// [A,B] = AB - BA, exactly.
inline GlElement commutator(const GlElement& x, const GlElement& y) {
    return x.mul(y) - y.mul(x);
}

/// Finite-dimensional Lie algebra presented by structure constants:
/// [b_i, b_j] = sum_k structure[i][j][k] b_k.
struct LieAlgebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<RatVec>> structure;  // [i][j] -> coords of [b_i,b_j]

    LieAlgebra() = default;
    explicit LieAlgebra(int d)
        : dim(d), structure(static_cast<size_t>(d), std::vector<RatVec>(static_cast<size_t>(d), RatVec(static_cast<size_t>(d)))) {
        for (int i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i + 1));
    }

    /// Bilinear extension of the structure constants.
    RatVec bracket(const RatVec& x, const RatVec& y) const {
        RatVec out(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            if (sgn(x[static_cast<size_t>(i)]) == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (sgn(y[static_cast<size_t>(j)]) == 0) continue;
                vec_add_scaled(out, x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)],
                               structure[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            }
        }
        return out;
    }

    RatVec basis_vector(int i) const {
        RatVec v(static_cast<size_t>(dim));
        v[static_cast<size_t>(i)] = 1;
        return v;
    }

    bool antisymmetry_holds() const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                RatVec s = vec_add(structure[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                   structure[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                if (!vec_is_zero(s)) return false;
            }
        return true;
    }

    /// Jacobi identity, expanded directly on all basis triples.
    bool jacobi_holds() const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) {
                    RatVec s = bracket(bracket(basis_vector(i), basis_vector(j)), basis_vector(k));
                    s = vec_add(s, bracket(bracket(basis_vector(j), basis_vector(k)), basis_vector(i)));
                    s = vec_add(s, bracket(bracket(basis_vector(k), basis_vector(i)), basis_vector(j)));
                    if (!vec_is_zero(s)) return false;
                }
        return true;
    }

    bool operator==(const LieAlgebra& o) const {
        return dim == o.dim && labels == o.labels && structure == o.structure;
    }
};

/// gl(n) as a LieAlgebra: basis e11, e12, ..., enn (row-major), structure
/// constants from the matrix commutator.
inline LieAlgebra gl_algebra(int n) {
    LieAlgebra g(n * n);
    g.labels.clear();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) g.labels.push_back("e" + std::to_string(i) + std::to_string(j));
    for (int p = 0; p < n * n; ++p)
        for (int q = 0; q < n * n; ++q) {
            GlElement x = GlElement::from_flat(n, [&] {
                RatVec v(static_cast<size_t>(n) * n);
                v[static_cast<size_t>(p)] = 1;
                return v;
            }());
            GlElement y = GlElement::from_flat(n, [&] {
                RatVec v(static_cast<size_t>(n) * n);
                v[static_cast<size_t>(q)] = 1;
                return v;
            }());
            g.structure[static_cast<size_t>(p)][static_cast<size_t>(q)] = commutator(x, y).flat();
        }
    return g;
}

/// Linear map between Lie algebras, given by the target coordinates of each
/// source basis vector. Whether it is a homomorphism is a property checked by
/// check_homomorphism, not an assumption of the type.
struct LieHom {
    LieAlgebra source;
    LieAlgebra target;
    std::vector<RatVec> images;  // images[i] = target coords of rho(b_i)

    RatVec apply(const RatVec& x) const {
        RatVec out(static_cast<size_t>(target.dim));
        for (int i = 0; i < source.dim; ++i)
            if (sgn(x[static_cast<size_t>(i)]) != 0)
                vec_add_scaled(out, x[static_cast<size_t>(i)], images[static_cast<size_t>(i)]);
        return out;
    }

    static LieHom zero_map(LieAlgebra src, LieAlgebra tgt) {
        LieHom h{std::move(src), std::move(tgt), {}};
        h.images.assign(static_cast<size_t>(h.source.dim), RatVec(static_cast<size_t>(h.target.dim)));
        return h;
    }
};

struct HomViolation {
    int i = 0, j = 0;
    RatVec image_of_bracket;   // rho([b_i,b_j])
    RatVec bracket_of_images;  // [rho(b_i),rho(b_j)]
};

struct HomCheck {
    bool ok = true;
    std::vector<HomViolation> violations;
};

/// rho([x,y]) == [rho(x),rho(y)] on all basis pairs; failing pairs are
/// reported with both sides.
inline HomCheck check_homomorphism(const LieHom& rho) {
    HomCheck res;
    for (int i = 0; i < rho.source.dim; ++i)
        for (int j = i + 1; j < rho.source.dim; ++j) {
            RatVec lhs = rho.apply(rho.source.bracket(rho.source.basis_vector(i), rho.source.basis_vector(j)));
            RatVec rhs = rho.target.bracket(rho.images[static_cast<size_t>(i)], rho.images[static_cast<size_t>(j)]);
            if (lhs != rhs) {
                res.ok = false;
                res.violations.push_back({i, j, lhs, rhs});
            }
        }
    return res;
}

/// Lie algebra spanned by a list of matrices, with the inclusion into gl(n).
/// The generators must be linearly independent and their span closed under
/// the commutator; the offending pair is named otherwise.
inline std::pair<LieAlgebra, LieHom> algebra_from_matrices(const std::vector<GlElement>& gens,
                                                           std::vector<std::string> labels = {}) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    const int n = gens[0].n;
    const int k = static_cast<int>(gens.size());
    std::vector<RatVec> cols;
    for (const auto& g : gens) {
        if (g.n != n) throw std::invalid_argument("generator size mismatch");
        cols.push_back(g.flat());
    }
    QMatrix m = QMatrix::from_columns(cols, n * n);
    if (rref(m).rank != k) throw std::invalid_argument("generators are linearly dependent");

    LieAlgebra h(k);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != k) throw std::invalid_argument("label count mismatch");
        h.labels = std::move(labels);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            GlElement br = commutator(gens[static_cast<size_t>(i)], gens[static_cast<size_t>(j)]);
            auto coords = solve_particular(m, br.flat());
            if (!coords) {
                std::ostringstream os;
                os << "span not closed under commutator: [" << h.labels[static_cast<size_t>(i)] << ","
                   << h.labels[static_cast<size_t>(j)] << "] is outside the span";
                throw std::invalid_argument(os.str());
            }
            h.structure[static_cast<size_t>(i)][static_cast<size_t>(j)] = *coords;
            h.structure[static_cast<size_t>(j)][static_cast<size_t>(i)] = vec_scale(-1, *coords);
        }
    if (!h.antisymmetry_holds() || !h.jacobi_holds())
        throw std::logic_error("structure constants fail antisymmetry/Jacobi");

    LieHom rho{h, gl_algebra(n), {}};
    for (const auto& g : gens) rho.images.push_back(g.flat());
    return {std::move(h), std::move(rho)};
}

}  // namespace liedef
