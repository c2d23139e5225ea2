#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liedef/lie.hpp"
#include "liedef/linalg.hpp"
#include "liedef/rational.hpp"

namespace liedef {

inline int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

/// Strictly increasing p-tuples over {0..n-1}, lexicographic. For p = 0 the
/// single empty tuple.
inline std::vector<std::vector<int>> wedge_tuples(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Lexicographic rank of an increasing tuple among wedge_tuples(n, p).
inline int wedge_rank(const std::vector<int>& t, int n) {
    const int p = static_cast<int>(t.size());
    int rank = 0, prev = -1;
    for (int pos = 0; pos < p; ++pos) {
        for (int v = prev + 1; v < t[static_cast<size_t>(pos)]; ++v) rank += binom(n - 1 - v, p - 1 - pos);
        prev = t[static_cast<size_t>(pos)];
    }
    return rank;
}

/// Alternating p-linear map h -> g in coordinates over the ordered basis
/// {wedge-p basis of h*} tensor {basis of g}; coordinate index is
/// wedge_rank * gdim + g_index. The degree-2 block order for a 3-dimensional
/// source is therefore X*^Y*, X*^Z*, Y*^Z*.
struct Cochain {
    int degree = 0;
    int hdim = 0;
    int gdim = 0;
    RatVec coords;

    Cochain() = default;
    Cochain(int p, int hd, int gd)
        : degree(p), hdim(hd), gdim(gd), coords(static_cast<size_t>(binom(hd, p)) * gd) {
        if (p < 0 || p > 3) throw std::invalid_argument("cochain degree must be in 0..3");
    }

    int wedge_count() const { return binom(hdim, degree); }

    Rational& slot(int wedge, int g) { return coords[static_cast<size_t>(wedge) * gdim + g]; }
    const Rational& slot(int wedge, int g) const { return coords[static_cast<size_t>(wedge) * gdim + g]; }

    bool is_zero() const { return vec_is_zero(coords); }

    Cochain operator+(const Cochain& o) const {
        check(o);
        Cochain c(*this);
        c.coords = vec_add(coords, o.coords);
        return c;
    }
    Cochain operator-(const Cochain& o) const {
        check(o);
        Cochain c(*this);
        c.coords = vec_sub(coords, o.coords);
        return c;
    }
    Cochain scaled(const Rational& s) const {
        Cochain c(*this);
        c.coords = vec_scale(s, coords);
        return c;
    }
    bool operator==(const Cochain& o) const {
        return degree == o.degree && hdim == o.hdim && gdim == o.gdim && coords == o.coords;
    }

    /// g-coordinates of the value on an increasing basis tuple.
    RatVec value_at(const std::vector<int>& tuple) const {
        RatVec v(static_cast<size_t>(gdim));
        int w = wedge_rank(tuple, hdim);
        for (int g = 0; g < gdim; ++g) v[static_cast<size_t>(g)] = slot(w, g);
        return v;
    }

    /// Value on an arbitrary index tuple: repeated indices give zero, and the
    /// sorting permutation contributes its sign.
    RatVec value_at_signed(std::vector<int> idx) const {
        int sign = 1;
        for (size_t i = 1; i < idx.size(); ++i)  // insertion sort, counting swaps
            for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
                std::swap(idx[j], idx[j - 1]);
                sign = -sign;
            }
        for (size_t i = 1; i < idx.size(); ++i)
            if (idx[i] == idx[i - 1]) return RatVec(static_cast<size_t>(gdim));
        RatVec v = value_at(idx);
        return sign == 1 ? v : vec_scale(-1, v);
    }

    static Cochain from_value_map(int p, int hd, int gd,
                                  const std::vector<std::pair<std::vector<int>, RatVec>>& values) {
        Cochain c(p, hd, gd);
        for (const auto& [tuple, v] : values) {
            int w = wedge_rank(tuple, hd);
            for (int g = 0; g < gd; ++g) c.slot(w, g) += v[static_cast<size_t>(g)];
        }
        return c;
    }

private:
    void check(const Cochain& o) const {
        if (degree != o.degree || hdim != o.hdim || gdim != o.gdim)
            throw std::invalid_argument("cochain shape mismatch");
    }
};

/// Coboundary operator. Sign convention: the negative of the usual
/// Chevalley-Eilenberg differential in every degree, i.e.
///   delta0 A (x)    = [A, rho(x)]
///   delta1 m (x,y)  = m([x,y]) - [rho(x), m(y)] + [rho(y), m(x)]
/// and the same global flip in degree 2, so delta(p+1) o delta(p) = 0 still
/// holds (asserted in the tests, not assumed).
inline Cochain delta(int p, const LieHom& rho, const Cochain& c) {
    if (p != c.degree) throw std::invalid_argument("degree argument disagrees with cochain");
    if (p < 0 || p > 2) throw std::invalid_argument("delta is defined for degrees 0,1,2 only");
    if (c.hdim != rho.source.dim || c.gdim != rho.target.dim)
        throw std::invalid_argument("cochain shape disagrees with homomorphism");

    const int hd = c.hdim, gd = c.gdim;
    Cochain out(p + 1, hd, gd);
    const auto tuples = wedge_tuples(hd, p + 1);
    for (const auto& s : tuples) {
        RatVec acc(static_cast<size_t>(gd));
        for (int i = 0; i <= p; ++i) {
            std::vector<int> rest;
            for (int k = 0; k <= p; ++k)
                if (k != i) rest.push_back(s[static_cast<size_t>(k)]);
            RatVec term = rho.target.bracket(rho.images[static_cast<size_t>(s[static_cast<size_t>(i)])],
                                             c.value_at(rest));
            // negated (-1)^i [rho(x_i), c(... x_i omitted ...)]
            if (i % 2 == 0)
                acc = vec_sub(acc, term);
            else
                acc = vec_add(acc, term);
        }
        for (int i = 0; i <= p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                const RatVec& w =
                    rho.source.structure[static_cast<size_t>(s[static_cast<size_t>(i)])][static_cast<size_t>(s[static_cast<size_t>(j)])];
                if (vec_is_zero(w)) continue;
                std::vector<int> rest;
                for (int k = 0; k <= p; ++k)
                    if (k != i && k != j) rest.push_back(s[static_cast<size_t>(k)]);
                RatVec term(static_cast<size_t>(gd));
                for (int b = 0; b < hd; ++b) {
                    if (sgn(w[static_cast<size_t>(b)]) == 0) continue;
                    std::vector<int> idx;
                    idx.push_back(b);
                    idx.insert(idx.end(), rest.begin(), rest.end());
                    vec_add_scaled(term, w[static_cast<size_t>(b)], c.value_at_signed(idx));
                }
                // negated (-1)^{i+j} c([x_i,x_j], ...)
                if ((i + j) % 2 == 0)
                    acc = vec_sub(acc, term);
                else
                    acc = vec_add(acc, term);
            }
        int w = wedge_rank(s, hd);
        for (int g = 0; g < gd; ++g) out.slot(w, g) = acc[static_cast<size_t>(g)];
    }
    return out;
}

/// Matrix of delta(p) in the fixed coordinate bases; columns follow the
/// domain cochain basis order.
inline QMatrix delta_matrix(int p, const LieHom& rho) {
    const int hd = rho.source.dim, gd = rho.target.dim;
    const int dom = binom(hd, p) * gd;
    const int codom = binom(hd, p + 1) * gd;
    QMatrix m(codom, dom);
    for (int col = 0; col < dom; ++col) {
        Cochain unit(p, hd, gd);
        unit.coords[static_cast<size_t>(col)] = 1;
        Cochain img = delta(p, rho, unit);
        for (int row = 0; row < codom; ++row) m.at(row, col) = img.coords[static_cast<size_t>(row)];
    }
    return m;
}

inline SubspaceBasis cocycles(int p, const LieHom& rho) { return kernel_basis(delta_matrix(p, rho)); }

inline SubspaceBasis coboundaries(int p, const LieHom& rho) {
    if (p < 1) throw std::invalid_argument("coboundaries need degree >= 1");
    return image_basis(delta_matrix(p - 1, rho));
}

struct CohomologyReport {
    int p = 1;
    SubspaceBasis cocycle_basis;
    SubspaceBasis coboundary_basis;
    std::vector<Cochain> representatives;
    int dim_z = 0, dim_b = 0, dim_h = 0;
};

/// Z^p, B^p, and representatives of the quotient obtained by extending the
/// coboundary basis through the canonical cocycle basis (first-fit pivot
/// rule, hence deterministic).
inline CohomologyReport cohomology(int p, const LieHom& rho) {
    if (p < 1) throw std::invalid_argument("cohomology computed for degree >= 1");
    CohomologyReport rep;
    rep.p = p;
    rep.cocycle_basis = cocycles(p, rho);
    rep.coboundary_basis = coboundaries(p, rho);
    if (!rep.cocycle_basis.contains_all(rep.coboundary_basis.vectors))
        throw std::logic_error("coboundaries are not cocycles; the map is not a Lie homomorphism");
    rep.dim_z = rep.cocycle_basis.dim();
    rep.dim_b = rep.coboundary_basis.dim();
    rep.dim_h = rep.dim_z - rep.dim_b;

    SubspaceBasis cur = rep.coboundary_basis;
    for (const auto& z : rep.cocycle_basis.vectors) {
        if (cur.contains(z)) continue;
        Cochain c(p, rho.source.dim, rho.target.dim);
        c.coords = z;
        rep.representatives.push_back(std::move(c));
        auto vecs = cur.vectors;
        vecs.push_back(z);
        cur = SubspaceBasis::from_spanning(vecs, cur.ambient_dim);
    }
    return rep;
}

/// Preimage under delta1 with all free variables zero, or nullopt when the
/// 2-cochain is not a coboundary (the obstruction signal).
inline std::optional<Cochain> coboundary_preimage(const Cochain& c, const LieHom& rho) {
    if (c.degree != 2) throw std::invalid_argument("coboundary_preimage expects a 2-cochain");
    auto x = solve_particular(delta_matrix(1, rho), c.coords);
    if (!x) return std::nullopt;
    Cochain pre(1, c.hdim, c.gdim);
    pre.coords = std::move(*x);
    return pre;
}

/// Class coordinates of a cocycle relative to a report's representatives:
/// unique coefficients alpha with  z = sum alpha_i rep_i  (mod B^p).
inline RatVec class_coordinates(const RatVec& z, const CohomologyReport& rep) {
    std::vector<RatVec> cols = rep.coboundary_basis.vectors;
    for (const auto& r : rep.representatives) cols.push_back(r.coords);
    QMatrix m = QMatrix::from_columns(cols, rep.cocycle_basis.ambient_dim);
    auto sol = solve_particular(m, z);
    if (!sol) throw std::invalid_argument("vector is not in the cocycle space");
    RatVec alpha(rep.representatives.size());
    for (size_t i = 0; i < rep.representatives.size(); ++i)
        alpha[i] = (*sol)[rep.coboundary_basis.vectors.size() + i];
    return alpha;
}

/// Renders a cochain in dual-basis notation, e.g. "X*∧Y*⊗e31 - 2Z*⊗e21".
inline std::string cochain_str(const Cochain& c, const std::vector<std::string>& h_labels,
                               const std::vector<std::string>& g_labels) {
    const auto tuples = wedge_tuples(c.hdim, c.degree);
    std::ostringstream os;
    bool first = true;
    for (size_t w = 0; w < tuples.size(); ++w)
        for (int g = 0; g < c.gdim; ++g) {
            const Rational& coef = c.slot(static_cast<int>(w), g);
            if (sgn(coef) == 0) continue;
            Rational ac = abs(coef);
            if (first) {
                if (sgn(coef) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(coef) < 0 ? " - " : " + ");
            }
            if (ac != 1) os << ac.get_str() << (ac.get_den() == 1 ? "" : " ");
            std::string wedge;
            for (size_t k = 0; k < tuples[w].size(); ++k) {
                if (k) wedge += "∧";
                wedge += h_labels[static_cast<size_t>(tuples[w][k])] + "*";
            }
            if (!wedge.empty()) os << wedge << "⊗";
            os << g_labels[static_cast<size_t>(g)];
        }
    return first ? "0" : os.str();
}

}  // namespace liedef
