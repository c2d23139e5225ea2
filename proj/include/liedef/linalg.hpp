#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liedef/rational.hpp"

namespace liedef {

/// Dense matrix over the rationals. Dimensions here are tiny (27 columns for
/// the reference instance), so no sparsity or pivoting heuristics.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    RatVec a;  // row-major, rows*cols entries

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static QMatrix from_rows(const std::vector<RatVec>& rows_in, int ncols) {
        QMatrix m(static_cast<int>(rows_in.size()), ncols);
        for (size_t i = 0; i < rows_in.size(); ++i) {
            if (static_cast<int>(rows_in[i].size()) != ncols)
                throw std::invalid_argument("row length mismatch");
            for (int j = 0; j < ncols; ++j) m.at(static_cast<int>(i), j) = rows_in[i][j];
        }
        return m;
    }

    static QMatrix from_columns(const std::vector<RatVec>& cols_in, int nrows) {
        QMatrix m(nrows, static_cast<int>(cols_in.size()));
        for (size_t j = 0; j < cols_in.size(); ++j) {
            if (static_cast<int>(cols_in[j].size()) != nrows)
                throw std::invalid_argument("column length mismatch");
            for (int i = 0; i < nrows; ++i) m.at(i, static_cast<int>(j)) = cols_in[j][i];
        }
        return m;
    }

    QMatrix transposed() const {
        QMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RatVec row(int i) const {
        RatVec r(cols);
        for (int j = 0; j < cols; ++j) r[j] = at(i, j);
        return r;
    }

    RatVec mul(const RatVec& x) const {
        if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("size mismatch in mat*vec");
        RatVec y(rows);
        for (int i = 0; i < rows; ++i) {
            Rational s = 0;
            for (int j = 0; j < cols; ++j)
                if (sgn(at(i, j)) != 0 && sgn(x[j]) != 0) s += at(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct RrefResult {
    int rank = 0;
    QMatrix reduced;
    std::vector<int> pivots;  // pivot column per pivot row, increasing
};

/// Unique reduced row-echelon form by exact Gauss-Jordan elimination.
/// First nonzero entry in each unfinished column becomes the pivot.
inline RrefResult rref(QMatrix m) {
    RrefResult res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i) {
            if (sgn(m.at(i, c)) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rational inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || sgn(m.at(i, c)) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

/// Basis of a linear subspace of Q^ambient, stored as the rows of its unique
/// RREF matrix. Two SubspaceBasis values span the same subspace iff they
/// compare equal, and membership testing is plain row reduction.
struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<RatVec> vectors;  // RREF rows, leading 1s at `pivots`
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(vectors.size()); }

    static SubspaceBasis from_spanning(const std::vector<RatVec>& span, int ambient) {
        SubspaceBasis b;
        b.ambient_dim = ambient;
        if (!span.empty()) {
            RrefResult rr = rref(QMatrix::from_rows(span, ambient));
            for (int i = 0; i < rr.rank; ++i) b.vectors.push_back(rr.reduced.row(i));
            b.pivots = rr.pivots;
        }
        return b;
    }

    /// Remainder of v after reduction against the basis rows; zero iff v is
    /// in the span.
    RatVec reduce(RatVec v) const {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw std::invalid_argument("vector/ambient dimension mismatch");
        for (size_t k = 0; k < vectors.size(); ++k) {
            const Rational& c = v[pivots[k]];
            if (sgn(c) != 0) {
                Rational f = c;
                for (int j = 0; j < ambient_dim; ++j) v[j] -= f * vectors[k][j];
            }
        }
        return v;
    }

    bool contains(const RatVec& v) const { return vec_is_zero(reduce(v)); }

    bool contains_all(const std::vector<RatVec>& vs) const {
        return std::all_of(vs.begin(), vs.end(), [&](const RatVec& v) { return contains(v); });
    }

    bool operator==(const SubspaceBasis& o) const {
        return ambient_dim == o.ambient_dim && pivots == o.pivots && vectors == o.vectors;
    }
};

/// Kernel basis in the classical free-column parameterization: one vector per
/// non-pivot column f with x_f = 1 and all other free coordinates zero.
/// Count is always cols - rank.
inline SubspaceBasis kernel_basis(const QMatrix& m) {
    RrefResult rr = rref(m);
    SubspaceBasis b;
    b.ambient_dim = m.cols;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<RatVec> gens;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols);
        v[f] = 1;
        for (size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced.at(static_cast<int>(k), f);
        gens.push_back(std::move(v));
    }
    return SubspaceBasis::from_spanning(gens, m.cols);
}

/// Column-space basis (canonical form via the transpose's row space).
inline SubspaceBasis image_basis(const QMatrix& m) {
    std::vector<RatVec> cols;
    for (int j = 0; j < m.cols; ++j) {
        RatVec v(m.rows);
        for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
        cols.push_back(std::move(v));
    }
    return SubspaceBasis::from_spanning(cols, m.rows);
}

/// Particular solution of m*x = b with every free (non-pivot) variable set to
/// zero; nullopt when b is outside the column space. The all-free-zero rule
/// makes the result unique and reproducible.
inline std::optional<RatVec> solve_particular(const QMatrix& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("rhs length != rows");
    QMatrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols) return std::nullopt;  // inconsistent row
    RatVec x(m.cols);
    for (size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.reduced.at(static_cast<int>(k), m.cols);
    return x;
}

}  // namespace liedef
