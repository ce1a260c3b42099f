#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curvex/errors.hpp"
#include "curvex/index_value.hpp"
#include "curvex/rat.hpp"

namespace curvex {

using RatVector = std::vector<Rat>;

class RatMatrix {
  public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

inline RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
    if (int(x.size()) != a.cols()) throw DimensionMismatch("mat_vec size mismatch");
    RatVector y(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Rat s = 0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat vec_sum(const RatVector& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    return s;
}

namespace detail {

// Row echelon form over the integers, produced by fraction-free (Bareiss)
// elimination. Rows are pre-scaled by the lcm of their denominators, which
// preserves solution sets and null spaces. Pivot selection is the first
// nonzero entry in column order, so results are deterministic.
struct EchelonForm {
    std::vector<std::vector<BigInt>> m;
    std::vector<int> pivot_cols;  // one per pivot row, strictly increasing
    int cols = 0;
    int rank() const { return int(pivot_cols.size()); }
};

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination lost exact divisibility");
    return q;
}

inline EchelonForm echelon(const RatMatrix& a, const RatVector* rhs = nullptr) {
    const int rows = a.rows();
    const int cols = a.cols() + (rhs ? 1 : 0);
    if (rhs && int(rhs->size()) != rows) throw DimensionMismatch("rhs length != rows");

    EchelonForm ef;
    ef.cols = cols;
    ef.m.assign(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt scale = 1;
        for (int j = 0; j < a.cols(); ++j) scale = lcm(scale, denominator(a(i, j)));
        if (rhs) scale = lcm(scale, denominator((*rhs)[i]));
        for (int j = 0; j < a.cols(); ++j) {
            const Rat& q = a(i, j);
            ef.m[i][j] = numerator(q) * (scale / denominator(q));
        }
        if (rhs) {
            const Rat& q = (*rhs)[i];
            ef.m[i][cols - 1] = numerator(q) * (scale / denominator(q));
        }
    }

    BigInt prev = 1;
    int pr = 0;  // next pivot row
    for (int col = 0; col < cols && pr < rows; ++col) {
        int piv = -1;
        for (int i = pr; i < rows; ++i) {
            if (ef.m[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != pr) std::swap(ef.m[piv], ef.m[pr]);
        const BigInt& p = ef.m[pr][col];
        for (int i = pr + 1; i < rows; ++i) {
            if (ef.m[i][col] == 0) {
                // Still needs the Bareiss rescale to keep later divisions exact.
                for (int j = col + 1; j < cols; ++j)
                    ef.m[i][j] = exact_div(ef.m[i][j] * p, prev);
                continue;
            }
            for (int j = col + 1; j < cols; ++j)
                ef.m[i][j] = exact_div(ef.m[i][j] * p - ef.m[i][col] * ef.m[pr][j], prev);
            ef.m[i][col] = 0;
        }
        prev = p;
        ef.pivot_cols.push_back(col);
        ++pr;
    }
    return ef;
}

// Back-substitution with free variables set to zero. `vars` is the number of
// unknowns; when the echelon form carries an augmented column it is cols-1.
inline RatVector back_substitute(const EchelonForm& ef, int vars, bool augmented) {
    RatVector x(vars, Rat(0));
    for (int r = ef.rank() - 1; r >= 0; --r) {
        int pc = ef.pivot_cols[r];
        if (pc >= vars) continue;  // pivot in augmented column handled by caller
        Rat acc = augmented ? Rat(ef.m[r][ef.cols - 1]) : Rat(0);
        for (int j = pc + 1; j < vars; ++j) {
            if (ef.m[r][j] != 0) acc -= Rat(ef.m[r][j]) * x[j];
        }
        x[pc] = acc / Rat(ef.m[r][pc]);
    }
    return x;
}

}  // namespace detail

inline int rank(const RatMatrix& a) { return detail::echelon(a).rank(); }

// Some exact solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (int(b.size()) != a.rows()) throw DimensionMismatch("solve: b length != rows");
    detail::EchelonForm ef = detail::echelon(a, &b);
    for (int c : ef.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // pivot in the augmented column
    return detail::back_substitute(ef, a.cols(), /*augmented=*/true);
}

// Exact basis of the null space (empty when A is injective).
inline std::vector<RatVector> kernel_basis(const RatMatrix& a) {
    detail::EchelonForm ef = detail::echelon(a);
    const int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n, Rat(0));
        v[f] = 1;
        for (int r = ef.rank() - 1; r >= 0; --r) {
            int pc = ef.pivot_cols[r];
            if (pc > f) continue;
            Rat acc = 0;
            for (int j = pc + 1; j < n; ++j)
                if (ef.m[r][j] != 0 && v[j] != 0) acc -= Rat(ef.m[r][j]) * v[j];
            v[pc] = acc / Rat(ef.m[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Minimum-norm solution of A x = b for symmetric A: the particular solution
// minus its exact projection onto ker(A), via a Gram solve. Agrees with the
// Moore-Penrose pseudoinverse applied to b whenever the system is consistent.
inline std::optional<RatVector> min_norm_solve(const RatMatrix& a, const RatVector& b) {
    if (!a.is_symmetric()) throw NotSymmetric("min_norm_solve requires a symmetric matrix");
    std::optional<RatVector> part = solve(a, b);
    if (!part) return std::nullopt;
    std::vector<RatVector> ker = kernel_basis(a);
    if (ker.empty()) return part;

    const int k = int(ker.size());
    RatMatrix gram(k, k);
    RatVector rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            Rat g = dot(ker[i], ker[j]);
            gram(i, j) = g;
            gram(j, i) = g;
        }
        rhs[i] = dot(ker[i], *part);
    }
    std::optional<RatVector> coef = solve(gram, rhs);
    // The Gram matrix of independent vectors is positive definite.
    if (!coef) throw std::logic_error("singular Gram matrix of a kernel basis");
    RatVector x = *part;
    for (int i = 0; i < k; ++i)
        for (std::size_t t = 0; t < x.size(); ++t) x[t] -= (*coef)[i] * ker[i][t];
    return x;
}

struct AffineIndexSolution {
    IndexValue index;
    std::optional<RatVector> witness;  // unit-sum x with D x = index * 1
};

// Solves the bordered system  [D  -1; 1^T  0] (x, c) = (0, 1):  a unit-sum x
// with D x = c 1. Consistent  ->  Finite(c) plus the witness; inconsistent ->
// Infinite, which is exactly the "all curvature potentials have zero mean"
// convention (any solution of D y = 1 then has zero sum, so no unit-sum
// vector maps into the span of 1).
inline AffineIndexSolution solve_affine_index(const RatMatrix& d) {
    if (!d.is_symmetric()) throw NotSymmetric("solve_affine_index requires a symmetric matrix");
    const int n = d.rows();
    RatMatrix bordered(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) bordered(i, j) = d(i, j);
        bordered(i, n) = -1;
        bordered(n, i) = 1;
    }
    bordered(n, n) = 0;
    RatVector rhs(n + 1, Rat(0));
    rhs[n] = 1;

    std::optional<RatVector> sol = solve(bordered, rhs);
    if (!sol) return {IndexValue::infinite(), std::nullopt};
    RatVector x(sol->begin(), sol->begin() + n);
    return {IndexValue::finite((*sol)[n]), std::move(x)};
}

}  // namespace curvex
