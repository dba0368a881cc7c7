#include "iga/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace iga {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

SingularMatrixError::SingularMatrixError(int col)
    : std::runtime_error("singular matrix: zero pivot in column " + std::to_string(col)),
      column(col) {}

NotSpdError::NotSpdError(int idx)
    : std::runtime_error("matrix not SPD: non-positive pivot at index " + std::to_string(idx)),
      index(idx) {}

EigenIterationError::EigenIterationError()
    : std::runtime_error("Jacobi eigensolver: no convergence within 100 sweeps") {}

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
    std::vector<double> y(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (double v : a.data) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> lu_solve(DenseMatrix a, std::vector<double> b) {
    if (a.rows != a.cols || a.rows != static_cast<int>(b.size()))
        throw std::invalid_argument("lu_solve: dimension mismatch");
    const int n = a.rows;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) throw SingularMatrixError(k);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        const double inv = 1.0 / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double m = a(i, k) * inv;
            if (m == 0.0) continue;
            a(i, k) = m;
            for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
            b[i] -= m * b[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
        b[i] = s / a(i, i);
    }
    return b;
}

DenseMatrix cholesky(const DenseMatrix& g) {
    if (g.rows != g.cols) throw std::invalid_argument("cholesky: matrix not square");
    const int n = g.rows;
    const double scale = std::max(1.0, max_abs(g));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(g(i, j) - g(j, i)) > 1e-12 * scale)
                throw std::invalid_argument("cholesky: matrix not symmetric");
    DenseMatrix l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = g(j, j);
        for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d <= 0.0) throw NotSpdError(j);
        l(j, j) = std::sqrt(d);
        const double inv = 1.0 / l(j, j);
        for (int i = j + 1; i < n; ++i) {
            double s = g(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s * inv;
        }
    }
    return l;
}

namespace {

double frobenius(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return std::sqrt(s);
}

double off_diagonal_frobenius(const DenseMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Cyclic Jacobi with accumulated rotations. `a` is consumed; on return its
// diagonal holds the eigenvalues and the columns of `v` the eigenvectors.
void jacobi_eigen(DenseMatrix& a, DenseMatrix& v) {
    const int n = a.rows;
    v = DenseMatrix::identity(n);
    const double fnorm = frobenius(a);
    if (fnorm == 0.0) return;
    const double tol = 1e-12 * fnorm;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_frobenius(a) < tol) return;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = a(p, i) = c * aip - s * aiq;
                    a(i, q) = a(q, i) = s * aip + c * aiq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }
    if (off_diagonal_frobenius(a) >= tol) throw EigenIterationError();
}

std::vector<double> column(const DenseMatrix& m, int j) {
    std::vector<double> c(m.rows);
    for (int i = 0; i < m.rows; ++i) c[i] = m(i, j);
    return c;
}

void normalize(std::vector<double>& v) {
    const double n = norm2(v);
    if (n > 0.0)
        for (double& x : v) x /= n;
}

}  // namespace

EigenExtremes sym_eig_extreme(const DenseMatrix& s) {
    if (s.rows != s.cols) throw std::invalid_argument("sym_eig_extreme: matrix not square");
    DenseMatrix a = s;
    DenseMatrix v;
    jacobi_eigen(a, v);
    int imin = 0;
    int imax = 0;
    for (int i = 1; i < a.rows; ++i) {
        if (a(i, i) < a(imin, imin)) imin = i;
        if (a(i, i) > a(imax, imax)) imax = i;
    }
    EigenExtremes out;
    out.min = a(imin, imin);
    out.max = a(imax, imax);
    out.min_vector = column(v, imin);
    normalize(out.min_vector);
    return out;
}

EigenExtremes generalized_eig_extreme(const DenseMatrix& s, const DenseMatrix& g) {
    if (s.rows != s.cols || g.rows != g.cols || s.rows != g.rows)
        throw std::invalid_argument("generalized_eig_extreme: dimension mismatch");
    const int n = s.rows;
    const DenseMatrix l = cholesky(g);

    // m = inv(L) s inv(L)^T, built by two rounds of triangular solves.
    DenseMatrix y(n, n);  // y = inv(L) s
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double acc = s(i, j);
            for (int k = 0; k < i; ++k) acc -= l(i, k) * y(k, j);
            y(i, j) = acc / l(i, i);
        }
    }
    DenseMatrix m(n, n);  // rows of m solve L m_row = y_row
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = y(i, j);
            for (int k = 0; k < j; ++k) acc -= l(j, k) * m(i, k);
            m(i, j) = acc / l(j, j);
        }
    }
    for (int i = 0; i < n; ++i)  // kill roundoff asymmetry before Jacobi
        for (int j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = m(j, i) = avg;
        }

    DenseMatrix v;
    jacobi_eigen(m, v);
    int imin = 0;
    int imax = 0;
    for (int i = 1; i < n; ++i) {
        if (m(i, i) < m(imin, imin)) imin = i;
        if (m(i, i) > m(imax, imax)) imax = i;
    }
    EigenExtremes out;
    out.min = m(imin, imin);
    out.max = m(imax, imax);

    // back-substitute v = inv(L)^T w to recover the pencil eigenvector
    std::vector<double> w = column(v, imin);
    for (int i = n - 1; i >= 0; --i) {
        double acc = w[i];
        for (int k = i + 1; k < n; ++k) acc -= l(k, i) * w[k];
        w[i] = acc / l(i, i);
    }
    normalize(w);
    out.min_vector = std::move(w);
    return out;
}

EigenPair generalized_min_eig(const DenseMatrix& s, const DenseMatrix& g) {
    EigenExtremes e = generalized_eig_extreme(s, g);
    return EigenPair{e.min, std::move(e.min_vector)};
}

}  // namespace iga
