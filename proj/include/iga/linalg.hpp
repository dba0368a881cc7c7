#pragma once

#include <stdexcept>
#include <vector>

namespace iga {

/// Dense row-major matrix. Systems in this project stay below ~800 unknowns,
/// so everything downstream uses direct O(n^3) kernels; they are deterministic
/// and need no external dependencies.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    static DenseMatrix identity(int n);
};

struct SingularMatrixError : std::runtime_error {
    int column;
    explicit SingularMatrixError(int col);
};

struct NotSpdError : std::runtime_error {
    int index;
    explicit NotSpdError(int idx);
};

struct EigenIterationError : std::runtime_error {
    EigenIterationError();
};

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x);
double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);
double max_abs(const DenseMatrix& a);

/// Solves a x = b by LU with partial pivoting. Throws SingularMatrixError
/// (with the offending column) if a zero pivot survives pivoting.
std::vector<double> lu_solve(DenseMatrix a, std::vector<double> b);

/// Lower Cholesky factor of an SPD matrix. The input must be symmetric to
/// 1e-12 (relative to its largest entry); a non-positive pivot throws
/// NotSpdError with the failing diagonal index.
DenseMatrix cholesky(const DenseMatrix& g);

struct EigenExtremes {
    double min = 0.0;
    double max = 0.0;
    std::vector<double> min_vector;  // unit 2-norm eigenvector of `min`
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

/// Extreme eigenvalues of a symmetric matrix via cyclic Jacobi rotations.
/// Converged when the off-diagonal Frobenius norm drops below 1e-12 of the
/// full Frobenius norm; more than 100 sweeps throws EigenIterationError.
EigenExtremes sym_eig_extreme(const DenseMatrix& s);

/// Extreme eigenvalues of the pencil s v = lambda g v with g SPD, reduced to
/// standard form through the Cholesky factor of g.
EigenExtremes generalized_eig_extreme(const DenseMatrix& s, const DenseMatrix& g);

/// Smallest eigenpair of s v = lambda g v (the coercivity-ratio workhorse).
EigenPair generalized_min_eig(const DenseMatrix& s, const DenseMatrix& g);

}  // namespace iga
