#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "iga/linalg.hpp"
#include "iga/mesh.hpp"
#include "iga/problems.hpp"

namespace iga {

enum class Method { galerkin, least_squares, gls, supg };

/// Sign convention of the strong residual inside the SUPG stabilization
/// term: `paper` uses beta.grad(u) + eps*lap(u), `consistent` the operator
/// beta.grad(u) - eps*lap(u) shared with the least-squares forms.
enum class SupgResidual { paper, consistent };

Method parse_method(std::string_view name);  // galerkin | ls | gls | supg
std::string_view method_name(Method m);

struct AssemblyOptions {
    int quad_points = 0;  // per direction; 0 means degree+2
    SupgResidual supg_residual = SupgResidual::paper;
    std::optional<double> tau_override;  // diagnostic hook, bypasses the tau formula
    bool parallel = true;  // OpenMP element loop; false runs the serial reference
};

/// Streamline stabilization parameter
///   tau = 1 / (beta_x/hx + beta_y/hy + 3*eps/(hx^2 + hy^2)).
double supg_tau(double beta_x, double beta_y, double epsilon, double hx, double hy);
double supg_tau(const ProblemSpec& spec, double hx, double hy);

/// Boundary lift: coefficients of the boundary DOFs interpolating g at the
/// Greville abscissae of each edge's 1D basis (corners are consistent for
/// continuous g); interior coefficients are zero.
std::vector<double> dirichlet_lift(const TensorMesh& mesh, const ProblemSpec& spec);

/// Linear system over the interior (zero-trace) DOFs, with the boundary
/// lift already folded into the right-hand side.
struct AssembledSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
    std::vector<int> interior;  // row/column -> global DOF
    std::vector<double> lift;   // global-sized boundary coefficients
};

AssembledSystem assemble(Method method, const TensorMesh& mesh, const ProblemSpec& spec,
                         const AssemblyOptions& opts = {});

struct SolutionField {
    TensorMesh mesh;
    std::vector<double> coefficients;  // all DOFs, boundary included
};

struct FieldValue {
    double value, dx, dy;
};

/// Spline evaluation of the discrete field (value and gradient).
FieldValue eval_field(const SolutionField& field, double x, double y);

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Assembles, solves by dense LU, and verifies the residual against a
/// backward-stable bound (SolverError otherwise).
SolutionField solve(Method method, const TensorMesh& mesh, const ProblemSpec& spec,
                    const AssemblyOptions& opts = {});

}  // namespace iga
