#pragma once

#include <string_view>
#include <vector>

#include "iga/formulations.hpp"
#include "iga/linalg.hpp"
#include "iga/mesh.hpp"
#include "iga/problems.hpp"

namespace iga {

/// Which H1 norm the reports use. `full` is the default everywhere:
/// ||w||_H1^2 = ||w||_L2^2 + ||grad w||_L2^2; `seminorm` drops the L2 part.
/// The choice is recorded in every report so tables stay self-describing.
enum class H1Definition { full, seminorm };

std::string_view h1_definition_label(H1Definition d);  // "full" | "seminorm"
H1Definition parse_h1_definition(std::string_view name);

/// Relative errors in percent (100 * ||u_h - u|| / ||u||), quadrature with
/// degree+3 points per direction by default.
struct ErrorReport {
    double l2_rel_percent = 0.0;
    double h1_rel_percent = 0.0;
    H1Definition h1_definition = H1Definition::full;
    int dofs = 0;
    double epsilon = 0.0;
};

ErrorReport error_norms(const SolutionField& field, const ProblemSpec& spec,
                        H1Definition h1 = H1Definition::full, int quad_points = 0,
                        bool parallel = true);

/// Interior-DOF Gram matrices of the first-order operators appearing in the
/// stability analysis (beta enters only the advection kinds).
enum class GramKind {
    grad_grad,             // (grad u, grad v)
    advection_value,       // (beta.grad u, v)
    advection_advection,   // (beta.grad u, beta.grad v)
    laplace_laplace        // (lap u, lap v)
};

DenseMatrix interior_gram(const TensorMesh& mesh, GramKind kind, double beta_x = 0.0,
                          double beta_y = 0.0, int quad_points = 0);

/// Discrete sharpness check of ||lap v|| <= C/h ||grad v|| on the zero-trace
/// space: observed = h * sqrt(max eig of (lap,lap) v = lambda (grad,grad) v),
/// bound = 2*sqrt(3d)*(p-1)^2 with d = 2.
struct InverseInequality {
    double observed = 0.0;
    double bound = 0.0;
};

InverseInequality verify_inverse_inequality(const TensorMesh& mesh, int quad_points = 0);

/// Coercivity of the symmetric part of the GLS form against the mesh-scaled
/// scalar product (eps/h)(grad u, grad v) + (beta.grad u, beta.grad v).
/// Whenever eps <= h/(2 C^2) the ratio must stay >= 1/2.
struct StabilityReport {
    double c_inverse_observed = 0.0;
    double c_inverse_bound = 0.0;
    double epsilon_threshold = 0.0;  // h / (2 C^2)
    double coercivity_min_ratio = 0.0;
    bool condition_satisfied = false;
    double h = 0.0;
    double epsilon = 0.0;
};

StabilityReport verify_coercivity(const TensorMesh& mesh, const ProblemSpec& spec,
                                  int quad_points = 0);

/// Field/exact samples on an nx-by-ny uniform point grid (domain corners
/// included), laid out row-major in y then x.
struct SampleRow {
    double x, y, u_h, u_exact, abs_err;
};

std::vector<SampleRow> sample_field(const SolutionField& field, const ProblemSpec& spec,
                                    int nx, int ny);

}  // namespace iga
