#include "iga/analysis.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "element_basis.hpp"
#include "iga/quadrature.hpp"

namespace iga {

std::string_view h1_definition_label(H1Definition d) {
    return d == H1Definition::full ? "full" : "seminorm";
}

H1Definition parse_h1_definition(std::string_view name) {
    if (name == "full") return H1Definition::full;
    if (name == "seminorm") return H1Definition::seminorm;
    throw std::invalid_argument("unknown h1 definition '" + std::string(name) +
                                "' (expected full or seminorm)");
}

namespace {

// {l2 num, l2 den, grad num, grad den} contributions of one element
std::array<double, 4> element_error_terms(const TensorMesh& mesh, const SolutionField& field,
                                          const ProblemSpec& spec, const QuadRule1D& rule, int e,
                                          detail::ElementBasis& t) {
    detail::tabulate(mesh, e, rule, t);
    const int nb = mesh.degree() + 1;
    std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
    for (int qy = 0; qy < t.nq; ++qy) {
        for (int qx = 0; qx < t.nq; ++qx) {
            const BasisEval& fx = t.bx[qx];
            const BasisEval& fy = t.by[qy];
            double uh = 0.0, uhx = 0.0, uhy = 0.0;
            for (int a = 0; a < nb; ++a) {
                for (int b = 0; b < nb; ++b) {
                    const double c = field.coefficients[mesh.dof_index(t.first_x + a,
                                                                       t.first_y + b)];
                    uh += c * fx.value[a] * fy.value[b];
                    uhx += c * fx.d1[a] * fy.value[b];
                    uhy += c * fx.value[a] * fy.d1[b];
                }
            }
            const ExactValue ex = spec.exact(t.xs[qx], t.ys[qy]);
            const double w = t.wx[qx] * t.wy[qy];
            acc[0] += w * (uh - ex.u) * (uh - ex.u);
            acc[1] += w * ex.u * ex.u;
            acc[2] += w * ((uhx - ex.ux) * (uhx - ex.ux) + (uhy - ex.uy) * (uhy - ex.uy));
            acc[3] += w * (ex.ux * ex.ux + ex.uy * ex.uy);
        }
    }
    return acc;
}

}  // namespace

ErrorReport error_norms(const SolutionField& field, const ProblemSpec& spec, H1Definition h1,
                        int quad_points, bool parallel) {
    if (!spec.exact) throw std::logic_error("error_norms: problem has no exact solution");
    const TensorMesh& mesh = field.mesh;
    const int nq = quad_points > 0 ? quad_points : mesh.degree() + 3;
    const QuadRule1D rule = gauss_rule(nq);
    const int nelem = mesh.num_elements();

    std::vector<std::array<double, 4>> partial(nelem);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int e = 0; e < nelem; ++e) {
            detail::ElementBasis scratch;
            partial[e] = element_error_terms(mesh, field, spec, rule, e, scratch);
        }
    } else {
        detail::ElementBasis scratch;
        for (int e = 0; e < nelem; ++e)
            partial[e] = element_error_terms(mesh, field, spec, rule, e, scratch);
    }
    std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
    for (int e = 0; e < nelem; ++e)  // fixed order, independent of thread count
        for (int k = 0; k < 4; ++k) acc[k] += partial[e][k];

    const double l2_den = acc[1];
    const double h1_den = (h1 == H1Definition::full) ? acc[1] + acc[3] : acc[3];
    if (!(l2_den > 0.0) || !(h1_den > 0.0))
        throw std::domain_error("error_norms: exact solution has zero norm");

    ErrorReport rep;
    rep.l2_rel_percent = 100.0 * std::sqrt(acc[0] / l2_den);
    rep.h1_rel_percent = (h1 == H1Definition::full)
                             ? 100.0 * std::sqrt((acc[0] + acc[2]) / h1_den)
                             : 100.0 * std::sqrt(acc[2] / h1_den);
    rep.h1_definition = h1;
    rep.dofs = mesh.num_dofs();
    rep.epsilon = spec.epsilon;
    if (!std::isfinite(rep.l2_rel_percent) || !std::isfinite(rep.h1_rel_percent))
        throw std::domain_error("error_norms: nonfinite error value");
    return rep;
}

DenseMatrix interior_gram(const TensorMesh& mesh, GramKind kind, double beta_x, double beta_y,
                          int quad_points) {
    const int nq = quad_points > 0 ? quad_points : mesh.degree() + 2;
    const QuadRule1D rule = gauss_rule(nq);
    const int nb = mesh.degree() + 1;
    const int ndofs = mesh.num_dofs();
    DenseMatrix full(ndofs, ndofs);

    detail::ElementBasis t;
    const int nloc = nb * nb;
    std::vector<double> q(nloc);  // per-point operator value of each local function
    for (int e = 0; e < mesh.num_elements(); ++e) {
        detail::tabulate(mesh, e, rule, t);
        for (int qy = 0; qy < t.nq; ++qy) {
            for (int qx = 0; qx < t.nq; ++qx) {
                const BasisEval& fx = t.bx[qx];
                const BasisEval& fy = t.by[qy];
                const double w = t.wx[qx] * t.wy[qy];
                for (int a = 0; a < nb; ++a) {
                    for (int b = 0; b < nb; ++b) {
                        const int l = a * nb + b;
                        switch (kind) {
                            case GramKind::grad_grad:
                            case GramKind::advection_value:
                                q[l] = 0.0;  // handled pairwise below
                                break;
                            case GramKind::advection_advection:
                                q[l] = beta_x * fx.d1[a] * fy.value[b] +
                                       beta_y * fx.value[a] * fy.d1[b];
                                break;
                            case GramKind::laplace_laplace:
                                q[l] = fx.d2[a] * fy.value[b] + fx.value[a] * fy.d2[b];
                                break;
                        }
                    }
                }
                for (int ai = 0; ai < nb; ++ai) {
                    for (int bi = 0; bi < nb; ++bi) {
                        const int i = ai * nb + bi;
                        const int gi = mesh.dof_index(t.first_x + ai, t.first_y + bi);
                        for (int aj = 0; aj < nb; ++aj) {
                            for (int bj = 0; bj < nb; ++bj) {
                                const int j = aj * nb + bj;
                                double integ;
                                switch (kind) {
                                    case GramKind::grad_grad:
                                        integ = fx.d1[aj] * fy.value[bj] * fx.d1[ai] * fy.value[bi] +
                                                fx.value[aj] * fy.d1[bj] * fx.value[ai] * fy.d1[bi];
                                        break;
                                    case GramKind::advection_value:
                                        integ = (beta_x * fx.d1[aj] * fy.value[bj] +
                                                 beta_y * fx.value[aj] * fy.d1[bj]) *
                                                fx.value[ai] * fy.value[bi];
                                        break;
                                    default:
                                        integ = q[j] * q[i];
                                        break;
                                }
                                full(gi, mesh.dof_index(t.first_x + aj, t.first_y + bj)) +=
                                    w * integ;
                            }
                        }
                    }
                }
            }
        }
    }

    const auto interior = interior_dofs(mesh);
    const int ni = static_cast<int>(interior.size());
    DenseMatrix m(ni, ni);
    for (int r = 0; r < ni; ++r)
        for (int c = 0; c < ni; ++c) m(r, c) = full(interior[r], interior[c]);
    return m;
}

namespace {

double max_stabilization_length(const TensorMesh& mesh) {
    double h = 0.0;
    for (const Element& el : mesh.elements) h = std::max(h, stabilization_length(el));
    return h;
}

double inverse_constant_bound(int degree) {
    const double d = 2.0;
    const double pm1 = degree - 1;
    return 2.0 * std::sqrt(3.0 * d) * pm1 * pm1;
}

}  // namespace

InverseInequality verify_inverse_inequality(const TensorMesh& mesh, int quad_points) {
    const DenseMatrix s = interior_gram(mesh, GramKind::laplace_laplace, 0.0, 0.0, quad_points);
    const DenseMatrix k = interior_gram(mesh, GramKind::grad_grad, 0.0, 0.0, quad_points);
    const EigenExtremes ext = generalized_eig_extreme(s, k);
    InverseInequality out;
    out.observed = max_stabilization_length(mesh) * std::sqrt(std::max(0.0, ext.max));
    out.bound = inverse_constant_bound(mesh.degree());
    return out;
}

StabilityReport verify_coercivity(const TensorMesh& mesh, const ProblemSpec& spec,
                                  int quad_points) {
    AssemblyOptions opts;
    opts.quad_points = quad_points;
    const AssembledSystem sys = assemble(Method::gls, mesh, spec, opts);
    const int n = sys.matrix.rows;
    DenseMatrix sym(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (sys.matrix(i, j) + sys.matrix(j, i));

    const double h = max_stabilization_length(mesh);
    const DenseMatrix k = interior_gram(mesh, GramKind::grad_grad, 0.0, 0.0, quad_points);
    const DenseMatrix d = interior_gram(mesh, GramKind::advection_advection, spec.beta_x,
                                        spec.beta_y, quad_points);
    DenseMatrix g(n, n);
    const double scale = spec.epsilon / h;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = scale * k(i, j) + d(i, j);

    StabilityReport rep;
    const InverseInequality inv = verify_inverse_inequality(mesh, quad_points);
    rep.c_inverse_observed = inv.observed;
    rep.c_inverse_bound = inv.bound;
    rep.h = h;
    rep.epsilon = spec.epsilon;
    rep.epsilon_threshold = h / (2.0 * inv.bound * inv.bound);
    rep.condition_satisfied = spec.epsilon <= rep.epsilon_threshold;
    rep.coercivity_min_ratio = generalized_min_eig(sym, g).value;
    return rep;
}

std::vector<SampleRow> sample_field(const SolutionField& field, const ProblemSpec& spec,
                                    int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("sample_field: grid needs nx, ny >= 2");
    if (!spec.exact) throw std::logic_error("sample_field: problem has no exact solution");
    const double x0 = field.mesh.kx.domain_min();
    const double x1 = field.mesh.kx.domain_max();
    const double y0 = field.mesh.ky.domain_min();
    const double y1 = field.mesh.ky.domain_max();
    std::vector<SampleRow> rows;
    rows.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        const double y = y0 + (y1 - y0) * static_cast<double>(j) / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = x0 + (x1 - x0) * static_cast<double>(i) / (nx - 1);
            const double uh = eval_field(field, x, y).value;
            const double ue = spec.exact(x, y).u;
            rows.push_back(SampleRow{x, y, uh, ue, std::abs(uh - ue)});
        }
    }
    return rows;
}

}  // namespace iga
