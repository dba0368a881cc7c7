#include "iga/formulations.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "element_basis.hpp"
#include "iga/quadrature.hpp"

namespace iga {

Method parse_method(std::string_view name) {
    if (name == "galerkin") return Method::galerkin;
    if (name == "ls") return Method::least_squares;
    if (name == "gls") return Method::gls;
    if (name == "supg") return Method::supg;
    throw std::invalid_argument("unknown method '" + std::string(name) +
                                "' (expected galerkin, ls, gls, supg)");
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::galerkin: return "galerkin";
        case Method::least_squares: return "ls";
        case Method::gls: return "gls";
        case Method::supg: return "supg";
    }
    return "?";
}

double supg_tau(double beta_x, double beta_y, double epsilon, double hx, double hy) {
    if (!(hx > 0.0) || !(hy > 0.0)) throw std::domain_error("supg_tau: element sizes must be positive");
    const double inv = beta_x / hx + beta_y / hy + 3.0 * epsilon / (hx * hx + hy * hy);
    if (!(inv > 0.0)) throw std::domain_error("supg_tau: nonpositive stabilization denominator");
    return 1.0 / inv;
}

double supg_tau(const ProblemSpec& spec, double hx, double hy) {
    return supg_tau(spec.beta_x, spec.beta_y, spec.epsilon, hx, hy);
}

namespace {

void check_spec(const ProblemSpec& spec) {
    if (!(spec.epsilon > 0.0)) throw std::invalid_argument("problem spec: epsilon must be positive");
    if (!spec.source || !spec.boundary)
        throw std::invalid_argument("problem spec: source and boundary data required");
}

// 1D spline interpolation of `g` at the Greville abscissae (collocation).
std::vector<double> greville_interpolate(const KnotVector& kv, const std::function<double(double)>& g) {
    const int n = kv.num_basis();
    DenseMatrix c(n, n);
    std::vector<double> rhs(n);
    for (int k = 0; k < n; ++k) {
        const double gx = greville(kv, k);
        const BasisEval be = eval_basis(kv, gx);
        for (int j = 0; j < be.count; ++j) c(k, be.first_index + j) = be.value[j];
        rhs[k] = g(gx);
    }
    return lu_solve(std::move(c), std::move(rhs));
}

struct LocalSystem {
    int first_x = 0, first_y = 0;
    int nloc = 0;  // (p+1)^2
    std::vector<double> a;    // row = test, col = trial
    std::vector<double> rhs;
};

void element_system(const TensorMesh& mesh, const ProblemSpec& spec, Method method,
                    const AssemblyOptions& opts, const QuadRule1D& rule, int e,
                    detail::ElementBasis& t, LocalSystem& loc) {
    detail::tabulate(mesh, e, rule, t);
    const int p = mesh.degree();
    const int nb = p + 1;
    const int nloc = nb * nb;
    loc.first_x = t.first_x;
    loc.first_y = t.first_y;
    loc.nloc = nloc;
    loc.a.assign(static_cast<std::size_t>(nloc) * nloc, 0.0);
    loc.rhs.assign(nloc, 0.0);

    const Element& el = mesh.elements[e];
    const double eps = spec.epsilon;
    const double bx = spec.beta_x;
    const double by = spec.beta_y;
    const double inv_h = 1.0 / stabilization_length(el);
    double tau = 0.0;
    if (method == Method::supg) {
        tau = opts.tau_override ? *opts.tau_override
                                : supg_tau(spec, el.x1 - el.x0, el.y1 - el.y0);
    }
    const double supg_sign = (opts.supg_residual == SupgResidual::paper) ? 1.0 : -1.0;

    std::vector<double> val(nloc), ddx(nloc), ddy(nloc), lap(nloc), adv(nloc), strong(nloc);
    for (int qy = 0; qy < t.nq; ++qy) {
        for (int qx = 0; qx < t.nq; ++qx) {
            const BasisEval& fx = t.bx[qx];
            const BasisEval& fy = t.by[qy];
            for (int a = 0; a < nb; ++a) {
                for (int b = 0; b < nb; ++b) {
                    const int l = a * nb + b;
                    val[l] = fx.value[a] * fy.value[b];
                    ddx[l] = fx.d1[a] * fy.value[b];
                    ddy[l] = fx.value[a] * fy.d1[b];
                    lap[l] = fx.d2[a] * fy.value[b] + fx.value[a] * fy.d2[b];
                    adv[l] = bx * ddx[l] + by * ddy[l];
                    strong[l] = adv[l] - eps * lap[l];  // L = beta.grad - eps*lap
                }
            }
            const double w = t.wx[qx] * t.wy[qy];
            const double f = spec.source(t.xs[qx], t.ys[qy]);
            for (int i = 0; i < nloc; ++i) {    // test
                double integ_rhs = 0.0;
                switch (method) {
                    case Method::galerkin: integ_rhs = f * val[i]; break;
                    case Method::least_squares: integ_rhs = f * strong[i]; break;
                    case Method::gls: integ_rhs = f * (strong[i] + inv_h * val[i]); break;
                    case Method::supg: integ_rhs = f * (val[i] + tau * adv[i]); break;
                }
                loc.rhs[i] += w * integ_rhs;
                for (int j = 0; j < nloc; ++j) {  // trial
                    double integ = 0.0;
                    const double diff = ddx[j] * ddx[i] + ddy[j] * ddy[i];
                    switch (method) {
                        case Method::galerkin:
                            integ = eps * diff + adv[j] * val[i];
                            break;
                        case Method::least_squares:
                            integ = strong[j] * strong[i];
                            break;
                        case Method::gls:
                            integ = strong[j] * strong[i] +
                                    inv_h * (eps * diff + adv[j] * val[i]);
                            break;
                        case Method::supg: {
                            // residual sign follows opts.supg_residual
                            const double r_j = adv[j] + supg_sign * eps * lap[j];
                            integ = eps * diff + adv[j] * val[i] + tau * r_j * adv[i];
                            break;
                        }
                    }
                    loc.a[static_cast<std::size_t>(i) * nloc + j] += w * integ;
                }
            }
        }
    }
}

void scatter(const TensorMesh& mesh, const LocalSystem& loc, DenseMatrix& a,
             std::vector<double>& rhs) {
    const int p = mesh.degree();
    const int nb = p + 1;
    for (int ai = 0; ai < nb; ++ai) {
        for (int bi = 0; bi < nb; ++bi) {
            const int i = ai * nb + bi;
            const int gi = mesh.dof_index(loc.first_x + ai, loc.first_y + bi);
            rhs[gi] += loc.rhs[i];
            for (int aj = 0; aj < nb; ++aj) {
                for (int bj = 0; bj < nb; ++bj) {
                    const int j = aj * nb + bj;
                    const int gj = mesh.dof_index(loc.first_x + aj, loc.first_y + bj);
                    a(gi, gj) += loc.a[static_cast<std::size_t>(i) * loc.nloc + j];
                }
            }
        }
    }
}

}  // namespace

std::vector<double> dirichlet_lift(const TensorMesh& mesh, const ProblemSpec& spec) {
    check_spec(spec);
    std::vector<double> lift(mesh.num_dofs(), 0.0);
    const auto& g = spec.boundary;
    const double x0 = mesh.kx.domain_min();
    const double x1 = mesh.kx.domain_max();
    const double y0 = mesh.ky.domain_min();
    const double y1 = mesh.ky.domain_max();

    const auto bottom = greville_interpolate(mesh.kx, [&](double x) { return g(x, y0); });
    const auto top = greville_interpolate(mesh.kx, [&](double x) { return g(x, y1); });
    for (int ix = 0; ix < mesh.num_basis_x(); ++ix) {
        lift[mesh.dof_index(ix, 0)] = bottom[ix];
        lift[mesh.dof_index(ix, mesh.num_basis_y() - 1)] = top[ix];
    }
    const auto left = greville_interpolate(mesh.ky, [&](double y) { return g(x0, y); });
    const auto right = greville_interpolate(mesh.ky, [&](double y) { return g(x1, y); });
    for (int iy = 0; iy < mesh.num_basis_y(); ++iy) {
        lift[mesh.dof_index(0, iy)] = left[iy];
        lift[mesh.dof_index(mesh.num_basis_x() - 1, iy)] = right[iy];
    }
    return lift;
}

AssembledSystem assemble(Method method, const TensorMesh& mesh, const ProblemSpec& spec,
                         const AssemblyOptions& opts) {
    check_spec(spec);
    const int nq = opts.quad_points > 0 ? opts.quad_points : mesh.degree() + 2;
    const QuadRule1D rule = gauss_rule(nq);
    const int ndofs = mesh.num_dofs();
    const int nelem = mesh.num_elements();

    DenseMatrix full(ndofs, ndofs);
    std::vector<double> rhs_full(ndofs, 0.0);

    if (opts.parallel) {
        // two-phase: parallel local systems, then in-order accumulation,
        // bit-identical to the serial reference below
        std::vector<LocalSystem> locals(nelem);
#pragma omp parallel for schedule(static)
        for (int e = 0; e < nelem; ++e) {
            detail::ElementBasis scratch;
            element_system(mesh, spec, method, opts, rule, e, scratch, locals[e]);
        }
        for (int e = 0; e < nelem; ++e) scatter(mesh, locals[e], full, rhs_full);
    } else {
        detail::ElementBasis scratch;
        LocalSystem loc;
        for (int e = 0; e < nelem; ++e) {
            element_system(mesh, spec, method, opts, rule, e, scratch, loc);
            scatter(mesh, loc, full, rhs_full);
        }
    }

    AssembledSystem sys;
    sys.lift = dirichlet_lift(mesh, spec);
    sys.interior = interior_dofs(mesh);
    const int ni = static_cast<int>(sys.interior.size());
    sys.matrix = DenseMatrix(ni, ni);
    sys.rhs.assign(ni, 0.0);
    for (int r = 0; r < ni; ++r) {
        const int gr = sys.interior[r];
        double b = rhs_full[gr];
        for (int k = 0; k < ndofs; ++k)
            if (sys.lift[k] != 0.0) b -= full(gr, k) * sys.lift[k];
        sys.rhs[r] = b;
        for (int c = 0; c < ni; ++c) sys.matrix(r, c) = full(gr, sys.interior[c]);
    }
    return sys;
}

FieldValue eval_field(const SolutionField& field, double x, double y) {
    const TensorMesh& mesh = field.mesh;
    const BasisEval fx = eval_basis(mesh.kx, x);
    const BasisEval fy = eval_basis(mesh.ky, y);
    FieldValue out{0.0, 0.0, 0.0};
    for (int a = 0; a < fx.count; ++a) {
        for (int b = 0; b < fy.count; ++b) {
            const double c = field.coefficients[mesh.dof_index(fx.first_index + a,
                                                               fy.first_index + b)];
            out.value += c * fx.value[a] * fy.value[b];
            out.dx += c * fx.d1[a] * fy.value[b];
            out.dy += c * fx.value[a] * fy.d1[b];
        }
    }
    return out;
}

SolutionField solve(Method method, const TensorMesh& mesh, const ProblemSpec& spec,
                    const AssemblyOptions& opts) {
    AssembledSystem sys = assemble(method, mesh, spec, opts);
    const std::vector<double> x = lu_solve(sys.matrix, sys.rhs);

    double norm_b = 0.0, norm_x = 0.0, norm_a = 0.0, norm_r = 0.0;
    for (double v : sys.rhs) norm_b = std::max(norm_b, std::abs(v));
    for (double v : x) norm_x = std::max(norm_x, std::abs(v));
    for (int i = 0; i < sys.matrix.rows; ++i) {
        double row = 0.0, ax = 0.0;
        for (int j = 0; j < sys.matrix.cols; ++j) {
            row += std::abs(sys.matrix(i, j));
            ax += sys.matrix(i, j) * x[j];
        }
        norm_a = std::max(norm_a, row);
        norm_r = std::max(norm_r, std::abs(ax - sys.rhs[i]));
    }
    if (norm_r > 1e-10 * std::max(norm_b, norm_a * norm_x))
        throw SolverError("solve: residual " + std::to_string(norm_r) +
                          " exceeds the backward-stable bound");

    SolutionField field{mesh, sys.lift};
    for (std::size_t i = 0; i < sys.interior.size(); ++i)
        field.coefficients[sys.interior[i]] += x[i];
    return field;
}

}  // namespace iga
