#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "iga/formulations.hpp"
#include "iga/analysis.hpp"
#include "iga/quadrature.hpp"

using namespace iga;

namespace {

constexpr double kPi = std::numbers::pi;

// Tensor-product value and derivatives of global basis function `dof`,
// evaluated from scratch (independent of the assembly kernels).
struct Basis2D {
    double v, dx, dy, dxx, dyy;
};

Basis2D tensor_basis(const TensorMesh& mesh, int dof, double x, double y) {
    const int nby = mesh.num_basis_y();
    const int ix = dof / nby;
    const int iy = dof % nby;
    const BasisEval ex = eval_basis(mesh.kx, x);
    const BasisEval ey = eval_basis(mesh.ky, y);
    const int jx = ix - ex.first_index;
    const int jy = iy - ey.first_index;
    Basis2D out{0.0, 0.0, 0.0, 0.0, 0.0};
    if (jx < 0 || jx >= ex.count || jy < 0 || jy >= ey.count) return out;
    out.v = ex.value[jx] * ey.value[jy];
    out.dx = ex.d1[jx] * ey.value[jy];
    out.dy = ex.value[jx] * ey.d1[jy];
    out.dxx = ex.d2[jx] * ey.value[jy];
    out.dyy = ex.value[jx] * ey.d2[jy];
    return out;
}

double strong_op(const ProblemSpec& spec, const Basis2D& b) {
    return spec.beta_x * b.dx + spec.beta_y * b.dy - spec.epsilon * (b.dxx + b.dyy);
}

// Smooth verification problem with a known polynomial-plus-sine solution,
// used where boundary layers would only obscure what is being tested.
ProblemSpec smooth_spec() {
    ProblemSpec spec;
    spec.name = "smooth";
    spec.epsilon = 1.0;
    spec.beta_x = 1.0;
    spec.beta_y = 1.0;
    auto exact = [](double x, double y) {
        ExactValue v;
        const double sx = std::sin(kPi * x), cx = std::cos(kPi * x);
        const double sy = std::sin(kPi * y), cy = std::cos(kPi * y);
        v.u = x * y + sx * sy;
        v.ux = y + kPi * cx * sy;
        v.uy = x + kPi * sx * cy;
        v.uxx = -kPi * kPi * sx * sy;
        v.uyy = -kPi * kPi * sx * sy;
        return v;
    };
    spec.exact = exact;
    spec.source = [exact](double x, double y) {
        const ExactValue v = exact(x, y);
        return v.ux + v.uy - (v.uxx + v.uyy);
    };
    spec.boundary = [exact](double x, double y) { return exact(x, y).u; };
    return spec;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k)
        m = std::max(m, std::abs(a.data[k] - b.data[k]));
    return m;
}

}  // namespace

TEST_CASE("method names round-trip") {
    CHECK(parse_method("galerkin") == Method::galerkin);
    CHECK(parse_method("ls") == Method::least_squares);
    CHECK(parse_method("gls") == Method::gls);
    CHECK(parse_method("supg") == Method::supg);
    CHECK(method_name(Method::least_squares) == "ls");
    CHECK(method_name(Method::gls) == "gls");
    CHECK_THROWS_AS(parse_method("petrov"), std::invalid_argument);
}

TEST_CASE("streamline parameter formula") {
    // 1/tau = bx/hx + by/hy + 3 eps/(hx^2+hy^2), frozen hand values.
    CHECK(supg_tau(1.0, 0.0, 0.1, 0.1, 0.1) == doctest::Approx(0.04).epsilon(1e-15));
    CHECK(supg_tau(1.0, 0.0, 1e-4, 0.1, 0.1) ==
          doctest::Approx(0.099850224663005492).epsilon(1e-15));
    // Advection-dominated limit: tau -> h/2 on squares with beta = (1,1).
    CHECK(supg_tau(1.0, 1.0, 1e-300, 0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-12));

    const ProblemSpec ej = problem_ej(1e-4);
    CHECK(supg_tau(ej, 0.1, 0.1) ==
          doctest::Approx(supg_tau(1.0, 0.0, 1e-4, 0.1, 0.1)).epsilon(1e-15));

    CHECK_THROWS_AS(supg_tau(1.0, 0.0, 0.1, 0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(supg_tau(-1.0, 0.0, 1e-300, 0.1, 0.1), std::domain_error);
}

TEST_CASE("assembly rejects malformed problem specs") {
    const TensorMesh mesh = uniform_mesh(4, 4, 2);
    ProblemSpec bad;
    bad.epsilon = 0.1;
    CHECK_THROWS_AS(assemble(Method::galerkin, mesh, bad), std::invalid_argument);
    bad.source = [](double, double) { return 0.0; };
    bad.boundary = [](double, double) { return 0.0; };
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(assemble(Method::galerkin, mesh, bad), std::invalid_argument);
}

TEST_CASE("boundary lift interpolates the inflow profile and vanishes inside") {
    const TensorMesh mesh = uniform_mesh(10, 4, 2);
    const ProblemSpec ej = problem_ej(0.01);
    const std::vector<double> lift = dirichlet_lift(mesh, ej);
    REQUIRE(static_cast<int>(lift.size()) == mesh.num_dofs());

    for (int d : interior_dofs(mesh)) CHECK(lift[d] == 0.0);

    const SolutionField field{mesh, lift};
    // Along x = 0 only the first x-basis function is active, so the lift
    // trace is the 1D Greville interpolant of sin(pi y): exact at the
    // Greville abscissae, close everywhere.
    for (int iy = 0; iy < mesh.num_basis_y(); ++iy) {
        const double gy = greville(mesh.ky, iy);
        CHECK(eval_field(field, 0.0, gy).value ==
              doctest::Approx(std::sin(kPi * gy)).epsilon(1e-10));
    }
    CHECK(eval_field(field, 0.0, 0.5).value == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(eval_field(field, 0.0, 0.0).value) <= 1e-14);
    // Away from the boundary strips every active basis function is interior.
    CHECK(std::abs(eval_field(field, 0.3, 0.5).value) <= 1e-14);

    // Zero boundary data gives the zero lift.
    const std::vector<double> zero = dirichlet_lift(mesh, problem_one(0.1));
    for (double c : zero) CHECK(c == 0.0);
}

TEST_CASE("field evaluation reproduces constants and linears exactly") {
    for (const TensorMesh& mesh :
         {uniform_mesh(5, 3, 2), refined_mesh_ej(), uniform_mesh(4, 4, 3)}) {
        std::vector<double> ones(mesh.num_dofs(), 1.0);
        std::vector<double> linear(mesh.num_dofs());
        for (int ix = 0; ix < mesh.num_basis_x(); ++ix)
            for (int iy = 0; iy < mesh.num_basis_y(); ++iy)
                linear[mesh.dof_index(ix, iy)] = greville(mesh.kx, ix);

        const SolutionField one_field{mesh, ones};
        const SolutionField x_field{mesh, linear};
        for (double x : {0.0, 0.31, 0.77, 1.0})
            for (double y : {0.0, 0.5, 0.99}) {
                const FieldValue c = eval_field(one_field, x, y);
                CHECK(c.value == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(std::abs(c.dx) <= 1e-9);
                CHECK(std::abs(c.dy) <= 1e-9);
                const FieldValue l = eval_field(x_field, x, y);
                CHECK(l.value == doctest::Approx(x).epsilon(1e-12));
                CHECK(l.dx == doctest::Approx(1.0).epsilon(1e-9));
                CHECK(std::abs(l.dy) <= 1e-9);
            }
    }
}

TEST_CASE("galerkin matrix is quadrature-exact at the default rule") {
    // Constant-coefficient integrands are polynomials, so raising the rule
    // beyond the default must not change the matrix beyond roundoff.
    const TensorMesh mesh = uniform_mesh(6, 6, 2);
    const ProblemSpec ej = problem_ej(0.01);
    AssemblyOptions low, high;
    low.quad_points = 3;
    high.quad_points = 7;
    const AssembledSystem a = assemble(Method::galerkin, mesh, ej, low);
    const AssembledSystem b = assemble(Method::galerkin, mesh, ej, high);
    CHECK(max_abs_diff(a.matrix, b.matrix) <= 1e-12 * max_abs(a.matrix));
}

TEST_CASE("least-squares matrix is symmetric positive definite") {
    const TensorMesh mesh = uniform_mesh(6, 6, 2);
    const ProblemSpec ej = problem_ej(0.01);
    const AssembledSystem sys = assemble(Method::least_squares, mesh, ej);
    const int n = sys.matrix.rows;
    REQUIRE(n == static_cast<int>(sys.interior.size()));

    double asym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            asym = std::max(asym, std::abs(sys.matrix(i, j) - sys.matrix(j, i)));
    CHECK(asym <= 1e-12 * max_abs(sys.matrix));

    const auto ext = sym_eig_extreme(sys.matrix);
    CHECK(ext.min >= -1e-10 * ext.max);
    CHECK(ext.min > 0.0);  // Gram matrix of linearly independent residuals
}

TEST_CASE("least-squares entries match a direct quadrature oracle") {
    const TensorMesh mesh = uniform_mesh(4, 4, 2);
    const ProblemSpec spec = problem_one(0.05);
    const AssembledSystem sys = assemble(Method::least_squares, mesh, spec);
    const QuadRule1D rule = gauss_rule(mesh.degree() + 2);  // assembly default

    const int n = sys.matrix.rows;
    const int probes[][2] = {{0, 0}, {0, 1}, {3, 7}, {5, 5}, {n - 1, n - 1}, {2, n - 1}};
    for (const auto& pr : probes) {
        const int gi = sys.interior[pr[0]];
        const int gj = sys.interior[pr[1]];
        double acc = 0.0;
        for (int e = 0; e < mesh.num_elements(); ++e) {
            for (const QuadPoint& q : element_quadrature(mesh, e, rule)) {
                const Basis2D bi = tensor_basis(mesh, gi, q.x, q.y);
                const Basis2D bj = tensor_basis(mesh, gj, q.x, q.y);
                acc += q.w * strong_op(spec, bi) * strong_op(spec, bj);
            }
        }
        CHECK(sys.matrix(pr[0], pr[1]) ==
              doctest::Approx(acc).epsilon(1e-11).scale(max_abs(sys.matrix)));
    }

    // Zero boundary data, so the rhs is exactly (f, L v) at the same rule.
    for (int r : {0, 4, n - 1}) {
        const int gi = sys.interior[r];
        double acc = 0.0;
        for (int e = 0; e < mesh.num_elements(); ++e)
            for (const QuadPoint& q : element_quadrature(mesh, e, rule))
                acc += q.w * spec.source(q.x, q.y) * strong_op(spec, tensor_basis(mesh, gi, q.x, q.y));
        CHECK(sys.rhs[r] == doctest::Approx(acc).epsilon(1e-11));
    }
}

TEST_CASE("supg with zero tau reduces to galerkin") {
    const TensorMesh mesh = uniform_mesh(8, 8, 2);
    const ProblemSpec spec = problem_one(0.01);
    AssemblyOptions off;
    off.tau_override = 0.0;
    const AssembledSystem supg = assemble(Method::supg, mesh, spec, off);
    const AssembledSystem gal = assemble(Method::galerkin, mesh, spec);
    CHECK(max_abs_diff(supg.matrix, gal.matrix) <= 1e-13 * max_abs(gal.matrix));
    for (std::size_t i = 0; i < gal.rhs.size(); ++i)
        CHECK(supg.rhs[i] == doctest::Approx(gal.rhs[i]).epsilon(1e-13));
}

TEST_CASE("supg residual sign convention changes the operator") {
    const TensorMesh mesh = uniform_mesh(6, 6, 2);
    const ProblemSpec spec = problem_ej(0.01);
    AssemblyOptions paper, consistent;
    paper.supg_residual = SupgResidual::paper;
    consistent.supg_residual = SupgResidual::consistent;
    const AssembledSystem a = assemble(Method::supg, mesh, spec, paper);
    const AssembledSystem b = assemble(Method::supg, mesh, spec, consistent);
    CHECK(max_abs_diff(a.matrix, b.matrix) > 1e-10 * max_abs(a.matrix));
}

TEST_CASE("gls decomposes into mesh-weighted galerkin plus least squares") {
    // The stabilization weight is the reciprocal of the shortest element
    // side; on both meshes below that side is 0.1.
    for (const char* spec_str : {"uniform:10", "uniform:10x4"}) {
        const TensorMesh mesh = parse_mesh(spec_str);
        const ProblemSpec ej = problem_ej(0.001);
        const AssembledSystem gls = assemble(Method::gls, mesh, ej);
        const AssembledSystem gal = assemble(Method::galerkin, mesh, ej);
        const AssembledSystem ls = assemble(Method::least_squares, mesh, ej);
        const double inv_h = 10.0;
        double err = 0.0;
        for (std::size_t k = 0; k < gls.matrix.data.size(); ++k)
            err = std::max(err, std::abs(gls.matrix.data[k] -
                                         (inv_h * gal.matrix.data[k] + ls.matrix.data[k])));
        CHECK(err <= 1e-12 * max_abs(gls.matrix));

        for (std::size_t i = 0; i < gls.rhs.size(); ++i) {
            const double combo = inv_h * gal.rhs[i] + ls.rhs[i];
            CHECK(std::abs(gls.rhs[i] - combo) <=
                  1e-12 * std::max(1.0, std::abs(combo)));
        }
    }
}

TEST_CASE("all methods converge on a smooth problem") {
    // Expected orders in the element size differ by construction: the
    // plain weak form and the consistent-residual streamline variant are
    // third-order in L2 for quadratics, while the residual-minimizing
    // variants trade L2 order for graph-norm control (about second order).
    struct Expect {
        Method method;
        SupgResidual residual;
        double e16_max;
        double ratio_min;
    };
    const Expect cases[] = {
        {Method::galerkin, SupgResidual::paper, 0.01, 6.0},
        {Method::supg, SupgResidual::consistent, 0.01, 6.0},
        {Method::supg, SupgResidual::paper, 1.0, 3.0},
        {Method::least_squares, SupgResidual::paper, 0.2, 3.5},
        {Method::gls, SupgResidual::paper, 0.15, 4.0},
    };
    const ProblemSpec spec = smooth_spec();
    for (const Expect& c : cases) {
        AssemblyOptions opts;
        opts.supg_residual = c.residual;
        const SolutionField coarse = solve(c.method, uniform_mesh(8, 8, 2), spec, opts);
        const SolutionField fine = solve(c.method, uniform_mesh(16, 16, 2), spec, opts);
        const double e8 = error_norms(coarse, spec).l2_rel_percent;
        const double e16 = error_norms(fine, spec).l2_rel_percent;
        CAPTURE(method_name(c.method));
        CHECK(e16 < c.e16_max);
        CHECK(e8 / e16 > c.ratio_min);
    }

    // Gradient accuracy is second order for the plain weak form.
    const SolutionField g8 = solve(Method::galerkin, uniform_mesh(8, 8, 2), spec);
    const SolutionField g16 = solve(Method::galerkin, uniform_mesh(16, 16, 2), spec);
    const double h8 = error_norms(g8, spec).h1_rel_percent;
    const double h16 = error_norms(g16, spec).h1_rel_percent;
    CHECK(h16 < 0.3);
    CHECK(h8 / h16 > 3.5);
}

TEST_CASE("solve leaves a backward-stable residual") {
    const TensorMesh mesh = uniform_mesh(10, 10, 2);
    const ProblemSpec ej = problem_ej(0.001);
    for (Method m : {Method::galerkin, Method::gls}) {
        const AssembledSystem sys = assemble(m, mesh, ej);
        const SolutionField field = solve(m, mesh, ej);
        const int n = sys.matrix.rows;
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = field.coefficients[sys.interior[i]];
        const auto ax = matvec(sys.matrix, x);
        double r = 0.0, bnorm = 0.0;
        for (int i = 0; i < n; ++i) {
            r += (ax[i] - sys.rhs[i]) * (ax[i] - sys.rhs[i]);
            bnorm += sys.rhs[i] * sys.rhs[i];
        }
        CHECK(std::sqrt(r) <= 1e-10 * std::sqrt(bnorm));
        // Boundary coefficients carry the lift.
        for (int d = 0; d < mesh.num_dofs(); ++d)
            if (std::find(sys.interior.begin(), sys.interior.end(), d) == sys.interior.end())
                CHECK(field.coefficients[d] == sys.lift[d]);
    }
}
