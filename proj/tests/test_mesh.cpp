#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "iga/mesh.hpp"
#include "iga/quadrature.hpp"

using namespace iga;

TEST_CASE("uniform mesh sizes, ordering, and element geometry") {
    const TensorMesh mesh = uniform_mesh(10, 10, 2);
    CHECK(mesh.num_elem_x == 10);
    CHECK(mesh.num_elem_y == 10);
    CHECK(mesh.num_elements() == 100);
    CHECK(mesh.num_basis_x() == 12);
    CHECK(mesh.num_basis_y() == 12);
    CHECK(mesh.num_dofs() == 144);
    CHECK(mesh.degree() == 2);

    // Elements are stored x-fastest.
    CHECK(mesh.elements[0].x0 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mesh.elements[1].x0 == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(mesh.elements[1].y0 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mesh.elements[10].x0 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mesh.elements[10].y0 == doctest::Approx(0.1).epsilon(1e-13));

    const double diag = std::sqrt(0.02);
    for (const Element& el : mesh.elements) {
        CHECK(el.diameter == doctest::Approx(diag).epsilon(1e-15));
        CHECK(stabilization_length(el) == doctest::Approx(0.1).epsilon(1e-13));
        CHECK(el.x1 > el.x0);
        CHECK(el.y1 > el.y0);
    }

    // Tensor DOF numbering: (ix, iy) -> ix * nby + iy.
    CHECK(mesh.dof_index(0, 0) == 0);
    CHECK(mesh.dof_index(1, 0) == 12);
    CHECK(mesh.dof_index(11, 11) == 143);
}

TEST_CASE("anisotropic mesh takes the shorter side as stabilization length") {
    const TensorMesh mesh = uniform_mesh(10, 4, 2);
    CHECK(mesh.num_elements() == 40);
    CHECK(mesh.num_dofs() == 12 * 6);
    for (const Element& el : mesh.elements) {
        CHECK(el.x1 - el.x0 == doctest::Approx(0.1).epsilon(1e-13));
        CHECK(el.y1 - el.y0 == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(stabilization_length(el) == doctest::Approx(0.1).epsilon(1e-13));
        CHECK(el.diameter == doctest::Approx(std::hypot(0.1, 0.25)).epsilon(1e-15));
    }
}

TEST_CASE("boundary-layer meshes") {
    const TensorMesh p1 = refined_mesh_p1();
    CHECK(p1.num_elem_x == 26);
    CHECK(p1.num_elem_y == 26);
    CHECK(p1.num_elements() == 676);
    CHECK(p1.num_basis_x() == 28);
    CHECK(p1.num_dofs() == 784);

    // Grading halves the distance to 1; the last span is ~3e-8 wide.
    const Element& first = p1.elements[0];
    CHECK(first.x0 == 0.0);
    CHECK(first.x1 == doctest::Approx(0.5).epsilon(1e-15));
    const Element& last = p1.elements[p1.num_elements() - 1];
    CHECK(last.x1 == 1.0);
    CHECK(last.x1 - last.x0 == doctest::Approx(2.98e-8).epsilon(1e-6));
    CHECK(stabilization_length(last) == doctest::Approx(2.98e-8).epsilon(1e-6));

    const TensorMesh ej = refined_mesh_ej();
    CHECK(ej.num_elem_x == 26);
    CHECK(ej.num_elem_y == 4);
    CHECK(ej.num_basis_y() == 6);
    CHECK(ej.num_dofs() == 28 * 6);
    // y stays uniform, so the short side near x = 1 is the graded span.
    CHECK(ej.elements[0].y1 - ej.elements[0].y0 == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("mesh spec parsing") {
    CHECK(parse_mesh("uniform:10").num_elements() == 100);
    const TensorMesh rect = parse_mesh("uniform:10x4");
    CHECK(rect.num_elem_x == 10);
    CHECK(rect.num_elem_y == 4);
    CHECK(parse_mesh("refined-p1").num_elements() == 676);
    CHECK(parse_mesh("refined-ej").num_elements() == 26 * 4);
    CHECK(parse_mesh("uniform:3", 3).degree() == 3);

    CHECK_THROWS_AS(parse_mesh("uniform:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mesh("uniform:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mesh("uniform:4x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mesh("uniform:-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mesh("junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mesh("refined-p1x"), std::invalid_argument);
}

TEST_CASE("boundary mask marks exactly the edge tensor indices") {
    const TensorMesh mesh = uniform_mesh(6, 4, 2);
    const auto mask = boundary_dof_mask(mesh);
    REQUIRE(static_cast<int>(mask.size()) == mesh.num_dofs());
    const int nbx = mesh.num_basis_x(), nby = mesh.num_basis_y();
    int count = 0;
    for (int ix = 0; ix < nbx; ++ix)
        for (int iy = 0; iy < nby; ++iy) {
            const bool edge = ix == 0 || ix == nbx - 1 || iy == 0 || iy == nby - 1;
            CHECK(static_cast<bool>(mask[mesh.dof_index(ix, iy)]) == edge);
            count += edge ? 1 : 0;
        }
    CHECK(count == 2 * (nbx + nby) - 4);

    const auto interior = interior_dofs(mesh);
    CHECK(static_cast<int>(interior.size()) == mesh.num_dofs() - count);
    for (std::size_t k = 1; k < interior.size(); ++k) CHECK(interior[k] > interior[k - 1]);
    for (int d : interior) CHECK(!mask[d]);
}

TEST_CASE("element quadrature carries the affine Jacobian") {
    const TensorMesh mesh = uniform_mesh(5, 4, 2);
    const QuadRule1D rule = gauss_rule(3);
    for (int e : {0, 7, mesh.num_elements() - 1}) {
        const auto pts = element_quadrature(mesh, e, rule);
        REQUIRE(pts.size() == 9);
        const Element& el = mesh.elements[e];
        double area = 0.0;
        for (const QuadPoint& q : pts) {
            CHECK(q.x >= el.x0);
            CHECK(q.x <= el.x1);
            CHECK(q.y >= el.y0);
            CHECK(q.y <= el.y1);
            area += q.w;
        }
        CHECK(area == doctest::Approx((el.x1 - el.x0) * (el.y1 - el.y0)).epsilon(1e-14));

        // Quadrature over an element integrates a bilinear function exactly.
        double integral = 0.0;
        for (const QuadPoint& q : pts) integral += q.w * (q.x * q.y);
        const double exact = 0.25 * (el.x1 * el.x1 - el.x0 * el.x0) *
                             (el.y1 * el.y1 - el.y0 * el.y0);
        CHECK(integral == doctest::Approx(exact).epsilon(1e-13));
    }

    // The fill-style overload reuses storage and clears stale content.
    std::vector<QuadPoint> buf(3);
    element_quadrature(mesh, 0, rule, buf);
    CHECK(buf.size() == 9);
}

TEST_CASE("mixed degrees between directions are rejected") {
    CHECK_THROWS_AS(TensorMesh(uniform_knot_vector(4, 2), uniform_knot_vector(4, 3)),
                    std::invalid_argument);
}
