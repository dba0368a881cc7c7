#pragma once

#include <algorithm>
#include <string_view>
#include <vector>

#include "iga/quadrature.hpp"
#include "iga/splines.hpp"

namespace iga {

struct Element {
    double x0, x1, y0, y1;
    int span_x, span_y;
    double diameter;  // sqrt(hx^2 + hy^2)
};

/// Mesh length scale h used by the stabilized forms and the stability
/// estimates: the shortest element side. This is the knot-span length that
/// governs the spline inverse inequality, and on square elements it is the
/// grid spacing 1/n.
inline double stabilization_length(const Element& e) {
    return std::min(e.x1 - e.x0, e.y1 - e.y0);
}

/// Tensor-product B-spline space on [0,1]^2. Elements are the nonempty knot
/// span products, stored x-fastest; that order is the canonical reduction
/// order for all deterministic element loops. Global DOF index of the tensor
/// basis function (ix, iy) is ix * num_basis_y + iy.
struct TensorMesh {
    KnotVector kx, ky;
    std::vector<Element> elements;
    int num_elem_x = 0;
    int num_elem_y = 0;

    TensorMesh(KnotVector kx_, KnotVector ky_);

    int degree() const { return kx.degree; }
    int num_basis_x() const { return kx.num_basis(); }
    int num_basis_y() const { return ky.num_basis(); }
    int num_dofs() const { return num_basis_x() * num_basis_y(); }
    int num_elements() const { return static_cast<int>(elements.size()); }
    int dof_index(int ix, int iy) const { return ix * num_basis_y() + iy; }
};

/// nx-by-ny uniform spans on the unit square.
TensorMesh uniform_mesh(int nx, int ny, int degree);

/// Boundary-layer mesh: 26 geometrically graded spans toward x = 1 and
/// y = 1 (the grading halves the distance to 1 down to ~3e-8).
TensorMesh refined_mesh_p1(int degree = 2);

/// Graded spans toward x = 1, four uniform spans in y.
TensorMesh refined_mesh_ej(int degree = 2);

/// Accepts "uniform:NX", "uniform:NXxNY", "refined-p1", "refined-ej";
/// anything else throws std::invalid_argument.
TensorMesh parse_mesh(std::string_view text, int degree = 2);

/// True for DOFs whose tensor index is first or last in either direction;
/// exactly the functions with nonzero trace on the boundary.
std::vector<unsigned char> boundary_dof_mask(const TensorMesh& mesh);

/// Ascending global indices of the non-boundary DOFs.
std::vector<int> interior_dofs(const TensorMesh& mesh);

struct QuadPoint {
    double x, y, w;
};

/// Tensor Gauss points of `rule` mapped to element `e`, weights carrying the
/// affine Jacobian. Fills `out` (cleared first) to keep loops allocation-free.
void element_quadrature(const TensorMesh& mesh, int e, const QuadRule1D& rule,
                        std::vector<QuadPoint>& out);
std::vector<QuadPoint> element_quadrature(const TensorMesh& mesh, int e, const QuadRule1D& rule);

}  // namespace iga
