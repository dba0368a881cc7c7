#include "iga/mesh.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace iga {

namespace {

// Graded breakpoints used by the reference accuracy tables, kept verbatim
// (including the 10-digit rounding of the later entries).
constexpr double kGradedBreakpoints[] = {
    0.0,          0.5,          0.75,         0.875,        0.9375,
    0.96875,      0.984375,     0.9921875,    0.99609375,   0.998046875,
    0.9990234375, 0.9995117188, 0.9997558594, 0.9998779297, 0.9999389648,
    0.9999694824, 0.9999847412, 0.9999923706, 0.9999961853, 0.9999980927,
    0.9999990463, 0.9999995232, 0.9999997616, 0.9999998808, 0.9999999404,
    0.9999999702, 1.0};

std::vector<int> nonempty_spans(const KnotVector& kv) {
    std::vector<int> spans;
    for (int s = kv.degree; s < kv.num_basis(); ++s)
        if (kv.knots[s + 1] > kv.knots[s]) spans.push_back(s);
    return spans;
}

}  // namespace

TensorMesh::TensorMesh(KnotVector kx_, KnotVector ky_) : kx(std::move(kx_)), ky(std::move(ky_)) {
    if (kx.degree != ky.degree)
        throw std::invalid_argument("tensor mesh: directions must share one degree");
    const auto sx = nonempty_spans(kx);
    const auto sy = nonempty_spans(ky);
    num_elem_x = static_cast<int>(sx.size());
    num_elem_y = static_cast<int>(sy.size());
    elements.reserve(static_cast<std::size_t>(num_elem_x) * num_elem_y);
    for (int ey = 0; ey < num_elem_y; ++ey) {
        for (int ex = 0; ex < num_elem_x; ++ex) {
            Element el{};
            el.span_x = sx[ex];
            el.span_y = sy[ey];
            el.x0 = kx.knots[el.span_x];
            el.x1 = kx.knots[el.span_x + 1];
            el.y0 = ky.knots[el.span_y];
            el.y1 = ky.knots[el.span_y + 1];
            el.diameter = std::hypot(el.x1 - el.x0, el.y1 - el.y0);
            elements.push_back(el);
        }
    }
}

TensorMesh uniform_mesh(int nx, int ny, int degree) {
    return TensorMesh(uniform_knot_vector(nx, degree), uniform_knot_vector(ny, degree));
}

TensorMesh refined_mesh_p1(int degree) {
    return TensorMesh(open_knot_vector(kGradedBreakpoints, degree),
                      open_knot_vector(kGradedBreakpoints, degree));
}

TensorMesh refined_mesh_ej(int degree) {
    return TensorMesh(open_knot_vector(kGradedBreakpoints, degree),
                      uniform_knot_vector(4, degree));
}

namespace {

int parse_positive_int(std::string_view s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end || value < 1) return -1;
    return value;
}

}  // namespace

TensorMesh parse_mesh(std::string_view text, int degree) {
    if (text == "refined-p1") return refined_mesh_p1(degree);
    if (text == "refined-ej") return refined_mesh_ej(degree);
    constexpr std::string_view prefix = "uniform:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string_view dims = text.substr(prefix.size());
        const std::size_t cross = dims.find('x');
        const std::string_view xs = dims.substr(0, cross);
        const int nx = parse_positive_int(xs);
        int ny = nx;
        if (cross != std::string_view::npos) ny = parse_positive_int(dims.substr(cross + 1));
        if (nx > 0 && ny > 0) return uniform_mesh(nx, ny, degree);
    }
    throw std::invalid_argument("unknown mesh spec '" + std::string(text) +
                                "' (expected uniform:NX, uniform:NXxNY, refined-p1, refined-ej)");
}

std::vector<unsigned char> boundary_dof_mask(const TensorMesh& mesh) {
    const int nbx = mesh.num_basis_x();
    const int nby = mesh.num_basis_y();
    std::vector<unsigned char> mask(static_cast<std::size_t>(nbx) * nby, 0);
    for (int ix = 0; ix < nbx; ++ix)
        for (int iy = 0; iy < nby; ++iy)
            if (ix == 0 || ix == nbx - 1 || iy == 0 || iy == nby - 1)
                mask[mesh.dof_index(ix, iy)] = 1;
    return mask;
}

std::vector<int> interior_dofs(const TensorMesh& mesh) {
    const auto mask = boundary_dof_mask(mesh);
    std::vector<int> interior;
    interior.reserve(mask.size());
    for (int d = 0; d < mesh.num_dofs(); ++d)
        if (!mask[d]) interior.push_back(d);
    return interior;
}

void element_quadrature(const TensorMesh& mesh, int e, const QuadRule1D& rule,
                        std::vector<QuadPoint>& out) {
    const Element& el = mesh.elements.at(e);
    const double jx = 0.5 * (el.x1 - el.x0);
    const double jy = 0.5 * (el.y1 - el.y0);
    const int n = static_cast<int>(rule.nodes.size());
    out.clear();
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int qy = 0; qy < n; ++qy) {
        const double y = el.y0 + jy * (rule.nodes[qy] + 1.0);
        const double wy = rule.weights[qy] * jy;
        for (int qx = 0; qx < n; ++qx) {
            const double x = el.x0 + jx * (rule.nodes[qx] + 1.0);
            out.push_back(QuadPoint{x, y, rule.weights[qx] * jx * wy});
        }
    }
}

std::vector<QuadPoint> element_quadrature(const TensorMesh& mesh, int e, const QuadRule1D& rule) {
    std::vector<QuadPoint> out;
    element_quadrature(mesh, e, rule, out);
    return out;
}

}  // namespace iga
