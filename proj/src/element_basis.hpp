#pragma once

// Internal helper: 1D basis tables on an element's mapped Gauss points,
// shared by the assembly, Gram, and error-norm element loops.

#include <vector>

#include "iga/mesh.hpp"
#include "iga/splines.hpp"

namespace iga::detail {

struct ElementBasis {
    int nq = 0;
    int first_x = 0, first_y = 0;     // global index of first nonzero function
    std::vector<double> xs, ys;       // mapped node coordinates
    std::vector<double> wx, wy;       // mapped 1D weights (Jacobian included)
    std::vector<BasisEval> bx, by;    // per-node 1D evaluations
};

inline void tabulate(const TensorMesh& mesh, int e, const QuadRule1D& rule, ElementBasis& t) {
    const Element& el = mesh.elements[e];
    const int nq = static_cast<int>(rule.nodes.size());
    const double jx = 0.5 * (el.x1 - el.x0);
    const double jy = 0.5 * (el.y1 - el.y0);
    t.nq = nq;
    t.xs.resize(nq);
    t.ys.resize(nq);
    t.wx.resize(nq);
    t.wy.resize(nq);
    t.bx.resize(nq);
    t.by.resize(nq);
    for (int q = 0; q < nq; ++q) {
        t.xs[q] = el.x0 + jx * (rule.nodes[q] + 1.0);
        t.ys[q] = el.y0 + jy * (rule.nodes[q] + 1.0);
        t.wx[q] = rule.weights[q] * jx;
        t.wy[q] = rule.weights[q] * jy;
        t.bx[q] = eval_basis(mesh.kx, t.xs[q]);
        t.by[q] = eval_basis(mesh.ky, t.ys[q]);
    }
    t.first_x = t.bx[0].first_index;
    t.first_y = t.by[0].first_index;
}

}  // namespace iga::detail
