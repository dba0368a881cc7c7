#pragma once

#include <vector>

namespace iga {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n-1.
struct QuadRule1D {
    std::vector<double> nodes;    // ascending, symmetric about 0
    std::vector<double> weights;  // positive, summing to 2
};

/// Nodes are Legendre roots found by Newton iteration from the cosine
/// initial guess (tolerance 1e-15); supported sizes 1..8 cover every rule
/// this project needs (assembly p+2, error norms p+3).
QuadRule1D gauss_rule(int n);

}  // namespace iga
