#pragma once

#include <array>
#include <span>
#include <vector>

namespace iga {

inline constexpr int kMaxDegree = 7;

/// Open (clamped) knot vector: the first and last knot are repeated exactly
/// degree+1 times, interior knots are nondecreasing with multiplicity at most
/// the degree (so the basis is at least C^0 inside the domain). Validation
/// happens at construction; std::invalid_argument reports the violated rule.
struct KnotVector {
    std::vector<double> knots;
    int degree = 0;

    KnotVector(std::vector<double> knots_, int degree_);

    int num_basis() const { return static_cast<int>(knots.size()) - degree - 1; }
    double domain_min() const { return knots.front(); }
    double domain_max() const { return knots.back(); }
};

/// Clamped knot vector over the given strictly increasing breakpoints
/// (single interior multiplicity, i.e. C^{degree-1} continuity).
KnotVector open_knot_vector(std::span<const double> breakpoints, int degree);

/// Uniform breakpoints: `spans` equal intervals on [a, b].
KnotVector uniform_knot_vector(int spans, int degree, double a = 0.0, double b = 1.0);

/// Index i of the knot span [knots[i], knots[i+1]) containing x. The right
/// domain endpoint maps to the last nonempty span, so evaluation at
/// x = domain_max() yields the limit from the left.
int find_span(const KnotVector& kv, double x);

/// Greville abscissa of basis function i (knot average), the natural
/// collocation point for boundary interpolation.
double greville(const KnotVector& kv, int i);

/// Values and first two derivatives of the degree+1 basis functions that are
/// possibly nonzero at x; entry j belongs to global function first_index + j.
struct BasisEval {
    int first_index = 0;
    int count = 0;
    std::array<double, kMaxDegree + 1> value{};
    std::array<double, kMaxDegree + 1> d1{};
    std::array<double, kMaxDegree + 1> d2{};
};

/// Cox-de Boor recursion with the 0/0 := 0 convention; derivatives come from
/// the knot-difference formula applied to the lower-degree values (a degree-p
/// derivative is a combination of degree p-1 functions, and so on).
BasisEval eval_basis(const KnotVector& kv, double x);

}  // namespace iga
