#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace iga {

/// Exact-solution sample: value, gradient, and the two pure second
/// derivatives (enough for the strong residual beta.grad(u) - eps*lap(u)).
struct ExactValue {
    double u = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double uxx = 0.0;
    double uyy = 0.0;
};

/// Advection-diffusion instance on the unit square:
///   beta.grad(u) - epsilon*lap(u) = f,  u = g on the boundary.
struct ProblemSpec {
    std::string name;
    double epsilon = 0.0;
    double beta_x = 0.0;
    double beta_y = 0.0;
    std::function<double(double, double)> source;               // f
    std::function<double(double, double)> boundary;             // g
    std::function<ExactValue(double, double)> exact;            // empty if unknown
};

/// beta = (1,1), zero boundary data, manufactured solution F(x)F(y) with
/// F(t) = t + (exp((t-1)/eps) - exp(-1/eps)) / (exp(-1/eps) - 1),
/// which keeps every exponent nonpositive (the algebraically equivalent
/// form with exp(t/eps) overflows once eps is small). Each factor solves
/// -eps F'' + F' = 1, so the source is f(x,y) = F(x) + F(y).
ProblemSpec problem_one(double epsilon);

/// beta = (1,0), f = 0, inflow data g = sin(pi*y) at x = 0 (zero elsewhere);
/// exact solution
///   (exp(r1(x-1)) - exp(r2(x-1))) / (exp(-r1) - exp(-r2)) * sin(pi*y)
/// with r1 = (1+sqrt(1+4 eps^2 pi^2))/(2 eps) and the cancellation-free
/// companion root r2 = -2 pi^2 eps / (1+sqrt(1+4 eps^2 pi^2)).
ProblemSpec problem_ej(double epsilon);

/// Lookup by CLI name: "p1" or "ej".
ProblemSpec make_problem(std::string_view name, double epsilon);

}  // namespace iga
