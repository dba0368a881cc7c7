#include "iga/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iga {

namespace {

constexpr double kPi = std::numbers::pi;

struct Factor {
    double f, d1, d2;
};

// F(t) = t + (exp((t-1)/eps) - exp(-1/eps)) / (exp(-1/eps) - 1)
Factor p1_factor(double t, double eps) {
    const double em = std::exp(-1.0 / eps);
    const double den = em - 1.0;
    const double e = std::exp((t - 1.0) / eps);
    Factor out;
    out.f = t + (e - em) / den;
    out.d1 = 1.0 + e / (eps * den);
    out.d2 = e / (eps * eps * den);
    return out;
}

}  // namespace

ProblemSpec problem_one(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("problem_one: epsilon must be positive");
    ProblemSpec spec;
    spec.name = "p1";
    spec.epsilon = epsilon;
    spec.beta_x = 1.0;
    spec.beta_y = 1.0;
    spec.source = [epsilon](double x, double y) {
        return p1_factor(x, epsilon).f + p1_factor(y, epsilon).f;
    };
    spec.boundary = [](double, double) { return 0.0; };
    spec.exact = [epsilon](double x, double y) {
        const Factor fx = p1_factor(x, epsilon);
        const Factor fy = p1_factor(y, epsilon);
        ExactValue v;
        v.u = fx.f * fy.f;
        v.ux = fx.d1 * fy.f;
        v.uy = fx.f * fy.d1;
        v.uxx = fx.d2 * fy.f;
        v.uyy = fx.f * fy.d2;
        return v;
    };
    return spec;
}

ProblemSpec problem_ej(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("problem_ej: epsilon must be positive");
    const double s = std::sqrt(1.0 + 4.0 * epsilon * epsilon * kPi * kPi);
    const double r1 = (1.0 + s) / (2.0 * epsilon);
    const double r2 = -2.0 * kPi * kPi * epsilon / (1.0 + s);
    const double den = std::exp(-r1) - std::exp(-r2);

    ProblemSpec spec;
    spec.name = "ej";
    spec.epsilon = epsilon;
    spec.beta_x = 1.0;
    spec.beta_y = 0.0;
    spec.source = [](double, double) { return 0.0; };
    spec.boundary = [](double x, double y) { return x == 0.0 ? std::sin(kPi * y) : 0.0; };
    spec.exact = [r1, r2, den](double x, double y) {
        const double e1 = std::exp(r1 * (x - 1.0));
        const double e2 = std::exp(r2 * (x - 1.0));
        const double X = (e1 - e2) / den;
        const double X1 = (r1 * e1 - r2 * e2) / den;
        const double X2 = (r1 * r1 * e1 - r2 * r2 * e2) / den;
        const double sy = std::sin(kPi * y);
        ExactValue v;
        v.u = X * sy;
        v.ux = X1 * sy;
        v.uy = X * kPi * std::cos(kPi * y);
        v.uxx = X2 * sy;
        v.uyy = -kPi * kPi * X * sy;
        return v;
    };
    return spec;
}

ProblemSpec make_problem(std::string_view name, double epsilon) {
    if (name == "p1") return problem_one(epsilon);
    if (name == "ej") return problem_ej(epsilon);
    throw std::invalid_argument("unknown problem '" + std::string(name) + "' (expected p1 or ej)");
}

}  // namespace iga
