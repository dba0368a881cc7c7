#include "iga/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iga {

namespace {

// P_n(x) and P_n'(x) from the three-term recurrence
struct LegendreValue {
    double p;
    double dp;
};

LegendreValue legendre(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

QuadRule1D gauss_rule(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("gauss_rule: size must be in [1, 8]");
    QuadRule1D rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    for (int i = 0; i < n / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        LegendreValue lv{};
        for (int iter = 0; iter < 100; ++iter) {
            lv = legendre(n, z);
            const double dz = lv.p / lv.dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        lv = legendre(n, z);
        const double w = 2.0 / ((1.0 - z * z) * lv.dp * lv.dp);
        rule.nodes[n - 1 - i] = z;  // z > 0, descending cosine guesses
        rule.nodes[i] = -z;
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        const LegendreValue lv = legendre(n, 0.0);
        rule.nodes[n / 2] = 0.0;
        rule.weights[n / 2] = 2.0 / (lv.dp * lv.dp);
    }
    return rule;
}

}  // namespace iga
