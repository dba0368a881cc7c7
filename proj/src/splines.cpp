#include "iga/splines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iga {

KnotVector::KnotVector(std::vector<double> knots_, int degree_)
    : knots(std::move(knots_)), degree(degree_) {
    if (degree < 0 || degree > kMaxDegree)
        throw std::invalid_argument("knot vector: degree outside [0, 7]");
    const int p = degree;
    const int m = static_cast<int>(knots.size());
    if (m < 2 * (p + 1)) throw std::invalid_argument("knot vector: too few knots");
    for (int i = 0; i + 1 < m; ++i)
        if (!(knots[i] <= knots[i + 1]) || !std::isfinite(knots[i]))
            throw std::invalid_argument("knot vector: knots must be finite and nondecreasing");
    if (!(knots.front() < knots.back()))
        throw std::invalid_argument("knot vector: empty domain");
    if (knots[p] != knots.front() || (p + 1 < m && knots[p + 1] == knots.front()))
        throw std::invalid_argument("knot vector: first knot must repeat exactly degree+1 times");
    if (knots[m - 1 - p] != knots.back() || knots[m - 2 - p] == knots.back())
        throw std::invalid_argument("knot vector: last knot must repeat exactly degree+1 times");
    // interior multiplicity cap keeps the basis at least C^0 (p >= 1)
    const int max_mult = std::max(p, 1);
    int run = 1;
    for (int i = p + 1; i < m - p; ++i) {
        run = (knots[i] == knots[i - 1]) ? run + 1 : 1;
        if (run > max_mult)
            throw std::invalid_argument("knot vector: interior knot multiplicity exceeds degree");
    }
}

KnotVector open_knot_vector(std::span<const double> breakpoints, int degree) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("open_knot_vector: need at least two breakpoints");
    std::vector<double> knots;
    knots.reserve(breakpoints.size() + 2 * static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) knots.push_back(breakpoints.front());
    knots.insert(knots.end(), breakpoints.begin(), breakpoints.end());
    for (int i = 0; i < degree; ++i) knots.push_back(breakpoints.back());
    return KnotVector(std::move(knots), degree);
}

KnotVector uniform_knot_vector(int spans, int degree, double a, double b) {
    if (spans < 1) throw std::invalid_argument("uniform_knot_vector: need at least one span");
    std::vector<double> pts(static_cast<std::size_t>(spans) + 1);
    for (int i = 0; i <= spans; ++i)
        pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(spans);
    pts[spans] = b;
    return open_knot_vector(pts, degree);
}

int find_span(const KnotVector& kv, double x) {
    if (!(x >= kv.domain_min() && x <= kv.domain_max()))
        throw std::domain_error("find_span: point outside the knot domain");
    const int n = kv.num_basis();
    if (x >= kv.knots[n]) return n - 1;  // right-endpoint closure
    const auto first = kv.knots.begin() + kv.degree;
    const auto last = kv.knots.begin() + n;
    const auto it = std::upper_bound(first, last, x);
    return static_cast<int>(it - kv.knots.begin()) - 1;
}

double greville(const KnotVector& kv, int i) {
    if (i < 0 || i >= kv.num_basis()) throw std::out_of_range("greville: index out of range");
    if (kv.degree == 0) return 0.5 * (kv.knots[i] + kv.knots[i + 1]);
    double s = 0.0;
    for (int k = 1; k <= kv.degree; ++k) s += kv.knots[i + k];
    return s / kv.degree;
}

namespace {

// one Cox-de Boor term; a zero knot difference annihilates the whole term
inline double ratio(double num, double den, double b) { return den != 0.0 ? (num / den) * b : 0.0; }

}  // namespace

BasisEval eval_basis(const KnotVector& kv, double x) {
    const int p = kv.degree;
    const int span = find_span(kv, x);
    const auto& t = kv.knots;

    // lvl[q][j] = B_{span-q+j, q}(x) for j = 0..q
    double lvl[kMaxDegree + 1][kMaxDegree + 1] = {};
    lvl[0][0] = 1.0;
    for (int q = 1; q <= p; ++q) {
        for (int j = 0; j <= q; ++j) {
            const int i = span - q + j;
            const double left = (j >= 1) ? lvl[q - 1][j - 1] : 0.0;
            const double right = (j <= q - 1) ? lvl[q - 1][j] : 0.0;
            lvl[q][j] = ratio(x - t[i], t[i + q] - t[i], left) +
                        ratio(t[i + q + 1] - x, t[i + q + 1] - t[i + 1], right);
        }
    }

    BasisEval out;
    out.first_index = span - p;
    out.count = p + 1;
    for (int j = 0; j <= p; ++j) out.value[j] = lvl[p][j];

    if (p >= 1) {
        for (int j = 0; j <= p; ++j) {
            const int i = span - p + j;
            const double left = (j >= 1) ? lvl[p - 1][j - 1] : 0.0;
            const double right = (j <= p - 1) ? lvl[p - 1][j] : 0.0;
            out.d1[j] = p * (ratio(1.0, t[i + p] - t[i], left) -
                             ratio(1.0, t[i + p + 1] - t[i + 1], right));
        }
    }
    if (p >= 2) {
        // first derivatives of the degree p-1 functions, then differenced again
        double dlow[kMaxDegree + 1] = {};
        for (int j = 0; j <= p - 1; ++j) {
            const int i = span - (p - 1) + j;
            const double left = (j >= 1) ? lvl[p - 2][j - 1] : 0.0;
            const double right = (j <= p - 2) ? lvl[p - 2][j] : 0.0;
            dlow[j] = (p - 1) * (ratio(1.0, t[i + p - 1] - t[i], left) -
                                 ratio(1.0, t[i + p] - t[i + 1], right));
        }
        for (int j = 0; j <= p; ++j) {
            const int i = span - p + j;
            const double left = (j >= 1) ? dlow[j - 1] : 0.0;
            const double right = (j <= p - 1) ? dlow[j] : 0.0;
            out.d2[j] = p * (ratio(1.0, t[i + p] - t[i], left) -
                             ratio(1.0, t[i + p + 1] - t[i + 1], right));
        }
    }
    return out;
}

}  // namespace iga
