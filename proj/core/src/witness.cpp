#include "channelscope/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chs {

CMat helstrom(double omega, const CMat& rho0, const CMat& rho1) {
    if (std::abs(omega) > 1.0 + 1e-12)
        throw std::invalid_argument("helstrom: |omega| must be <= 1");
    if (rho0.dim() != rho1.dim())
        throw std::invalid_argument("helstrom: dimension mismatch");
    return cplx(0.5 * (1.0 + omega)) * rho0 - cplx(0.5 * (1.0 - omega)) * rho1;
}

namespace {

void require_canonical(const D2Canonical& can) {
    if (!can.is_d2_covariant)
        throw std::invalid_argument("channel is not D2-covariant");
    if (can.d2 < can.d1 - 1e-12 || can.c3 < 0.0 ||
        (can.c3 <= 1e-12 && can.d3 < can.d2 - 1e-12))
        throw std::invalid_argument("canonical ordering conventions violated");
}

// Branch test for the closed-form distance: the stationary interior point
// exists only when |omega| < (d2^2 - d3^2)/(d3 c3). Degenerate denominators
// resolve by sign of d2^2 - d3^2 (positive -> always the elliptic branch).
bool elliptic_branch(double omega, const D2Canonical& can) {
    const double num = can.d2 * can.d2 - can.d3 * can.d3;
    const double den = can.d3 * can.c3;
    if (den <= 1e-300) return num > 0.0;
    return std::abs(omega) < num / den;
}

}  // namespace

double delta_closed(double omega, const D2Canonical& can) {
    require_canonical(can);
    if (elliptic_branch(omega, can)) {
        const double num = can.d2 * can.d2 - can.d3 * can.d3;
        return can.d2 * std::sqrt(1.0 + can.c3 * can.c3 * omega * omega / num);
    }
    return can.d3 + can.c3 * std::abs(omega);
}

ThresholdResult qubit_threshold(const D2Canonical& can, const Witness& w) {
    const double omega = w.omega;
    const double delta = delta_closed(omega, can);

    ThresholdResult r;
    r.value = 0.5 * (1.0 + std::max(std::abs(omega), delta));
    r.strategy = (std::abs(omega) >= delta) ? Strategy::trivial_guess : Strategy::helstrom;

    // Optimal encoding x = D^+ y, with y from the branch formulas.
    Vec3 y{};
    if (elliptic_branch(omega, can)) {
        const double num = can.d3 * can.d3 - can.d2 * can.d2;  // negative here
        const double z = (std::abs(num) > 1e-300) ? can.c3 * can.d3 * can.d3 * omega / num : 0.0;
        double rad = 1.0;
        if (std::abs(num) > 1e-300)
            rad = 1.0 - can.c3 * can.c3 * can.d3 * can.d3 * omega * omega / (num * num);
        y = {0.0, can.d2 * std::sqrt(std::max(rad, 0.0)), z};
    } else {
        y = {0.0, 0.0, (omega >= 0.0 ? -can.d3 : can.d3)};
    }
    Vec3 x{};
    const double ds[3] = {can.d1, can.d2, can.d3};
    for (int i = 0; i < 3; ++i) x[i] = (ds[i] > 1e-12) ? y[i] / ds[i] : 0.0;
    r.optimal_bloch = x;
    return r;
}

ThresholdResult covariant_threshold(const SpectralPairs& sp, const Witness& w) {
    if (sp.alphas.size() != sp.betas.size())
        throw std::invalid_argument("covariant_threshold: alpha/beta size mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < sp.alphas.size(); ++k)
        s += std::abs(sp.alphas[k] * w.omega + sp.betas[k]);
    ThresholdResult r;
    r.value = 0.5 * (1.0 + s);
    r.strategy = (s > std::abs(w.omega) + 1e-15) ? Strategy::helstrom : Strategy::trivial_guess;
    return r;
}

std::vector<double> critical_omegas(const D2Canonical& can, double p11_minus_p22) {
    require_canonical(can);
    std::vector<double> out = {0.0, 1.0, -1.0};

    const double d2s = can.d2 * can.d2;
    const double d3s = can.d3 * can.d3;
    const double num = d2s - d3s;

    // omega1: stationary point of the Helstrom branch, for both witness
    // pairings of the correlation slope.
    if (can.c3 > 1e-12) {
        for (double s : {p11_minus_p22, -p11_minus_p22}) {
            const double rad = can.c3 * can.c3 * d2s - num * s * s;
            if (rad <= 0.0) continue;
            const double w1 = num * s / (can.c3 * std::sqrt(rad));
            if (std::abs(w1) <= 1.0) {
                out.push_back(w1);
                out.push_back(-w1);
            }
        }
    }

    // omega2: intersection of trivial guessing with the Helstrom branch.
    double w2 = std::numeric_limits<double>::quiet_NaN();
    if (num > d2s * can.c3) {
        const double den = num - d2s * can.c3 * can.c3;
        if (den > 1e-300) w2 = std::sqrt(d2s * num / den);
    } else if (std::abs(1.0 - can.c3) > 1e-12) {
        w2 = can.d3 / (1.0 - can.c3);
    }
    if (std::isfinite(w2) && std::abs(w2) <= 1.0) {
        out.push_back(w2);
        out.push_back(-w2);
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              out.end());
    return out;
}

std::vector<double> gamma_kinks(const SpectralPairs& sp) {
    std::vector<double> out;
    for (std::size_t k = 0; k < sp.alphas.size(); ++k) {
        if (std::abs(sp.alphas[k]) <= 1e-12) continue;
        const double g = sp.betas[k] / sp.alphas[k];
        if (std::abs(g) <= 1.0) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              out.end());
    return out;
}

double witness_value(const Witness& w, const std::array<std::array<double, 2>, 2>& p) {
    const double hi = 0.5 * (1.0 + w.omega);
    const double lo = 0.5 * (1.0 - w.omega);
    // w+ pairs (input 1, output 1) and (input 2, output 2); w- the swap.
    return (w.sign == Witness::Sign::plus) ? hi * p[0][0] + lo * p[1][1]
                                           : hi * p[0][1] + lo * p[1][0];
}

}  // namespace chs
