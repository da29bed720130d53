#ifndef CHANNELSCOPE_WITNESS_HPP
#define CHANNELSCOPE_WITNESS_HPP

#include <array>
#include <optional>
#include <vector>

#include "channelscope/channels.hpp"

namespace chs {

/// Diagonal (+) or anti-diagonal (-) binary witness w_sign(omega).
struct Witness {
    enum class Sign { plus, minus };
    Sign sign = Sign::plus;
    double omega = 0.0;
};

enum class Strategy { trivial_guess, helstrom };

struct ThresholdResult {
    double value = 0.5;  // in [1/2, 1]
    Strategy strategy = Strategy::trivial_guess;
    std::optional<Vec3> optimal_bloch;  // qubit case only
};

/// (1+omega)/2 rho0 - (1-omega)/2 rho1
CMat helstrom(double omega, const CMat& rho0, const CMat& rho1);

/// Maximal Euclidean distance between omega*c and the canonical ellipsoid.
/// Requires the dihedral canonical form (is_d2_covariant and the ordering
/// conventions); piecewise closed form with the two branches meeting
/// continuously at |omega| = (d2^2 - d3^2)/(d3 c3).
double delta_closed(double omega, const D2Canonical& can);

ThresholdResult qubit_threshold(const D2Canonical& can, const Witness& w);

ThresholdResult covariant_threshold(const SpectralPairs& sp, const Witness& w);

/// Candidate maximizers {0, +/-omega1, +/-omega2, +/-1} intersected with
/// [-1,1]; omega1 is evaluated for both signs of (p11 - p22) and dropped
/// when undefined (c3 = 0 or negative radicand).
std::vector<double> critical_omegas(const D2Canonical& can, double p11_minus_p22);

/// Kinks gamma_k = beta_k / alpha_k of the piecewise-linear covariant
/// threshold, restricted to [-1, 1].
std::vector<double> gamma_kinks(const SpectralPairs& sp);

/// p^T . w for a 2x2 correlation given row-major with rows = inputs,
/// i.e. p[i][j] = p_{j|i}.
double witness_value(const Witness& w, const std::array<std::array<double, 2>, 2>& p);

}  // namespace chs

#endif
