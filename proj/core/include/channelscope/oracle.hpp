#ifndef CHANNELSCOPE_ORACLE_HPP
#define CHANNELSCOPE_ORACLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "channelscope/channels.hpp"
#include "channelscope/compat.hpp"
#include "channelscope/witness.hpp"

namespace chs {

/// Cloud of achievable Cartesian points, deterministic given the seed.
struct SampleCloud {
    std::vector<std::pair<double, double>> points;
    std::uint64_t seed = 0;
    std::size_t count = 0;
};

enum class SampleMode { random, boundary };

/// random: Haar-random pure-state pairs and random binary POVMs.
/// boundary: orthonormal pure pairs with the optimal-discrimination POVM
/// (projector on the positive part of the channeled Helstrom matrix), over
/// an omega sweep plus analytic critical points where available.
SampleCloud sample_correlations(const ChannelSpec& spec, std::size_t count,
                                std::uint64_t seed, SampleMode mode);

/// CSV export: header "x,y", one point per line, 17 significant digits.
std::string cloud_to_csv(const SampleCloud& cloud);

/// Multi-start local ascent over orthonormal pure-state pairs of the
/// discrimination objective (1 + |X(H)|_1)/2. Never exceeds the closed
/// forms where those apply.
double numeric_threshold(const ChannelSpec& spec, const Witness& w, int restarts,
                         std::uint64_t seed);

/// Grid scan plus golden-section refinement of the squared-distance profile
/// over the meridian coordinate z in [-d3, d3].
double numeric_delta(const D2Canonical& can, double omega, int grid);

/// lambda-/lambda+ membership roots (lambda_minus, lambda_plus) of the
/// damping-parameter quadratic for a 2x2 correlation.
std::pair<double, double> damping_roots(const Correlation& p);

/// Haar-random unitary via orthonormalization of complex-normal draws.
CMat haar_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace chs

#endif
