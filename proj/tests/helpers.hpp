#ifndef CHANNELSCOPE_TEST_HELPERS_HPP
#define CHANNELSCOPE_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "channelscope/channels.hpp"
#include "channelscope/compat.hpp"

namespace test_util {

inline chs::ChannelSpec pauli_spec(double l0, double l1, double l2, double l3) {
    chs::ChannelSpec s;
    s.family = chs::Family::pauli;
    s.lambda = {l0, l1, l2, l3};
    return s;
}

inline chs::ChannelSpec scalar_spec(chs::Family f, double lambda, std::size_t d = 2) {
    chs::ChannelSpec s;
    s.family = f;
    s.lambda = {lambda};
    s.d = d;
    return s;
}

inline chs::ChannelSpec plain_spec(chs::Family f, std::size_t d = 2) {
    chs::ChannelSpec s;
    s.family = f;
    s.d = d;
    return s;
}

inline chs::CMat random_density(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    chs::CMat m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = chs::cplx(g(rng), g(rng));
    chs::CMat rho = m * m.adjoint();
    const double tr = rho.trace().real();
    rho *= chs::cplx(1.0 / tr);
    return rho;
}

inline chs::Correlation random_correlation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double a = u(rng), b = u(rng);
    return chs::Correlation(2, 2, {a, 1.0 - a, b, 1.0 - b});
}

inline chs::Correlation from_xy(double x, double y) {
    return chs::Correlation(2, 2, {0.5 * (1.0 + x + y), 0.5 * (1.0 - x - y),
                                   0.5 * (1.0 + x - y), 0.5 * (1.0 - x + y)});
}

/// Composition amp_damp(mu) after pauli(lvec): D2-covariant with a broad
/// spread of canonical tuples.
inline chs::ChannelSpec random_d2_covariant(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double l[4] = {u(rng), u(rng), u(rng), u(rng)};
    const double sum = l[0] + l[1] + l[2] + l[3];
    for (double& v : l) v /= sum;
    const auto pk = chs::build_kraus(pauli_spec(l[0], l[1], l[2], l[3]));
    const auto ak = chs::build_kraus(scalar_spec(chs::Family::amp_damp, u(rng)));
    chs::ChannelSpec s;
    s.family = chs::Family::custom_kraus;
    for (const auto& a : ak)
        for (const auto& p : pk) s.kraus.push_back(a * p);
    return s;
}

}  // namespace test_util

#endif
