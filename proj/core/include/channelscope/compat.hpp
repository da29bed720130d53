#ifndef CHANNELSCOPE_COMPAT_HPP
#define CHANNELSCOPE_COMPAT_HPP

#include <functional>
#include <vector>

#include "channelscope/witness.hpp"

namespace chs {

/// m x n row-stochastic matrix of conditional probabilities p_{j|i}
/// (rows = inputs).
class Correlation {
public:
    Correlation(std::size_t m, std::size_t n);
    Correlation(std::size_t m, std::size_t n, std::vector<double> entries);

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return p_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }

    /// Throws if entries leave [0,1] by more than 1e-12 or a row sum misses
    /// 1 by more than 1e-10.
    void validate() const;

    bool is_binary() const { return m_ == 2 && n_ == 2; }
    std::array<std::array<double, 2>, 2> as_2x2() const;

    /// x = p_{1|1} + p_{1|2} - 1 (binary only)
    double cart_x() const;
    /// y = p_{1|1} - p_{1|2} (binary only)
    double cart_y() const;

private:
    std::size_t m_, n_;
    std::vector<double> p_;
};

struct Verdict {
    bool compatible = false;
    double margin = 0.0;  // max over tested witnesses of p.w - W; <= tol iff compatible
    Witness worst_witness;
};

/// Boundary tolerance for membership: compatible means margin <= kMarginTol.
inline constexpr double kMarginTol = 1e-9;

/// Membership for a D2-covariant qubit channel: evaluates both witness signs
/// over the finite critical set of omegas.
Verdict check_qubit_d2(const D2Canonical& can, const Correlation& p);

/// Membership for a universally covariant commutativity-preserving channel:
/// both witness signs at omega in {0, +/-1, kinks}.
Verdict check_covariant(const SpectralPairs& sp, const Correlation& p);

/// Direct evaluation of the per-family closed-form inequalities
/// (pauli, amp_damp, erasure, depolarizing, cloning, transposition).
Verdict check_closed_form(const ChannelSpec& spec, const Correlation& p);

/// Witness threshold for any channel family with a closed form, dispatching
/// to the qubit, covariant, trace-class, or polytope path.
double threshold_for(const ChannelSpec& spec, const Witness& w);

/// Scan both witness signs over an omega grid plus analytic critical points.
Verdict max_violation(const ChannelSpec& spec, const Correlation& p, int omega_grid);

/// Route membership through the best available decision procedure.
Verdict check_membership(const ChannelSpec& spec, const Correlation& p);

/// E(B) subset of E(A) tested on a Cartesian grid over the square.
bool region_inclusion(const ChannelSpec& a, const ChannelSpec& b, int grid);

}  // namespace chs

#endif
