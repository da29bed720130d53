#ifndef CHANNELSCOPE_CHANNELS_HPP
#define CHANNELSCOPE_CHANNELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "channelscope/matrix.hpp"
#include "channelscope/numerics.hpp"

namespace chs {

enum class Family {
    pauli,
    amp_damp,
    erasure,
    depolarizing,
    cloning,
    transposition,
    unitary,
    dephasing,
    trace_class,
    custom_kraus,
    custom_affine,
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Bloch-affine form of a qubit channel: x -> A x + b.
struct QubitAffine {
    Mat3 a;
    Vec3 b;
};

/// Canonical ellipsoid data after the polar decomposition and signed-axis
/// permutation: singular values (d1, d2, d3) with d2 >= d1, displacement
/// magnitude c3 >= 0 along the third axis, and d3 >= d2 when c3 = 0.
/// is_d2_covariant is false when the displacement cannot be aligned with an
/// ellipsoid axis by any of the 48 signed permutations.
struct D2Canonical {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double c3 = 0.0;
    bool is_d2_covariant = false;
};

/// Per-eigenline coefficients of a covariant commutativity-preserving
/// channel: the k-th common eigenvalue of X(H(omega)) is alpha_k*omega + beta_k.
struct SpectralPairs {
    std::vector<double> alphas;
    std::vector<double> betas;
};

struct ChannelSpec {
    Family family = Family::pauli;
    std::vector<double> lambda;            // family parameter(s)
    std::size_t d = 2;                     // input dimension
    std::vector<cplx> fixed_state;         // erasure phi / trace-class sigma (pure)
    std::vector<CMat> kraus;               // custom_kraus or unitary payload
    std::optional<QubitAffine> affine;     // custom_affine payload

    double lambda0() const { return lambda.empty() ? 0.0 : lambda[0]; }
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const ChannelSpec& spec);

/// Kraus representation; output dimension is d+1 for erasure, d^2 for cloning.
std::vector<CMat> build_kraus(const ChannelSpec& spec);

std::size_t output_dim(const ChannelSpec& spec);

/// Channel with its Kraus list built once; use for hot loops.
class CompiledChannel {
public:
    explicit CompiledChannel(const ChannelSpec& spec);

    /// Linear action on any Hermitian input (Helstrom matrices included).
    CMat apply_herm(const CMat& m) const;

    /// Action on a density matrix; validates positivity and unit trace.
    CMat apply_state(const CMat& rho) const;

    const ChannelSpec& spec() const { return spec_; }

private:
    ChannelSpec spec_;
    std::vector<CMat> ks_;
};

/// Apply the channel to a density matrix.
CMat apply(const ChannelSpec& spec, const CMat& rho);

/// Linear action on an arbitrary Hermitian input.
CMat apply_herm(const ChannelSpec& spec, const CMat& m);

bool is_qubit(const ChannelSpec& spec);

/// Pauli-affine form; requires input and output dimension 2.
QubitAffine to_affine(const ChannelSpec& spec);

D2Canonical canonicalize_d2(const QubitAffine& aff);

bool verify_commutativity_preserving(const ChannelSpec& spec);

/// Requires a universally covariant commutativity-preserving family
/// (erasure, depolarizing, cloning, transposition); verifies the commutator
/// test before extracting the common eigenbasis.
SpectralPairs spectral_pairs(const ChannelSpec& spec);

/// rho(x) = (1 + x.sigma)/2
CMat bloch_state(const Vec3& x);
Vec3 bloch_vector(const CMat& rho);

}  // namespace chs

#endif
