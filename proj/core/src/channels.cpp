#include "channelscope/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chs {

namespace {

const double kTol = 1e-10;

CMat pauli(int k) {
    CMat m(2);
    switch (k) {
        case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 2: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::logic_error("pauli index");
    }
    return m;
}

CMat swap_gate(std::size_t d) {
    CMat s(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
    return s;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double lambda_scalar(const ChannelSpec& spec) {
    require(spec.lambda.size() == 1, family_name(spec.family) + ": expects a single lambda");
    const double l = spec.lambda[0];
    require(l >= -1e-12 && l <= 1.0 + 1e-12,
            family_name(spec.family) + ": lambda must lie in [0,1]");
    return std::clamp(l, 0.0, 1.0);
}

std::vector<cplx> normalized_pure(const std::vector<cplx>& v, std::size_t dim,
                                  const std::string& what) {
    require(v.size() == dim, what + ": wrong dimension");
    double n2 = 0.0;
    for (const auto& x : v) n2 += std::norm(x);
    require(n2 > 1e-12, what + ": zero vector");
    std::vector<cplx> r(v);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : r) x *= inv;
    return r;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::pauli: return "pauli";
        case Family::amp_damp: return "amp_damp";
        case Family::erasure: return "erasure";
        case Family::depolarizing: return "depolarizing";
        case Family::cloning: return "cloning";
        case Family::transposition: return "transposition";
        case Family::unitary: return "unitary";
        case Family::dephasing: return "dephasing";
        case Family::trace_class: return "trace_class";
        case Family::custom_kraus: return "custom_kraus";
        case Family::custom_affine: return "custom_affine";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::pauli, Family::amp_damp, Family::erasure,
                     Family::depolarizing, Family::cloning, Family::transposition,
                     Family::unitary, Family::dephasing, Family::trace_class,
                     Family::custom_kraus, Family::custom_affine})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown channel family: " + s);
}

void validate(const ChannelSpec& spec) {
    require(spec.d >= 1, "d must be positive");
    switch (spec.family) {
        case Family::pauli: {
            require(spec.lambda.size() == 4, "pauli: lambda must have 4 entries");
            double sum = 0.0;
            for (double l : spec.lambda) {
                require(l >= -1e-12, "pauli: lambda entries must be nonnegative");
                sum += l;
            }
            require(std::abs(sum - 1.0) <= 1e-12, "pauli: lambda must sum to 1");
            break;
        }
        case Family::amp_damp:
        case Family::dephasing:
            lambda_scalar(spec);
            break;
        case Family::erasure:
        case Family::depolarizing:
            lambda_scalar(spec);
            require(spec.d >= 2, family_name(spec.family) + ": d must be >= 2");
            break;
        case Family::cloning:
        case Family::transposition:
            require(spec.d >= 2, family_name(spec.family) + ": d must be >= 2");
            break;
        case Family::unitary:
            if (!spec.kraus.empty()) {
                require(spec.kraus.size() == 1, "unitary: expects a single matrix");
                require(spec.kraus[0].dim() == spec.d, "unitary: dimension mismatch");
                const CMat u = spec.kraus[0];
                CMat uu = u.adjoint() * u;
                require((uu - CMat::identity(spec.d)).max_abs() <= kTol,
                        "unitary: matrix is not unitary");
            }
            break;
        case Family::trace_class:
            if (!spec.fixed_state.empty())
                normalized_pure(spec.fixed_state, spec.d, "trace_class sigma");
            break;
        case Family::custom_kraus: {
            require(!spec.kraus.empty(), "custom_kraus: empty Kraus list");
            require(spec.kraus[0].dim() == spec.d, "custom_kraus: dimension mismatch with d");
            CMat sum(spec.kraus[0].dim());
            for (const auto& k : spec.kraus) {
                require(k.dim() == spec.kraus[0].dim(), "custom_kraus: mixed dimensions");
                sum += k.adjoint() * k;
            }
            require((sum - CMat::identity(sum.dim())).max_abs() <= kTol,
                    "custom_kraus: sum K^dag K != identity");
            break;
        }
        case Family::custom_affine: {
            require(spec.affine.has_value(), "custom_affine: missing (A,b)");
            // Image of the Bloch ball must stay inside the ball.
            const auto& aff = *spec.affine;
            const int N = 200;
            for (int i = 0; i < N; ++i) {
                const double th = std::acos(1.0 - 2.0 * (i + 0.5) / N);
                const double ph = 2.4 * i;  // golden-ish spiral
                Vec3 x = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                          std::cos(th)};
                Vec3 y = mat3_apply(aff.a, x);
                for (int k = 0; k < 3; ++k) y[k] += aff.b[k];
                const double n = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
                require(n <= 1.0 + 1e-9, "custom_affine: image leaves the Bloch ball");
            }
            break;
        }
    }
}

std::size_t output_dim(const ChannelSpec& spec) {
    switch (spec.family) {
        case Family::erasure: return spec.d + 1;
        case Family::cloning: return spec.d * spec.d;
        case Family::custom_kraus: return spec.kraus[0].dim();
        default: return spec.d;
    }
}

std::vector<CMat> build_kraus(const ChannelSpec& spec) {
    validate(spec);
    const std::size_t d = spec.d;
    std::vector<CMat> ks;
    switch (spec.family) {
        case Family::pauli: {
            for (int k = 0; k < 4; ++k)
                if (spec.lambda[k] > 0.0) ks.push_back(std::sqrt(spec.lambda[k]) * pauli(k));
            break;
        }
        case Family::amp_damp: {
            const double l = lambda_scalar(spec);
            CMat a0(2), a1(2);
            a0(0, 0) = 1.0;
            a0(1, 1) = std::sqrt(l);
            a1(0, 1) = std::sqrt(1.0 - l);
            ks = {a0, a1};
            break;
        }
        case Family::erasure: {
            const double l = lambda_scalar(spec);
            // Output space is d+1 dimensional; phi defaults to the added
            // basis direction |d>.
            std::vector<cplx> phi(d + 1);
            if (spec.fixed_state.empty()) {
                phi[d] = 1.0;
            } else {
                auto p = normalized_pure(spec.fixed_state, d + 1, "erasure phi");
                phi = p;
            }
            CMat keep(d + 1);
            for (std::size_t i = 0; i < d; ++i) keep(i, i) = std::sqrt(l);
            ks.push_back(keep);
            for (std::size_t i = 0; i < d; ++i) {
                CMat k(d + 1);
                for (std::size_t r = 0; r < d + 1; ++r)
                    k(r, i) = std::sqrt(1.0 - l) * phi[r];
                ks.push_back(k);
            }
            break;
        }
        case Family::depolarizing: {
            const double l = lambda_scalar(spec);
            if (l > 0.0) {
                CMat id = CMat::identity(d);
                ks.push_back(std::sqrt(l) * id);
            }
            const double w = std::sqrt((1.0 - l) / static_cast<double>(d));
            if (w > 0.0)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) {
                        CMat k(d);
                        k(i, j) = w;
                        ks.push_back(k);
                    }
            break;
        }
        case Family::cloning: {
            // K_j = sqrt(2/(d+1)) P_S (1 x |j>), with P_S = (1 + SWAP)/2.
            CMat ps = 0.5 * (CMat::identity(d * d) + swap_gate(d));
            const double w = std::sqrt(2.0 / (d + 1.0));
            // P_S (1 x |j>) stored as a d^2 x d^2 matrix with only the first
            // d columns (the input space) populated.
            for (std::size_t j = 0; j < d; ++j) {
                CMat k(d * d);
                for (std::size_t r = 0; r < d * d; ++r)
                    for (std::size_t c = 0; c < d; ++c) k(r, c) = w * ps(r, c * d + j);
                ks.push_back(k);
            }
            break;
        }
        case Family::transposition: {
            const double wd = 1.0 / std::sqrt(d + 1.0);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = k; l < d; ++l) {
                    CMat m(d);
                    if (k == l) {
                        m(k, k) = std::sqrt(2.0) * wd;
                    } else {
                        m(k, l) = wd;
                        m(l, k) = wd;
                    }
                    ks.push_back(m);
                }
            break;
        }
        case Family::unitary:
            ks.push_back(spec.kraus.empty() ? CMat::identity(d) : spec.kraus[0]);
            break;
        case Family::dephasing: {
            const double l = lambda_scalar(spec);
            if (l > 0.0) ks.push_back(std::sqrt(l) * CMat::identity(d));
            for (std::size_t k = 0; k < d; ++k) {
                CMat m(d);
                m(k, k) = std::sqrt(1.0 - l);
                ks.push_back(m);
            }
            break;
        }
        case Family::trace_class: {
            std::vector<cplx> sigma(d);
            if (spec.fixed_state.empty())
                sigma[0] = 1.0;
            else
                sigma = normalized_pure(spec.fixed_state, d, "trace_class sigma");
            for (std::size_t i = 0; i < d; ++i) {
                CMat k(d);
                for (std::size_t r = 0; r < d; ++r) k(r, i) = sigma[r];
                ks.push_back(k);
            }
            break;
        }
        case Family::custom_kraus:
            ks = spec.kraus;
            break;
        case Family::custom_affine:
            throw std::invalid_argument("custom_affine has no Kraus representation here");
    }

    // Completeness on the input space: the Kraus matrices live in the output
    // dimension with the input block in the leading columns, so sum K^dag K
    // must equal the projector onto those columns.
    CMat sum(ks.front().dim());
    for (const auto& k : ks) sum += k.adjoint() * k;
    CMat proj(sum.dim());
    for (std::size_t i = 0; i < spec.d; ++i) proj(i, i) = 1.0;
    if ((sum - proj).max_abs() > kTol)
        throw std::logic_error("Kraus completeness violated for " + family_name(spec.family));
    return ks;
}

CMat bloch_state(const Vec3& x) {
    CMat rho(2);
    rho(0, 0) = 0.5 * (1.0 + x[2]);
    rho(1, 1) = 0.5 * (1.0 - x[2]);
    rho(0, 1) = 0.5 * cplx(x[0], -x[1]);
    rho(1, 0) = 0.5 * cplx(x[0], x[1]);
    return rho;
}

Vec3 bloch_vector(const CMat& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("bloch_vector: not a qubit state");
    Vec3 x;
    x[0] = 2.0 * rho(1, 0).real();
    x[1] = 2.0 * rho(1, 0).imag();
    x[2] = (rho(0, 0) - rho(1, 1)).real();
    return x;
}

CompiledChannel::CompiledChannel(const ChannelSpec& spec) : spec_(spec) {
    validate(spec);
    if (spec.family != Family::custom_affine) ks_ = build_kraus(spec);
}

CMat CompiledChannel::apply_herm(const CMat& m) const {
    if (m.dim() != spec_.d)
        throw std::invalid_argument("apply: input dimension mismatch");
    if (m.hermiticity_defect() > 1e-9)
        throw std::invalid_argument("apply: input not Hermitian");

    if (spec_.family == Family::custom_affine) {
        // Linear extension to non-unit-trace Hermitian inputs (Helstrom
        // matrices): X(M) has Pauli components A x_M + tr(M) b.
        const double tr = m.trace().real();
        Vec3 xs;
        xs[0] = 2.0 * m(1, 0).real();
        xs[1] = 2.0 * m(1, 0).imag();
        xs[2] = (m(0, 0) - m(1, 1)).real();
        Vec3 ys = mat3_apply(spec_.affine->a, xs);
        for (int k = 0; k < 3; ++k) ys[k] += tr * spec_.affine->b[k];
        CMat out(2);
        out(0, 0) = 0.5 * (tr + ys[2]);
        out(1, 1) = 0.5 * (tr - ys[2]);
        out(0, 1) = 0.5 * cplx(ys[0], -ys[1]);
        out(1, 0) = 0.5 * cplx(ys[0], ys[1]);
        return out;
    }

    // Kraus matrices are square in the output dimension with the input block
    // in the leading columns; pad the input accordingly.
    const std::size_t od = ks_.front().dim();
    CMat padded(od);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) padded(i, j) = m(i, j);
    CMat out(od);
    for (const auto& k : ks_) out += k * padded * k.adjoint();
    return out;
}

CMat CompiledChannel::apply_state(const CMat& rho) const {
    if (std::abs(rho.trace().real() - 1.0) > 1e-10)
        throw std::invalid_argument("apply: state trace != 1");
    const EigenSystem es = herm_eig(rho.hermitized());
    if (es.values.back() < -1e-9)
        throw std::invalid_argument("apply: state not positive semidefinite");
    return apply_herm(rho);
}

CMat apply(const ChannelSpec& spec, const CMat& rho) {
    return CompiledChannel(spec).apply_state(rho);
}

CMat apply_herm(const ChannelSpec& spec, const CMat& m) {
    return CompiledChannel(spec).apply_herm(m);
}

bool is_qubit(const ChannelSpec& spec) {
    return spec.d == 2 && output_dim(spec) == 2;
}

QubitAffine to_affine(const ChannelSpec& spec) {
    if (!is_qubit(spec))
        throw std::invalid_argument("to_affine: channel is not qubit-to-qubit");
    if (spec.family == Family::custom_affine) return *spec.affine;

    QubitAffine aff{};
    // b_i = Tr[sigma_i X(1)]/2; A_ij = Tr[sigma_i X(sigma_j)]/2.
    // X extends linearly to non-state Hermitian inputs through the Kraus form.
    const auto ks = build_kraus(spec);
    auto apply_raw = [&](const CMat& m) {
        CMat out(2);
        for (const auto& k : ks) out += k * m * k.adjoint();
        return out;
    };
    const CMat xid = apply_raw(CMat::identity(2));
    for (int i = 0; i < 3; ++i)
        aff.b[i] = 0.5 * (pauli(i + 1) * xid).trace().real();
    for (int j = 0; j < 3; ++j) {
        const CMat xj = apply_raw(pauli(j + 1));
        for (int i = 0; i < 3; ++i)
            aff.a[i][j] = 0.5 * (pauli(i + 1) * xj).trace().real();
    }
    return aff;
}

D2Canonical canonicalize_d2(const QubitAffine& aff) {
    const Polar3 p3 = polar_3x3(aff.a);
    // c = -V^T b in the frame of the ellipsoid axes
    Vec3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) c[i] -= p3.v[k][i] * aff.b[k];

    int nonzero = 0;
    int axis = -1;
    double cmax = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(c[i]) > 1e-10) ++nonzero;
        if (std::abs(c[i]) > cmax) {
            cmax = std::abs(c[i]);
            axis = i;
        }
    }

    D2Canonical can;
    can.is_d2_covariant = (nonzero <= 1);

    if (nonzero == 0) {
        // c = 0: order d3 >= d2 >= d1.
        Vec3 d = p3.d;
        std::sort(d.begin(), d.end());
        can.d1 = d[0];
        can.d2 = d[1];
        can.d3 = d[2];
        can.c3 = 0.0;
        return can;
    }

    // Displacement axis becomes axis 3; remaining singular values get
    // d2 >= d1.
    can.d3 = p3.d[axis];
    double rest[2];
    int idx = 0;
    for (int i = 0; i < 3; ++i)
        if (i != axis) rest[idx++] = p3.d[i];
    can.d1 = std::min(rest[0], rest[1]);
    can.d2 = std::max(rest[0], rest[1]);
    if (can.is_d2_covariant) {
        can.c3 = std::abs(c[axis]);
    } else {
        // not axis aligned; record the full displacement magnitude
        can.c3 = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    }
    return can;
}

bool verify_commutativity_preserving(const ChannelSpec& spec) {
    validate(spec);
    CMat e0(spec.d), e1(spec.d);
    e0(0, 0) = 1.0;
    e1(1 % spec.d, 1 % spec.d) = 1.0;
    if (spec.d < 2) return true;
    const CMat a = apply(spec, e0);
    const CMat b = apply(spec, e1);
    return commutator(a, b).max_abs() <= 1e-10;
}

SpectralPairs spectral_pairs(const ChannelSpec& spec) {
    switch (spec.family) {
        case Family::erasure:
        case Family::depolarizing:
        case Family::cloning:
        case Family::transposition:
            break;
        default:
            throw std::invalid_argument(
                "spectral_pairs: family is not universally covariant");
    }
    if (!verify_commutativity_preserving(spec))
        throw std::invalid_argument("spectral_pairs: channel does not preserve commutativity");

    CMat e0(spec.d), e1(spec.d);
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    const CMat a = apply(spec, e0);
    const CMat b = apply(spec, e1);

    // Simultaneous eigenbasis: diagonalize a generic real combination and
    // read both quadratic forms on its eigenvectors. Irrational mixing
    // coefficients avoid accidental degeneracy; fall back to another mix if
    // residuals show the basis failed to split a degenerate block.
    const double mixers[] = {std::sqrt(2.0), 3.14159265358979, 1.73205080756888, 0.5};
    const std::size_t n = a.dim();
    for (double t : mixers) {
        const CMat combo = a + cplx(t) * b;
        const EigenSystem es = herm_eig(combo);
        // quadratic forms and off-diagonal residuals
        bool ok = true;
        std::vector<double> av(n), bv(n);
        const CMat va = a * es.vectors, vb = b * es.vectors;
        for (std::size_t k = 0; k < n && ok; ++k) {
            cplx ak = 0.0, bk = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                ak += std::conj(es.vectors(i, k)) * va(i, k);
                bk += std::conj(es.vectors(i, k)) * vb(i, k);
            }
            av[k] = ak.real();
            bv[k] = bk.real();
            // column residual: A v_k must equal a_k v_k
            for (std::size_t i = 0; i < n; ++i) {
                if (std::abs(va(i, k) - av[k] * es.vectors(i, k)) > 1e-8 ||
                    std::abs(vb(i, k) - bv[k] * es.vectors(i, k)) > 1e-8) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;

        SpectralPairs sp;
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            const double ai = 0.5 * (av[i] + bv[i]), aj = 0.5 * (av[j] + bv[j]);
            if (ai != aj) return ai > aj;
            return 0.5 * (av[i] - bv[i]) > 0.5 * (av[j] - bv[j]);
        });
        for (std::size_t k : order) {
            sp.alphas.push_back(0.5 * (av[k] + bv[k]));
            sp.betas.push_back(0.5 * (av[k] - bv[k]));
        }
        return sp;
    }
    throw std::runtime_error("spectral_pairs: failed to find a common eigenbasis");
}

}  // namespace chs
