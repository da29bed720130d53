#include "channelscope/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "channelscope/parallel.hpp"

namespace chs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

std::vector<cplx> random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(dim);
    double n2 = 0.0;
    for (auto& x : v) {
        x = cplx(g(rng), g(rng));
        n2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v) x *= inv;
    return v;
}

CMat projector_on_positive_part(const CMat& h) {
    const EigenSystem es = herm_eig(h);
    CMat p(h.dim());
    for (std::size_t k = 0; k < es.values.size(); ++k) {
        if (es.values[k] <= 0.0) continue;
        for (std::size_t i = 0; i < h.dim(); ++i)
            for (std::size_t j = 0; j < h.dim(); ++j)
                p(i, j) += es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    return p;
}

double real_trace_product(const CMat& a, const CMat& b) {
    // tr(a b) for Hermitian a, b
    cplx t = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) t += a(i, k) * b(k, i);
    return t.real();
}

// omega values visited in boundary mode: an even sweep plus the analytic
// kinks/critical points of the channel's threshold curve.
std::vector<double> boundary_omegas(const ChannelSpec& spec) {
    std::vector<double> omegas;
    const int n = 401;
    omegas.reserve(n + 8);
    for (int i = 0; i < n; ++i) omegas.push_back(-1.0 + 2.0 * i / (n - 1.0));
    switch (spec.family) {
        case Family::erasure:
        case Family::depolarizing:
        case Family::cloning:
        case Family::transposition:
            for (double g : gamma_kinks(spectral_pairs(spec))) {
                omegas.push_back(g);
                omegas.push_back(-g);
            }
            break;
        default:
            if (is_qubit(spec)) {
                const D2Canonical can = canonicalize_d2(to_affine(spec));
                if (can.is_d2_covariant)
                    for (double o : critical_omegas(can, 0.0)) omegas.push_back(o);
            }
            break;
    }
    return omegas;
}

}  // namespace

CMat haar_unitary(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
    // Gram-Schmidt on columns
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < dim; ++i) dot += std::conj(m(i, k)) * m(i, j);
            for (std::size_t i = 0; i < dim; ++i) m(i, j) -= dot * m(i, k);
        }
        double n2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) n2 += std::norm(m(i, j));
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) *= inv;
    }
    return m;
}

SampleCloud sample_correlations(const ChannelSpec& spec, std::size_t count,
                                std::uint64_t seed, SampleMode mode) {
    validate(spec);
    if (count < 1) throw std::invalid_argument("sample_correlations: count must be >= 1");
    const CompiledChannel ch(spec);
    const std::size_t d = spec.d;

    std::vector<double> omegas;
    if (mode == SampleMode::boundary) omegas = boundary_omegas(spec);

    SampleCloud cloud;
    cloud.seed = seed;
    cloud.count = count;
    cloud.points.resize(count);

    const std::size_t chunk_size = 1024;
    const std::size_t chunks = (count + chunk_size - 1) / chunk_size;

    parallel_chunks(chunks, [&](std::size_t c) {
        std::mt19937_64 rng(sub_seed(seed, c));
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const std::size_t begin = c * chunk_size;
        const std::size_t end = std::min(begin + chunk_size, count);
        for (std::size_t s = begin; s < end; ++s) {
            CMat rho0(d), rho1(d), povm0(output_dim(spec));
            if (mode == SampleMode::random) {
                const auto v0 = random_unit_vector(d, rng);
                const auto v1 = random_unit_vector(d, rng);
                rho0 = outer(v0, v0);
                rho1 = outer(v1, v1);
                const std::size_t od = output_dim(spec);
                const CMat u = haar_unitary(od, rng);
                CMat diag(od);
                for (std::size_t i = 0; i < od; ++i) diag(i, i) = u01(rng);
                povm0 = u * diag * u.adjoint();
                const CMat x0 = ch.apply_herm(rho0);
                const CMat x1 = ch.apply_herm(rho1);
                const double p00 = real_trace_product(x0, povm0);
                const double p10 = real_trace_product(x1, povm0);
                cloud.points[s] = {p00 + p10 - 1.0, p00 - p10};
            } else {
                const CMat q = haar_unitary(d, rng);
                std::vector<cplx> phi0(d), phi1(d);
                for (std::size_t i = 0; i < d; ++i) {
                    phi0[i] = q(i, 0);
                    phi1[i] = q(i, 1 % d);
                }
                rho0 = outer(phi0, phi0);
                rho1 = outer(phi1, phi1);
                const double omega = omegas[s % omegas.size()];
                const CMat hel = ch.apply_herm(helstrom(omega, rho0, rho1));
                povm0 = projector_on_positive_part(hel);
                const double p00 = real_trace_product(ch.apply_herm(rho0), povm0);
                const double p10 = real_trace_product(ch.apply_herm(rho1), povm0);
                cloud.points[s] = {p00 + p10 - 1.0, p00 - p10};
            }
        }
    });
    return cloud;
}

std::string cloud_to_csv(const SampleCloud& cloud) {
    std::string out = "x,y\n";
    char buf[80];
    for (const auto& [x, y] : cloud.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, y);
        out += buf;
    }
    return out;
}

double numeric_threshold(const ChannelSpec& spec, const Witness& w, int restarts,
                         std::uint64_t seed) {
    validate(spec);
    if (restarts < 1) restarts = 1;
    const CompiledChannel ch(spec);
    const std::size_t d = spec.d;

    auto objective = [&](const CMat& frame) {
        std::vector<cplx> phi0(d), phi1(d);
        for (std::size_t i = 0; i < d; ++i) {
            phi0[i] = frame(i, 0);
            phi1[i] = frame(i, 1 % d);
        }
        const CMat hel = helstrom(w.omega, outer(phi0, phi0), outer(phi1, phi1));
        return 0.5 * (1.0 + trace_norm(ch.apply_herm(hel)));
    };

    double best = 0.5 * (1.0 + std::abs(w.omega));  // trivial guessing floor
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(sub_seed(seed, static_cast<std::uint64_t>(r)));
        std::normal_distribution<double> g(0.0, 1.0);
        // Probe widely first: the objective is flat wherever trivial guessing
        // wins, and a hill climb cannot leave that plateau on its own.
        CMat frame = CMat::identity(d);
        double f = objective(frame);
        for (int probe = 0; probe < 128; ++probe) {
            const CMat cand = haar_unitary(d, rng);
            const double fc = objective(cand);
            if (fc > f) {
                frame = cand;
                f = fc;
            }
        }
        double step = 0.5;
        for (int it = 0; it < 400 && step > 1e-12; ++it) {
            // random Hermitian direction, unit scale
            CMat h(d);
            for (std::size_t i = 0; i < d; ++i) {
                h(i, i) = g(rng);
                for (std::size_t j = i + 1; j < d; ++j) {
                    h(i, j) = cplx(g(rng), g(rng));
                    h(j, i) = std::conj(h(i, j));
                }
            }
            // exp(i step H) through the eigenbasis of H
            const EigenSystem es = herm_eig(h);
            CMat expm(d);
            for (std::size_t k = 0; k < d; ++k) {
                const cplx phase = std::exp(cplx(0.0, step * es.values[k]));
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        expm(i, j) += phase * es.vectors(i, k) * std::conj(es.vectors(j, k));
            }
            const CMat cand = expm * frame;
            const double fc = objective(cand);
            if (fc > f) {
                frame = cand;
                f = fc;
                step = std::min(step * 1.5, 1.0);
            } else {
                step *= 0.7;
            }
        }
        best = std::max(best, f);
    }
    return best;
}

double numeric_delta(const D2Canonical& can, double omega, int grid) {
    if (grid < 8) grid = 8;
    const double d2 = can.d2, d3 = can.d3, c3 = can.c3;
    auto f = [&](double z) {
        const double ell = (d3 > 0.0) ? 1.0 - z * z / (d3 * d3) : 1.0;
        return std::sqrt(std::max(d2 * d2 * ell, 0.0) + (z - omega * c3) * (z - omega * c3));
    };
    if (d3 <= 1e-300) return f(0.0);

    double bestz = -d3, bestf = f(-d3);
    for (int i = 0; i <= grid; ++i) {
        const double z = -d3 + 2.0 * d3 * i / grid;
        const double v = f(z);
        if (v > bestf) {
            bestf = v;
            bestz = z;
        }
    }
    // golden-section refinement around the best grid cell
    const double h = 2.0 * d3 / grid;
    double a = std::max(-d3, bestz - h), b = std::min(d3, bestz + h);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 90; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return std::max({bestf, f1, f2});
}

std::pair<double, double> damping_roots(const Correlation& p) {
    p.validate();
    if (!p.is_binary()) throw std::invalid_argument("damping_roots: correlation not 2x2");
    const double diag = std::sqrt(std::max(p(0, 0) * p(1, 1), 0.0));  // p_{1|1} p_{2|2}
    const double anti = std::sqrt(std::max(p(1, 0) * p(0, 1), 0.0));  // p_{1|2} p_{2|1}
    const double lm = (diag - anti) * (diag - anti);
    const double lp = (diag + anti) * (diag + anti);
    return {lm, lp};
}

}  // namespace chs
