#include "channelscope/compat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chs {

Correlation::Correlation(std::size_t m, std::size_t n)
    : m_(m), n_(n), p_(m * n, 1.0 / static_cast<double>(n)) {
    if (m == 0 || n == 0) throw std::invalid_argument("correlation: empty shape");
}

Correlation::Correlation(std::size_t m, std::size_t n, std::vector<double> entries)
    : m_(m), n_(n), p_(std::move(entries)) {
    if (m == 0 || n == 0) throw std::invalid_argument("correlation: empty shape");
    if (p_.size() != m * n) throw std::invalid_argument("correlation: entry count mismatch");
    validate();
}

void Correlation::validate() const {
    for (std::size_t i = 0; i < m_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            const double v = (*this)(i, j);
            if (v < -1e-12 || v > 1.0 + 1e-12) {
                std::ostringstream os;
                os << "correlation: entry (" << i << "," << j << ") = " << v
                   << " outside [0,1]";
                throw std::invalid_argument(os.str());
            }
            row += v;
        }
        if (std::abs(row - 1.0) > 1e-10) {
            std::ostringstream os;
            os << "correlation: row " << i << " sums to " << row;
            throw std::invalid_argument(os.str());
        }
    }
}

std::array<std::array<double, 2>, 2> Correlation::as_2x2() const {
    if (!is_binary()) throw std::invalid_argument("correlation is not 2x2");
    std::array<std::array<double, 2>, 2> a;
    a[0] = {(*this)(0, 0), (*this)(0, 1)};
    a[1] = {(*this)(1, 0), (*this)(1, 1)};
    return a;
}

double Correlation::cart_x() const {
    if (!is_binary()) throw std::invalid_argument("correlation is not 2x2");
    return (*this)(0, 0) + (*this)(1, 0) - 1.0;
}

double Correlation::cart_y() const {
    if (!is_binary()) throw std::invalid_argument("correlation is not 2x2");
    return (*this)(0, 0) - (*this)(1, 0);
}

namespace {

Verdict scan_witnesses(const Correlation& p, const std::vector<double>& omegas,
                       const std::function<double(const Witness&)>& threshold) {
    const auto pm = p.as_2x2();
    Verdict v;
    bool first = true;
    for (double omega : omegas) {
        for (auto sign : {Witness::Sign::plus, Witness::Sign::minus}) {
            const Witness w{sign, omega};
            const double margin = witness_value(w, pm) - threshold(w);
            if (first || margin > v.margin) {
                v.margin = margin;
                v.worst_witness = w;
                first = false;
            }
        }
    }
    v.compatible = v.margin <= kMarginTol;
    return v;
}

double table1_margin(const ChannelSpec& spec, const Correlation& p) {
    const double x = p.cart_x();  // p_{1|1} - p_{2|2}
    const double y = p.cart_y();  // p_{1|1} - p_{1|2}
    switch (spec.family) {
        case Family::pauli: {
            double t = 0.0;
            for (int k = 1; k <= 3; ++k)
                t = std::max(t, std::abs(2.0 * (spec.lambda[0] + spec.lambda[k]) - 1.0));
            return std::abs(y) - t * (1.0 - std::abs(x));
        }
        case Family::amp_damp: {
            // products clamped: validated entries may still be -1e-12-ish
            const double a = std::sqrt(std::max(p(1, 0) * p(0, 1), 0.0));  // p_{1|2} p_{2|1}
            const double b = std::sqrt(std::max(p(0, 0) * p(1, 1), 0.0));  // p_{1|1} p_{2|2}
            return (a - b) * (a - b) - spec.lambda0();
        }
        case Family::erasure:
            return std::abs(y) - spec.lambda0();
        case Family::depolarizing: {
            const double l = spec.lambda0();
            const double t = spec.d * l / (2.0 - 2.0 * l + spec.d * l);
            return std::max(std::abs(y) - l, std::abs(y) - t * (1.0 - std::abs(x)));
        }
        case Family::cloning:
            return std::abs(y) - static_cast<double>(spec.d) / (spec.d + 1.0);
        case Family::transposition:
            return std::max(std::abs(y) - 1.0 / (spec.d + 1.0),
                            std::abs(y) - (1.0 - std::abs(x)) / 3.0);
        default:
            throw std::invalid_argument("check_closed_form: unsupported family " +
                                        family_name(spec.family));
    }
}

bool is_covariant_family(Family f) {
    return f == Family::erasure || f == Family::depolarizing || f == Family::cloning ||
           f == Family::transposition;
}

}  // namespace

Verdict check_qubit_d2(const D2Canonical& can, const Correlation& p) {
    p.validate();
    const auto omegas = critical_omegas(can, p.cart_x());
    return scan_witnesses(p, omegas, [&](const Witness& w) {
        return qubit_threshold(can, w).value;
    });
}

Verdict check_covariant(const SpectralPairs& sp, const Correlation& p) {
    p.validate();
    std::vector<double> omegas = {0.0, 1.0, -1.0};
    for (double g : gamma_kinks(sp)) {
        omegas.push_back(g);
        omegas.push_back(-g);
    }
    return scan_witnesses(p, omegas, [&](const Witness& w) {
        return covariant_threshold(sp, w).value;
    });
}

Verdict check_closed_form(const ChannelSpec& spec, const Correlation& p) {
    validate(spec);
    p.validate();
    Verdict v;
    v.margin = table1_margin(spec, p);
    v.compatible = v.margin <= kMarginTol;
    v.worst_witness = Witness{p.cart_y() >= 0.0 ? Witness::Sign::plus : Witness::Sign::minus, 0.0};
    return v;
}

double threshold_for(const ChannelSpec& spec, const Witness& w) {
    switch (spec.family) {
        case Family::trace_class:
            return 0.5 * (1.0 + std::abs(w.omega));
        case Family::unitary:
        case Family::dephasing:
            if (spec.d == 1) return 0.5 * (1.0 + std::abs(w.omega));
            return 1.0;
        case Family::erasure:
        case Family::depolarizing:
        case Family::cloning:
        case Family::transposition:
            return covariant_threshold(spectral_pairs(spec), w).value;
        default: {
            if (!is_qubit(spec))
                throw std::invalid_argument("threshold_for: no closed form for " +
                                            family_name(spec.family) + " at d = " +
                                            std::to_string(spec.d));
            const D2Canonical can = canonicalize_d2(to_affine(spec));
            if (!can.is_d2_covariant)
                throw std::invalid_argument(
                    "threshold_for: qubit channel is not D2-covariant");
            return qubit_threshold(can, w).value;
        }
    }
}

Verdict max_violation(const ChannelSpec& spec, const Correlation& p, int omega_grid) {
    validate(spec);
    p.validate();
    if (omega_grid < 2) omega_grid = 2;

    std::vector<double> omegas;
    omegas.reserve(omega_grid + 16);
    for (int i = 0; i < omega_grid; ++i)
        omegas.push_back(-1.0 + 2.0 * i / (omega_grid - 1.0));

    std::function<double(const Witness&)> threshold;
    switch (spec.family) {
        case Family::trace_class:
            threshold = [](const Witness& w) { return 0.5 * (1.0 + std::abs(w.omega)); };
            break;
        case Family::unitary:
        case Family::dephasing:
            if (spec.d == 1)
                threshold = [](const Witness& w) { return 0.5 * (1.0 + std::abs(w.omega)); };
            else
                threshold = [](const Witness&) { return 1.0; };
            break;
        default: {
            if (is_covariant_family(spec.family)) {
                const SpectralPairs sp = spectral_pairs(spec);
                for (double g : gamma_kinks(sp)) {
                    omegas.push_back(g);
                    omegas.push_back(-g);
                }
                threshold = [sp](const Witness& w) {
                    return covariant_threshold(sp, w).value;
                };
            } else {
                if (!is_qubit(spec))
                    throw std::invalid_argument("max_violation: unsupported family " +
                                                family_name(spec.family));
                const D2Canonical can = canonicalize_d2(to_affine(spec));
                if (!can.is_d2_covariant)
                    throw std::invalid_argument(
                        "max_violation: qubit channel is not D2-covariant");
                for (double o : critical_omegas(can, p.cart_x())) omegas.push_back(o);
                threshold = [can](const Witness& w) { return qubit_threshold(can, w).value; };
            }
        }
    }
    return scan_witnesses(p, omegas, threshold);
}

Verdict check_membership(const ChannelSpec& spec, const Correlation& p) {
    validate(spec);
    p.validate();
    switch (spec.family) {
        case Family::pauli:
        case Family::amp_damp:
        case Family::erasure:
        case Family::depolarizing:
        case Family::cloning:
        case Family::transposition:
            return check_closed_form(spec, p);
        case Family::trace_class: {
            // Segment y = 0: the worst witness is w at omega 0.
            Verdict v;
            v.margin = 0.5 * std::abs(p.cart_y());
            v.compatible = v.margin <= kMarginTol;
            v.worst_witness =
                Witness{p.cart_y() >= 0.0 ? Witness::Sign::plus : Witness::Sign::minus, 0.0};
            return v;
        }
        case Family::unitary:
        case Family::dephasing: {
            if (spec.d == 1) {
                Verdict v;
                v.margin = 0.5 * std::abs(p.cart_y());
                v.compatible = v.margin <= kMarginTol;
                v.worst_witness = Witness{Witness::Sign::plus, 0.0};
                return v;
            }
            // Full square: max over omega of p.w - 1.
            Verdict v;
            v.margin = 0.5 * (std::abs(p.cart_x()) + std::abs(p.cart_y()) - 1.0);
            v.compatible = v.margin <= kMarginTol;
            v.worst_witness = Witness{Witness::Sign::plus, p.cart_x() >= 0.0 ? 1.0 : -1.0};
            return v;
        }
        default: {
            if (!is_qubit(spec))
                throw std::invalid_argument("check_membership: unsupported family " +
                                            family_name(spec.family));
            const D2Canonical can = canonicalize_d2(to_affine(spec));
            if (!can.is_d2_covariant)
                throw std::invalid_argument(
                    "check_membership: qubit channel is not D2-covariant");
            return check_qubit_d2(can, p);
        }
    }
}

bool region_inclusion(const ChannelSpec& a, const ChannelSpec& b, int grid) {
    if (grid < 2) grid = 2;
    for (int i = 0; i < grid; ++i) {
        const double x = -1.0 + 2.0 * i / (grid - 1.0);
        for (int j = 0; j < grid; ++j) {
            const double y = -1.0 + 2.0 * j / (grid - 1.0);
            if (std::abs(x) + std::abs(y) > 1.0 + 1e-12) continue;
            Correlation p(2, 2,
                          {0.5 * (1.0 + x + y), 0.5 * (1.0 - x - y),
                           0.5 * (1.0 + x - y), 0.5 * (1.0 - x + y)});
            if (check_membership(b, p).compatible && !check_membership(a, p).compatible)
                return false;
        }
    }
    return true;
}

}  // namespace chs
