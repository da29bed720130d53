#include "channelscope/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "channelscope/parallel.hpp"
#include "channelscope/witness.hpp"

namespace chs {

namespace {

Polyline square_outline() {
    return {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}};
}

// |y| <= t clipped to the square: hexagon for t < 1, the square at t = 1.
Polyline band_outline(double t) {
    if (t >= 1.0) return square_outline();
    if (t <= 0.0) return {{-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};
    return {{1.0, 0.0},  {1.0 - t, t},  {-(1.0 - t), t},  {-1.0, 0.0},
            {-(1.0 - t), -t}, {1.0 - t, -t}, {1.0, 0.0}};
}

// |y| <= slope * (1 - |x|): rhombus with apex (0, slope).
Polyline rhombus_outline(double slope) {
    if (slope <= 0.0) return {{-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};
    return {{1.0, 0.0}, {0.0, slope}, {-1.0, 0.0}, {0.0, -slope}, {1.0, 0.0}};
}

// |y| <= cap and |y| <= slope * (1 - |x|): flat-topped wedge when cap < slope.
Polyline wedge_outline(double cap, double slope) {
    if (cap >= slope) return rhombus_outline(slope);
    if (cap <= 0.0) return {{-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};
    const double xs = 1.0 - cap / slope;
    return {{1.0, 0.0}, {xs, cap},  {-xs, cap},  {-1.0, 0.0},
            {-xs, -cap}, {xs, -cap}, {1.0, 0.0}};
}

double pauli_band(const ChannelSpec& spec) {
    double t = 0.0;
    for (int k = 1; k <= 3; ++k)
        t = std::max(t, std::abs(2.0 * (spec.lambda[0] + spec.lambda[k]) - 1.0));
    return t;
}

// Smallest root of the damping-parameter quadratic at Cartesian (x, y).
double amp_damp_lambda_minus(double x, double y) {
    const double diag = std::sqrt(std::max((1.0 + y) * (1.0 + y) - x * x, 0.0)) / 2.0;
    const double anti = std::sqrt(std::max((1.0 - y) * (1.0 - y) - x * x, 0.0)) / 2.0;
    return (diag - anti) * (diag - anti);
}

Polyline amp_damp_outline(double lambda, int resolution) {
    if (lambda >= 1.0) return square_outline();
    if (lambda <= 0.0) return {{-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};
    // Upper boundary: lambda_minus(x, y) = lambda for |x| <= 1 - lambda,
    // joined to the square edges down to (+-1, 0). lambda_minus is
    // increasing in y >= 0, so bisection is safe.
    const int steps = std::max(resolution, 16);
    const double xmax = 1.0 - lambda;
    std::vector<double> xs(steps + 1), ys(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const double x = -xmax + 2.0 * xmax * i / steps;
        double lo = 0.0, hi = 1.0 - std::abs(x);
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (amp_damp_lambda_minus(x, mid) <= lambda ? lo : hi) = mid;
        }
        xs[i] = x;
        ys[i] = 0.5 * (lo + hi);
    }
    Polyline line;
    line.push_back({1.0, 0.0});
    for (int i = steps; i >= 0; --i) line.push_back({xs[i], ys[i]});
    line.push_back({-1.0, 0.0});
    for (int i = 0; i <= steps; ++i) line.push_back({xs[i], -ys[i]});
    line.push_back({1.0, 0.0});
    return line;
}

// Marching squares over the membership indicator for qubit channels with
// the dihedral canonical form.
std::vector<Polyline> traced_boundary(const D2Canonical& can, int resolution) {
    if (!can.is_d2_covariant)
        throw std::invalid_argument("region_boundary: channel has no dihedral axis");
    const int cells = std::max(2 * resolution, 16);
    const double h = 2.0 / cells;

    auto compatible = [&](double x, double y) {
        if (std::abs(x + y) > 1.0 || std::abs(x - y) > 1.0) return false;
        for (double omega : critical_omegas(can, x)) {
            const double m = 2.0 * qubit_threshold(can, {Witness::Sign::plus, omega}).value - 1.0;
            if (std::abs(y + omega * x) > m + 1e-12) return false;
        }
        return true;
    };

    std::vector<std::vector<char>> inside(cells + 1, std::vector<char>(cells + 1, 0));
    parallel_chunks(static_cast<std::size_t>(cells) + 1, [&](std::size_t row) {
        const double y = -1.0 + h * static_cast<double>(row);
        for (int i = 0; i <= cells; ++i)
            inside[row][i] = compatible(-1.0 + h * i, y) ? 1 : 0;
    });

    // segment endpoints on cell-edge midpoints, keyed on a half-step lattice
    using Key = std::pair<long long, long long>;
    auto key_of = [&](CartesianPoint p) {
        return Key{std::llround((p.x + 1.0) / h * 2.0), std::llround((p.y + 1.0) / h * 2.0)};
    };
    std::vector<std::pair<CartesianPoint, CartesianPoint>> segments;
    for (int j = 0; j < cells; ++j) {
        const double y0 = -1.0 + h * j;
        for (int i = 0; i < cells; ++i) {
            const double x0 = -1.0 + h * i;
            const int m = (inside[j][i] ? 1 : 0) | (inside[j][i + 1] ? 2 : 0) |
                          (inside[j + 1][i + 1] ? 4 : 0) | (inside[j + 1][i] ? 8 : 0);
            if (m == 0 || m == 15) continue;
            const CartesianPoint e0{x0 + h / 2.0, y0};          // bottom
            const CartesianPoint e1{x0 + h, y0 + h / 2.0};      // right
            const CartesianPoint e2{x0 + h / 2.0, y0 + h};      // top
            const CartesianPoint e3{x0, y0 + h / 2.0};          // left
            switch (m) {
                case 1: case 14: segments.push_back({e3, e0}); break;
                case 2: case 13: segments.push_back({e0, e1}); break;
                case 4: case 11: segments.push_back({e1, e2}); break;
                case 8: case 7:  segments.push_back({e2, e3}); break;
                case 3: case 12: segments.push_back({e3, e1}); break;
                case 6: case 9:  segments.push_back({e0, e2}); break;
                case 5:  segments.push_back({e3, e0}); segments.push_back({e1, e2}); break;
                case 10: segments.push_back({e0, e1}); segments.push_back({e2, e3}); break;
                default: break;
            }
        }
    }

    std::multimap<Key, std::size_t> at;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        at.emplace(key_of(segments[s].first), s);
        at.emplace(key_of(segments[s].second), s);
    }
    std::vector<char> used(segments.size(), 0);
    std::vector<Polyline> lines;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s]) continue;
        used[s] = 1;
        Polyline line{segments[s].first, segments[s].second};
        while (true) {
            const Key k = key_of(line.back());
            std::size_t next = segments.size();
            for (auto [it, end] = at.equal_range(k); it != end; ++it)
                if (!used[it->second]) {
                    next = it->second;
                    break;
                }
            if (next == segments.size()) break;
            used[next] = 1;
            const auto& [a, b] = segments[next];
            line.push_back(key_of(a) == k ? b : a);
            if (key_of(line.back()) == key_of(line.front())) {
                line.back() = line.front();
                break;
            }
        }
        if (key_of(line.back()) != key_of(line.front())) line.push_back(line.front());
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

CartesianPoint to_cartesian(const Correlation& p) {
    p.validate();
    if (!p.is_binary()) throw std::invalid_argument("to_cartesian: correlation not 2x2");
    return {p(0, 0) + p(1, 0) - 1.0, p(0, 0) - p(1, 0)};
}

Correlation from_cartesian(CartesianPoint pt) {
    if (std::abs(pt.x + pt.y) > 1.0 + 1e-12 || std::abs(pt.x - pt.y) > 1.0 + 1e-12)
        throw std::invalid_argument("from_cartesian: point outside the correlation square");
    Correlation p(2, 2);
    p(0, 0) = std::clamp((1.0 + pt.x + pt.y) / 2.0, 0.0, 1.0);
    p(0, 1) = 1.0 - p(0, 0);
    p(1, 0) = std::clamp((1.0 + pt.x - pt.y) / 2.0, 0.0, 1.0);
    p(1, 1) = 1.0 - p(1, 0);
    return p;
}

std::array<CartesianPoint, 4> symmetry_orbit(CartesianPoint pt) {
    return {CartesianPoint{pt.x, pt.y}, CartesianPoint{pt.x, -pt.y},
            CartesianPoint{-pt.x, pt.y}, CartesianPoint{-pt.x, -pt.y}};
}

std::vector<Polyline> region_boundary(const ChannelSpec& spec, int resolution) {
    validate(spec);
    if (resolution < 2) throw std::invalid_argument("region_boundary: resolution must be >= 2");
    const double dd = static_cast<double>(spec.d);
    switch (spec.family) {
        case Family::pauli:
            return {rhombus_outline(pauli_band(spec))};
        case Family::amp_damp:
            return {amp_damp_outline(spec.lambda0(), resolution)};
        case Family::erasure:
            return {band_outline(spec.lambda0())};
        case Family::cloning:
            return {band_outline(dd / (dd + 1.0))};
        case Family::depolarizing: {
            const double l = spec.lambda0();
            return {wedge_outline(l, dd * l / (2.0 - 2.0 * l + dd * l))};
        }
        case Family::transposition:
            return {wedge_outline(1.0 / (dd + 1.0), 1.0 / 3.0)};
        case Family::unitary:
        case Family::dephasing:
            return {square_outline()};
        case Family::trace_class:
            return {Polyline{{-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}}};
        case Family::custom_kraus:
        case Family::custom_affine: {
            if (!is_qubit(spec))
                throw std::invalid_argument("region_boundary: no membership fallback for d > 2");
            return traced_boundary(canonicalize_d2(to_affine(spec)), resolution);
        }
    }
    throw std::invalid_argument("region_boundary: unsupported family");
}

std::string boundary_to_csv(const std::vector<Polyline>& lines) {
    std::string out;
    char buf[80];
    bool first = true;
    for (const auto& line : lines) {
        if (!first) out += "\n";
        first = false;
        for (const auto& pt : line) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pt.x, pt.y);
            out += buf;
        }
    }
    return out;
}

std::string boundary_to_svg(const std::vector<Polyline>& lines) {
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n"
        "<rect width=\"1\" height=\"1\" fill=\"white\"/>\n"
        "<path d=\"M 0.5 0 L 1 0.5 L 0.5 1 L 0 0.5 Z\" fill=\"none\" "
        "stroke=\"#999\" stroke-width=\"0.003\"/>\n";
    char buf[96];
    for (const auto& line : lines) {
        out += "<path d=\"";
        for (std::size_t i = 0; i < line.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s%.6f %.6f", i == 0 ? "M " : " L ",
                          (line[i].x + 1.0) / 2.0, (1.0 - line[i].y) / 2.0);
            out += buf;
        }
        out += "\" fill=\"none\" stroke=\"#c90\" stroke-width=\"0.004\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace chs
