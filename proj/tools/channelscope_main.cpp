// channelscope: decide whether an observed binary correlation is compatible
// with a claimed quantum channel, and emit the achievable regions.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "channelscope/channels_json.hpp"
#include "channelscope/compat.hpp"
#include "channelscope/geometry.hpp"
#include "channelscope/oracle.hpp"
#include "channelscope/polytope.hpp"

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_signed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.17g", v);
    return buf;
}

chs::ChannelSpec load_channel(const std::string& arg) {
    std::string text = arg;
    if (arg.find('{') == std::string::npos) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open channel file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return chs::parse_spec(text);
}

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

chs::Correlation correlation_from_flags(const std::string& p_flag, const std::string& xy_flag) {
    if (!p_flag.empty()) {
        const auto v = parse_csv_doubles(p_flag);
        if (v.size() != 4) throw std::invalid_argument("--p expects p11,p12,p21,p22");
        chs::Correlation p(2, 2, {v[0], v[1], v[2], v[3]});
        p.validate();
        return p;
    }
    if (!xy_flag.empty()) {
        const auto v = parse_csv_doubles(xy_flag);
        if (v.size() != 2) throw std::invalid_argument("--xy expects x,y");
        return chs::from_cartesian({v[0], v[1]});
    }
    throw std::invalid_argument("a correlation is required (--p or --xy)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

std::string points_svg(const std::vector<std::pair<double, double>>& pts) {
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n"
        "<rect width=\"1\" height=\"1\" fill=\"white\"/>\n"
        "<path d=\"M 0.5 0 L 1 0.5 L 0.5 1 L 0 0.5 Z\" fill=\"none\" "
        "stroke=\"#999\" stroke-width=\"0.003\"/>\n";
    char buf[128];
    for (const auto& [x, y] : pts) {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.002\" fill=\"#36c\"/>\n",
                      (x + 1.0) / 2.0, (1.0 - y) / 2.0);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"device-independent compatibility tests for quantum channels"};
    app.require_subcommand(1);

    std::string channel_arg, channel_b_arg, p_flag, xy_flag, out_path;
    std::string format = "csv", sign_flag = "+", mode_flag = "random";
    double omega = 0.0;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    int resolution = 400;
    std::size_t poly_m = 2, poly_n = 2, poly_d = 2;

    auto* check = app.add_subcommand("check", "membership of a correlation in a channel's region");
    check->add_option("--channel", channel_arg)->required();
    check->add_option("--p", p_flag, "p11,p12,p21,p22 (rows = inputs)");
    check->add_option("--xy", xy_flag, "Cartesian x,y");

    auto* thr = app.add_subcommand("threshold", "witness threshold W(X, w_sign(omega))");
    thr->add_option("--channel", channel_arg)->required();
    thr->add_option("--omega", omega)->check(CLI::Range(-1.0, 1.0))->required();
    thr->add_option("--sign", sign_flag)->check(CLI::IsMember({"+", "-"}));

    auto* region = app.add_subcommand("region", "emit the region boundary");
    region->add_option("--channel", channel_arg)->required();
    region->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
    region->add_option("--out", out_path);
    region->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));

    auto* oracle = app.add_subcommand("oracle", "sample achievable correlations");
    oracle->add_option("--channel", channel_arg)->required();
    oracle->add_option("--samples", samples)->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed);
    oracle->add_option("--mode", mode_flag)->check(CLI::IsMember({"random", "boundary"}));
    oracle->add_option("--out", out_path);
    oracle->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));

    auto* poly = app.add_subcommand("polytope", "classical m,n,d polytope membership");
    poly->add_option("--p", p_flag, "row-major entries, m*n values")->required();
    poly->add_option("--m", poly_m)->check(CLI::PositiveNumber);
    poly->add_option("--n", poly_n)->check(CLI::PositiveNumber);
    poly->add_option("--d", poly_d)->check(CLI::PositiveNumber);

    auto* cmp = app.add_subcommand("compare", "region inclusion (channel preorder)");
    cmp->add_option("--channel", channel_arg, "channel A")->required();
    cmp->add_option("--channel-b", channel_b_arg, "channel B")->required();
    cmp->add_option("--resolution", resolution)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            const auto spec = load_channel(channel_arg);
            const auto p = correlation_from_flags(p_flag, xy_flag);
            const auto v = chs::check_membership(spec, p);
            std::cout << (v.compatible ? "compatible" : "incompatible") << "\n"
                      << "margin " << fmt_signed(v.margin) << "\n"
                      << "worst_witness "
                      << (v.worst_witness.sign == chs::Witness::Sign::plus ? "+" : "-")
                      << " omega " << fmt(v.worst_witness.omega) << "\n";
            return v.compatible ? 0 : 1;
        }
        if (thr->parsed()) {
            const auto spec = load_channel(channel_arg);
            const chs::Witness w{sign_flag == "+" ? chs::Witness::Sign::plus
                                                  : chs::Witness::Sign::minus,
                                 omega};
            std::cout << "threshold " << fmt(chs::threshold_for(spec, w)) << "\n";
            switch (spec.family) {
                case chs::Family::erasure:
                case chs::Family::depolarizing:
                case chs::Family::cloning:
                case chs::Family::transposition:
                    std::cout << "encoding any pair of orthonormal pure states\n";
                    break;
                default:
                    if (chs::is_qubit(spec)) {
                        const auto r = chs::qubit_threshold(
                            chs::canonicalize_d2(chs::to_affine(spec)), w);
                        if (r.optimal_bloch)
                            std::cout << "encoding bloch " << fmt((*r.optimal_bloch)[0]) << ","
                                      << fmt((*r.optimal_bloch)[1]) << ","
                                      << fmt((*r.optimal_bloch)[2]) << "\n";
                    }
                    break;
            }
            return 0;
        }
        if (region->parsed()) {
            const auto spec = load_channel(channel_arg);
            const auto lines = chs::region_boundary(spec, resolution);
            write_output(out_path, format == "svg" ? chs::boundary_to_svg(lines)
                                                   : chs::boundary_to_csv(lines));
            return 0;
        }
        if (oracle->parsed()) {
            const auto spec = load_channel(channel_arg);
            const auto cloud = chs::sample_correlations(
                spec, samples, seed,
                mode_flag == "boundary" ? chs::SampleMode::boundary : chs::SampleMode::random);
            write_output(out_path, format == "svg" ? points_svg(cloud.points)
                                                   : chs::cloud_to_csv(cloud));
            return 0;
        }
        if (poly->parsed()) {
            const auto v = parse_csv_doubles(p_flag);
            if (v.size() != poly_m * poly_n)
                throw std::invalid_argument("--p expects m*n values");
            chs::Correlation p(poly_m, poly_n, v);
            p.validate();
            const auto res = chs::hull_membership(chs::fw_vertices(poly_m, poly_n, poly_d), p);
            if (res.inside) {
                std::cout << "inside\nweights";
                for (double w : res.weights) std::cout << " " << fmt(w);
                std::cout << "\n";
                return 0;
            }
            std::cout << "outside\nseparation " << fmt_signed(res.separation) << "\nwitness";
            for (double w : res.witness) std::cout << " " << fmt(w);
            std::cout << "\n";
            return 1;
        }
        if (cmp->parsed()) {
            const auto a = load_channel(channel_arg);
            const auto b = load_channel(channel_b_arg);
            const bool a_over_b = chs::region_inclusion(a, b, resolution);
            const bool b_over_a = chs::region_inclusion(b, a, resolution);
            std::cout << "A_contains_B " << (a_over_b ? "true" : "false") << "\n"
                      << "B_contains_A " << (b_over_a ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
