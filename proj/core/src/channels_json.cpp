#include "channelscope/channels_json.hpp"

#include <stdexcept>

#include "json.hpp"

namespace chs {

namespace {

using nlohmann::json;

cplx parse_entry(const json& e, const std::string& where) {
    if (e.is_number()) return cplx(e.get<double>(), 0.0);
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        return cplx(e[0].get<double>(), e[1].get<double>());
    throw std::invalid_argument(where + ": entries must be numbers or [re,im] pairs");
}

CMat parse_matrix(const json& m, const std::string& where) {
    if (!m.is_array() || m.empty())
        throw std::invalid_argument(where + ": expected a nonempty array of rows");
    const std::size_t n = m.size();
    CMat out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i].is_array() || m[i].size() != n)
            throw std::invalid_argument(where + ": rows must all have length " +
                                        std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) out(i, j) = parse_entry(m[i][j], where);
    }
    return out;
}

}  // namespace

ChannelSpec parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("channel spec: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("channel spec: expected a JSON object");
    if (!j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("channel spec: missing string field 'family'");

    ChannelSpec spec;
    spec.family = family_from_name(j["family"].get<std::string>());

    if (j.contains("d")) {
        if (!j["d"].is_number_unsigned() || j["d"].get<std::size_t>() < 1)
            throw std::invalid_argument("channel spec: 'd' must be a positive integer");
        spec.d = j["d"].get<std::size_t>();
    }

    if (j.contains("lambda")) {
        const auto& l = j["lambda"];
        if (l.is_number()) {
            spec.lambda = {l.get<double>()};
        } else if (l.is_array()) {
            for (const auto& v : l) {
                if (!v.is_number())
                    throw std::invalid_argument("channel spec: 'lambda' entries must be numbers");
                spec.lambda.push_back(v.get<double>());
            }
        } else {
            throw std::invalid_argument("channel spec: 'lambda' must be a number or array");
        }
    }

    if (j.contains("fixed_state")) {
        if (!j["fixed_state"].is_array())
            throw std::invalid_argument("channel spec: 'fixed_state' must be an array");
        for (const auto& e : j["fixed_state"])
            spec.fixed_state.push_back(parse_entry(e, "fixed_state"));
    }

    if (j.contains("kraus")) {
        if (!j["kraus"].is_array())
            throw std::invalid_argument("channel spec: 'kraus' must be an array of matrices");
        for (const auto& m : j["kraus"]) spec.kraus.push_back(parse_matrix(m, "kraus"));
    }

    if (j.contains("A") || j.contains("b")) {
        if (!j.contains("A") || !j.contains("b"))
            throw std::invalid_argument("channel spec: custom_affine needs both 'A' and 'b'");
        const auto& a = j["A"];
        const auto& b = j["b"];
        if (!a.is_array() || a.size() != 3 || !b.is_array() || b.size() != 3)
            throw std::invalid_argument("channel spec: 'A' must be 3x3 and 'b' length 3");
        QubitAffine aff{};
        for (int i = 0; i < 3; ++i) {
            if (!a[i].is_array() || a[i].size() != 3)
                throw std::invalid_argument("channel spec: 'A' must be 3x3");
            for (int k = 0; k < 3; ++k) {
                if (!a[i][k].is_number() )
                    throw std::invalid_argument("channel spec: 'A' entries must be numbers");
                aff.a[i][k] = a[i][k].get<double>();
            }
            if (!b[i].is_number())
                throw std::invalid_argument("channel spec: 'b' entries must be numbers");
            aff.b[i] = b[i].get<double>();
        }
        spec.affine = aff;
    }

    validate(spec);
    return spec;
}

std::string spec_to_json(const ChannelSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    j["d"] = spec.d;
    if (!spec.lambda.empty()) {
        if (spec.lambda.size() == 1)
            j["lambda"] = spec.lambda[0];
        else
            j["lambda"] = spec.lambda;
    }
    if (!spec.fixed_state.empty()) {
        json fs = json::array();
        for (const auto& e : spec.fixed_state) fs.push_back({e.real(), e.imag()});
        j["fixed_state"] = fs;
    }
    if (!spec.kraus.empty()) {
        json ks = json::array();
        for (const auto& k : spec.kraus) {
            json m = json::array();
            for (std::size_t i = 0; i < k.dim(); ++i) {
                json row = json::array();
                for (std::size_t c = 0; c < k.dim(); ++c)
                    row.push_back({k(i, c).real(), k(i, c).imag()});
                m.push_back(row);
            }
            ks.push_back(m);
        }
        j["kraus"] = ks;
    }
    if (spec.affine) {
        json a = json::array(), b = json::array();
        for (int i = 0; i < 3; ++i) {
            json row = json::array();
            for (int k = 0; k < 3; ++k) row.push_back(spec.affine->a[i][k]);
            a.push_back(row);
            b.push_back(spec.affine->b[i]);
        }
        j["A"] = a;
        j["b"] = b;
    }
    return j.dump();
}

}  // namespace chs
