#include <doctest.h>

#include <cmath>

#include "channelscope/channels_json.hpp"
#include "helpers.hpp"

TEST_CASE("parse_spec accepts the documented record shapes") {
    auto s = chs::parse_spec(R"({"family":"pauli","lambda":[0.7,0.1,0.1,0.1]})");
    CHECK(s.family == chs::Family::pauli);
    REQUIRE(s.lambda.size() == 4);
    CHECK(s.lambda[0] == doctest::Approx(0.7));

    s = chs::parse_spec(R"({"family":"depolarizing","d":3,"lambda":0.5})");
    CHECK(s.family == chs::Family::depolarizing);
    CHECK(s.d == 3);
    CHECK(s.lambda0() == doctest::Approx(0.5));

    s = chs::parse_spec(R"({"family":"amp_damp","lambda":0.36})");
    CHECK(s.d == 2);

    // mixed plain-number and [re,im] entries
    s = chs::parse_spec(
        R"({"family":"custom_kraus","d":2,"kraus":[
              [[1,0],[0,0]],
              [[0,0],[0,[0,1]]]]})");
    REQUIRE(s.kraus.size() == 2);
    CHECK(s.kraus[0](0, 0) == chs::cplx(1.0, 0.0));
    CHECK(s.kraus[1](1, 1) == chs::cplx(0.0, 1.0));

    s = chs::parse_spec(
        R"({"family":"custom_affine","A":[[0.5,0,0],[0,0.5,0],[0,0,0.5]],"b":[0,0,0.25]})");
    REQUIRE(s.affine.has_value());
    CHECK(s.affine->a[2][2] == doctest::Approx(0.5));
    CHECK(s.affine->b[2] == doctest::Approx(0.25));
}

TEST_CASE("parse_spec errors name the offending field") {
    CHECK_THROWS_WITH_AS(chs::parse_spec("not json"), doctest::Contains("invalid JSON"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(chs::parse_spec(R"({"lambda":0.5})"), doctest::Contains("family"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(chs::parse_spec(R"({"family":"squeezing"})"),
                         doctest::Contains("squeezing"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(chs::parse_spec(R"({"family":"pauli","lambda":[0.5,0.5]})"),
                         doctest::Contains("lambda"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(chs::parse_spec(R"({"family":"erasure","d":3,"lambda":1.5})"),
                         doctest::Contains("lambda"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(chs::parse_spec(R"({"family":"depolarizing","d":0,"lambda":0.5})"),
                         doctest::Contains("'d'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        chs::parse_spec(R"({"family":"custom_affine","A":[[1,0,0],[0,1,0]],"b":[0,0,0]})"),
        doctest::Contains("'A'"), std::invalid_argument);
    // contraction requirement: this affine map leaves the Bloch ball
    CHECK_THROWS_WITH_AS(
        chs::parse_spec(
            R"({"family":"custom_affine","A":[[1,0,0],[0,1,0],[0,0,1]],"b":[0,0,0.5]})"),
        doctest::Contains("Bloch"), std::invalid_argument);
}

TEST_CASE("spec_to_json round-trips every payload kind") {
    std::mt19937_64 rng(13);
    std::vector<chs::ChannelSpec> specs = {
        test_util::pauli_spec(0.4, 0.3, 0.2, 0.1),
        test_util::scalar_spec(chs::Family::erasure, 0.5, 3),
        test_util::plain_spec(chs::Family::cloning, 4),
        test_util::random_d2_covariant(rng),
    };
    chs::ChannelSpec aff;
    aff.family = chs::Family::custom_affine;
    aff.affine = chs::QubitAffine{{{{0.3, 0.1, 0}, {-0.1, 0.3, 0}, {0, 0, 0.4}}},
                                  {0.0, 0.0, 0.2}};
    specs.push_back(aff);
    chs::ChannelSpec tc = test_util::plain_spec(chs::Family::trace_class, 3);
    tc.fixed_state = {chs::cplx(0.6, 0.0), chs::cplx(0.0, 0.8), chs::cplx(0.0, 0.0)};
    specs.push_back(tc);

    for (const auto& spec : specs) {
        const auto back = chs::parse_spec(chs::spec_to_json(spec));
        CHECK(back.family == spec.family);
        CHECK(back.d == spec.d);
        REQUIRE(back.lambda.size() == spec.lambda.size());
        for (std::size_t k = 0; k < spec.lambda.size(); ++k)
            CHECK(back.lambda[k] == doctest::Approx(spec.lambda[k]).epsilon(1e-14));
        REQUIRE(back.kraus.size() == spec.kraus.size());
        for (std::size_t k = 0; k < spec.kraus.size(); ++k)
            CHECK((back.kraus[k] - spec.kraus[k]).max_abs() < 1e-14);
        REQUIRE(back.fixed_state.size() == spec.fixed_state.size());
        for (std::size_t k = 0; k < spec.fixed_state.size(); ++k)
            CHECK(std::abs(back.fixed_state[k] - spec.fixed_state[k]) < 1e-14);
        CHECK(back.affine.has_value() == spec.affine.has_value());
        if (spec.affine) {
            for (int i = 0; i < 3; ++i) {
                CHECK(back.affine->b[i] == doctest::Approx(spec.affine->b[i]).epsilon(1e-14));
                for (int j = 0; j < 3; ++j)
                    CHECK(back.affine->a[i][j] ==
                          doctest::Approx(spec.affine->a[i][j]).epsilon(1e-14));
            }
        }
    }
}
