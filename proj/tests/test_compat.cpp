#include <doctest.h>

#include <cmath>
#include <random>

#include "channelscope/compat.hpp"
#include "helpers.hpp"

using chs::Correlation;
using chs::Witness;
using test_util::from_xy;
using test_util::pauli_spec;
using test_util::plain_spec;
using test_util::scalar_spec;

TEST_CASE("Correlation validation and Cartesian coordinates") {
    CHECK_THROWS_WITH_AS((Correlation(2, 2, {1.2, -0.2, 0.5, 0.5})),
                         doctest::Contains("outside [0,1]"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((Correlation(2, 2, {0.5, 0.4, 0.5, 0.5})),
                         doctest::Contains("sums to"), std::invalid_argument);
    CHECK_THROWS_AS((Correlation(2, 2, {0.5, 0.5})), std::invalid_argument);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        double x = u(rng), y = u(rng);
        if (std::abs(x) + std::abs(y) > 1.0) {
            x *= 0.5;
            y *= 0.5;
        }
        if (std::abs(x) + std::abs(y) > 1.0) continue;
        const auto p = from_xy(x, y);
        CHECK(p.cart_x() == doctest::Approx(x).epsilon(1e-12));
        CHECK(p.cart_y() == doctest::Approx(y).epsilon(1e-12));
    }

    const Correlation big(3, 3);
    CHECK_THROWS_AS(big.cart_x(), std::invalid_argument);
}

TEST_CASE("closed-form boundaries per family") {
    // isotropic pauli: rhombus |y| <= 0.6 (1 - |x|)
    const auto pl = pauli_spec(0.7, 0.1, 0.1, 0.1);
    CHECK(chs::check_closed_form(pl, from_xy(0.0, 0.6)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(chs::check_closed_form(pl, from_xy(0.0, 0.6)).compatible);
    CHECK_FALSE(chs::check_closed_form(pl, from_xy(0.0, 0.601)).compatible);
    // the slanted edge rules out points a horizontal band would admit
    CHECK_FALSE(chs::check_closed_form(pl, from_xy(0.5, 0.35)).compatible);
    CHECK(chs::check_closed_form(pl, from_xy(0.5, 0.3)).compatible);

    // damping: apex (0, sqrt(lambda)) and the edge contacts (+/-(1-lambda), lambda)
    const auto ad = scalar_spec(chs::Family::amp_damp, 0.36);
    CHECK(chs::check_closed_form(ad, from_xy(0.0, 0.6)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(chs::check_closed_form(ad, from_xy(0.64, 0.36)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(chs::check_closed_form(ad, from_xy(0.0, 0.605)).compatible);
    CHECK(chs::check_closed_form(ad, from_xy(0.3, 0.5)).compatible);

    // erasure: horizontal band
    const auto er = scalar_spec(chs::Family::erasure, 0.5, 3);
    CHECK(chs::check_closed_form(er, from_xy(0.5, 0.5)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(chs::check_closed_form(er, from_xy(0.0, 0.501)).compatible);

    // depolarizing d=3, lambda=0.5: band 0.5 capped by slope 0.6 from x = 1/6
    const auto dep = scalar_spec(chs::Family::depolarizing, 0.5, 3);
    CHECK(chs::check_closed_form(dep, from_xy(1.0 / 6.0, 0.5)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(chs::check_closed_form(dep, from_xy(0.0, 0.5)).compatible);
    CHECK_FALSE(chs::check_closed_form(dep, from_xy(0.3, 0.5)).compatible);

    // cloning d=3: band d/(d+1)
    const auto cl = plain_spec(chs::Family::cloning, 3);
    CHECK(chs::check_closed_form(cl, from_xy(0.2, 0.75)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(chs::check_closed_form(cl, from_xy(0.0, 0.76)).compatible);

    // transposition d=3: band 1/4 capped by slope 1/3 from x = 1/4
    const auto tr = plain_spec(chs::Family::transposition, 3);
    CHECK(chs::check_closed_form(tr, from_xy(0.25, 0.25)).margin ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(chs::check_closed_form(tr, from_xy(0.5, 0.25)).compatible);
}

TEST_CASE("closed forms are invariant under the relabeling orbit") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::vector<chs::ChannelSpec> specs = {
        pauli_spec(0.5, 0.3, 0.1, 0.1), scalar_spec(chs::Family::amp_damp, 0.5),
        scalar_spec(chs::Family::erasure, 0.3, 2),
        scalar_spec(chs::Family::depolarizing, 0.6, 4),
        plain_spec(chs::Family::transposition, 3)};
    for (const auto& spec : specs) {
        for (int rep = 0; rep < 50; ++rep) {
            double x = 0.5 * u(rng), y = 0.5 * u(rng);
            const double base = chs::check_closed_form(spec, from_xy(x, y)).margin;
            for (auto [sx, sy] : {std::pair{-1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}}) {
                CHECK(chs::check_closed_form(spec, from_xy(sx * x, sy * y)).margin ==
                      doctest::Approx(base).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("closed form verdicts agree with the witness-scan path") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    // qubit channels against the dihedral critical-omega scan
    for (const auto& spec :
         {pauli_spec(0.6, 0.2, 0.1, 0.1), scalar_spec(chs::Family::amp_damp, 0.4)}) {
        const auto can = chs::canonicalize_d2(chs::to_affine(spec));
        for (int rep = 0; rep < 400; ++rep) {
            double x = u(rng), y = u(rng);
            if (std::abs(x) + std::abs(y) > 1.0) continue;
            const auto p = from_xy(x, y);
            const auto cf = chs::check_closed_form(spec, p);
            const auto gen = chs::check_qubit_d2(can, p);
            if (cf.compatible != gen.compatible)
                CHECK((std::abs(cf.margin) <= 1e-7 || std::abs(gen.margin) <= 1e-7));
        }
    }

    // covariant families against the kink scan
    for (const auto& spec :
         {scalar_spec(chs::Family::erasure, 0.45, 3),
          scalar_spec(chs::Family::depolarizing, 0.55, 3),
          plain_spec(chs::Family::cloning, 2), plain_spec(chs::Family::transposition, 2)}) {
        const auto sp = chs::spectral_pairs(spec);
        for (int rep = 0; rep < 400; ++rep) {
            double x = u(rng), y = u(rng);
            if (std::abs(x) + std::abs(y) > 1.0) continue;
            const auto p = from_xy(x, y);
            const auto cf = chs::check_closed_form(spec, p);
            const auto gen = chs::check_covariant(sp, p);
            if (cf.compatible != gen.compatible)
                CHECK((std::abs(cf.margin) <= 1e-7 || std::abs(gen.margin) <= 1e-7));
        }
    }
}

TEST_CASE("check_membership on the degenerate families") {
    const auto tc = plain_spec(chs::Family::trace_class, 3);
    CHECK(chs::check_membership(tc, from_xy(0.9, 0.0)).compatible);
    const auto v = chs::check_membership(tc, from_xy(0.0, 0.4));
    CHECK_FALSE(v.compatible);
    CHECK(v.margin == doctest::Approx(0.2).epsilon(1e-12));

    // identity-like channels fill the whole square
    const auto id = plain_spec(chs::Family::unitary, 2);
    CHECK(chs::check_membership(id, from_xy(0.5, 0.5)).compatible);
    CHECK(chs::check_membership(id, from_xy(1.0, 0.0)).compatible);
    CHECK(chs::check_membership(id, from_xy(0.0, -1.0)).compatible);
    const auto deph = scalar_spec(chs::Family::dephasing, 0.2, 2);
    CHECK(chs::check_membership(deph, from_xy(0.4, -0.6)).compatible);
}

TEST_CASE("check_membership routes custom qubit channels through the scan") {
    std::mt19937_64 rng(17);
    const auto spec = test_util::random_d2_covariant(rng);
    const auto can = chs::canonicalize_d2(chs::to_affine(spec));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        double x = 0.7 * u(rng), y = 0.7 * u(rng);
        if (std::abs(x) + std::abs(y) > 1.0) continue;
        const auto p = from_xy(x, y);
        CHECK(chs::check_membership(spec, p).margin ==
              doctest::Approx(chs::check_qubit_d2(can, p).margin).epsilon(1e-12));
    }

    // a displaced non-covariant map has no decision procedure here
    chs::ChannelSpec off;
    off.family = chs::Family::custom_affine;
    off.affine = chs::QubitAffine{{{{0.5, 0, 0}, {0, 0.5, 0}, {0, 0, 0.5}}}, {0.1, 0.0, 0.2}};
    CHECK_THROWS_WITH_AS(chs::check_membership(off, from_xy(0.0, 0.0)),
                         doctest::Contains("not D2-covariant"), std::invalid_argument);
}

TEST_CASE("threshold_for dispatch") {
    CHECK(chs::threshold_for(plain_spec(chs::Family::trace_class, 2),
                             {Witness::Sign::plus, 0.4}) ==
          doctest::Approx(0.7).epsilon(1e-12));
    CHECK(chs::threshold_for(plain_spec(chs::Family::unitary, 2),
                             {Witness::Sign::minus, 0.4}) == doctest::Approx(1.0));

    const auto er = scalar_spec(chs::Family::erasure, 0.5, 3);
    const Witness w{Witness::Sign::plus, 0.3};
    CHECK(chs::threshold_for(er, w) ==
          doctest::Approx(chs::covariant_threshold(chs::spectral_pairs(er), w).value)
              .epsilon(1e-12));

    const auto pl = pauli_spec(0.7, 0.1, 0.1, 0.1);
    CHECK(chs::threshold_for(pl, w) ==
          doctest::Approx(
              chs::qubit_threshold(chs::canonicalize_d2(chs::to_affine(pl)), w).value)
              .epsilon(1e-12));
}

TEST_CASE("max_violation finds a genuinely violated witness outside the region") {
    const auto ad = scalar_spec(chs::Family::amp_damp, 0.36);
    const int grid = 41;
    for (int i = 0; i < grid; ++i) {
        const double x = -1.0 + 2.0 * i / (grid - 1.0);
        for (int j = 0; j < grid; ++j) {
            const double y = -1.0 + 2.0 * j / (grid - 1.0);
            if (std::abs(x) + std::abs(y) > 1.0 + 1e-12) continue;
            const auto p = from_xy(x, y);
            const double cf = chs::check_closed_form(ad, p).margin;
            const auto mv = chs::max_violation(ad, p, 41);
            if (cf <= -1e-6) {
                CHECK(mv.margin <= 1e-9);
            } else if (cf >= 1e-4) {
                CHECK(mv.margin > 0.0);
                // the reported worst witness is indeed violated
                const double value = chs::witness_value(mv.worst_witness, p.as_2x2());
                CHECK(value - chs::threshold_for(ad, mv.worst_witness) ==
                      doctest::Approx(mv.margin).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("region_inclusion is monotone in the family parameter") {
    const auto big = scalar_spec(chs::Family::erasure, 0.7, 2);
    const auto small = scalar_spec(chs::Family::erasure, 0.4, 2);
    CHECK(chs::region_inclusion(big, small, 60));
    CHECK_FALSE(chs::region_inclusion(small, big, 60));

    // every region sits inside the identity square
    CHECK(chs::region_inclusion(plain_spec(chs::Family::unitary, 2),
                                scalar_spec(chs::Family::amp_damp, 0.5), 40));
    // and contains the trace-class segment
    CHECK(chs::region_inclusion(scalar_spec(chs::Family::depolarizing, 0.5, 3),
                                plain_spec(chs::Family::trace_class, 3), 40));
}
