#include <doctest.h>

#include <cmath>
#include <random>

#include "channelscope/polytope.hpp"
#include "helpers.hpp"

using chs::Correlation;
using test_util::from_xy;

TEST_CASE("vertex enumeration counts") {
    CHECK(chs::fw_vertices(2, 2, 1).vertices.size() == 2);
    CHECK(chs::fw_vertices(2, 2, 2).vertices.size() == 4);
    CHECK(chs::fw_vertices(3, 3, 2).vertices.size() == 21);
    CHECK(chs::fw_vertices(3, 3, 3).vertices.size() == 27);
    CHECK(chs::trace_class_vertices(4, 3).vertices.size() == 3);
    CHECK_THROWS_AS(chs::fw_vertices(7, 8, 2), std::invalid_argument);

    // every vertex entry is exactly 0 or 1 with one 1 per row
    for (const auto& q : chs::fw_vertices(3, 3, 2).vertices)
        for (std::size_t i = 0; i < 3; ++i) {
            int ones = 0;
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK((q(i, j) == 0.0 || q(i, j) == 1.0));
                ones += q(i, j) == 1.0;
            }
            CHECK(ones == 1);
        }
}

TEST_CASE("binary d=2 polytope is the full square") {
    const auto vs = chs::fw_vertices(2, 2, 2);
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        const auto p = test_util::random_correlation(rng);
        const auto r = chs::hull_membership(vs, p);
        CHECK(r.inside);
        // weights are a convex decomposition reproducing p
        double sum = 0.0;
        double rec[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        for (std::size_t k = 0; k < r.weights.size(); ++k) {
            CHECK(r.weights[k] >= -1e-12);
            sum += r.weights[k];
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    rec[i][j] += r.weights[k] * vs.vertices[k](i, j);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(rec[i][j] == doctest::Approx(p(i, j)).epsilon(1e-9));
    }
}

TEST_CASE("binary d=1 polytope is the y = 0 segment") {
    const auto vs = chs::fw_vertices(2, 2, 1);
    CHECK(chs::hull_membership(vs, from_xy(0.6, 0.0)).inside);
    CHECK(chs::hull_membership(vs, from_xy(-1.0, 0.0)).inside);

    const auto out = chs::hull_membership(vs, from_xy(0.0, 0.5));
    CHECK_FALSE(out.inside);
    CHECK(out.separation >= 1e-10);
    REQUIRE(out.witness.size() == 4);
    // certificate really separates: p.w minus the best vertex equals separation
    const auto p = from_xy(0.0, 0.5);
    double pw = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) pw += p(i, j) * out.witness[i * 2 + j];
    double best = -1e300;
    for (const auto& q : vs.vertices) {
        double qw = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) qw += q(i, j) * out.witness[i * 2 + j];
        best = std::max(best, qw);
    }
    CHECK(pw - best == doctest::Approx(out.separation).epsilon(1e-10));
}

TEST_CASE("full 3x3 polytope admits every stochastic matrix") {
    const auto vs = chs::fw_vertices(3, 3, 3);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> e(9);
        for (int i = 0; i < 3; ++i) {
            double a = u(rng), b = u(rng), c = u(rng);
            const double s = a + b + c;
            e[i * 3] = a / s;
            e[i * 3 + 1] = b / s;
            e[i * 3 + 2] = c / s;
        }
        CHECK(chs::hull_membership(vs, Correlation(3, 3, e)).inside);
    }
}

TEST_CASE("restricted 3x3 polytope rejects high-capacity correlations") {
    const auto vs = chs::fw_vertices(3, 3, 2);
    // perfect identity channel needs all three symbols
    const Correlation ident(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto r = chs::hull_membership(vs, ident);
    CHECK_FALSE(r.inside);
    CHECK(r.separation >= 1e-10);
    // but a 2-symbol correlation embedded in 3x3 passes
    const Correlation two(3, 3, {1, 0, 0, 0, 1, 0, 0, 1, 0});
    CHECK(chs::hull_membership(vs, two).inside);
}

TEST_CASE("trace_class_threshold equals column-sum maximum") {
    CHECK(chs::trace_class_threshold({{1.0, 0.0}, {0.0, 0.3}}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    // binary witness w+(omega): threshold (1 + |omega|)/2
    for (double omega : {-0.8, -0.2, 0.0, 0.5, 1.0}) {
        const double hi = 0.5 * (1.0 + omega), lo = 0.5 * (1.0 - omega);
        CHECK(chs::trace_class_threshold({{hi, 0.0}, {0.0, lo}}) ==
              doctest::Approx(0.5 * (1.0 + std::abs(omega))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(chs::trace_class_threshold({}), std::invalid_argument);
    CHECK_THROWS_AS(chs::trace_class_threshold({{1.0, 0.0}, {0.5}}), std::invalid_argument);
}

TEST_CASE("hull membership matches the analytic trace-class verdict") {
    const auto vs = chs::fw_vertices(2, 2, 1);
    const auto tc = test_util::plain_spec(chs::Family::trace_class, 2);
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        double x = u(rng), y = u(rng);
        if (std::abs(x) + std::abs(y) > 1.0) continue;
        const auto p = from_xy(x, y);
        const bool analytic = chs::check_membership(tc, p).compatible;
        const bool hull = chs::hull_membership(vs, p).inside;
        if (std::abs(y) > 1e-8) CHECK(analytic == hull);
    }
}
