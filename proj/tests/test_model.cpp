#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hyscat/error.hpp"
#include "hyscat/model.hpp"
#include "oracles.hpp"

using namespace hyscat;
using model::Channel;
using model::PotentialParams;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> r;
    for (int i = 0; i < n; ++i) r.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return r;
}

PotentialParams params(double V0, double A, double alpha) {
    PotentialParams p;
    p.V0 = V0;
    p.A = A;
    p.alpha = alpha;
    return p;
}

}  // namespace

TEST_CASE("potential_exact decays like the screening exponential") {
    const auto p = params(1.0, 0.0, 0.05);
    const double r = 400.0;
    const double v = model::potential_exact(p, r);
    CHECK(v < 0.0);
    CHECK(v / -std::exp(-0.05 * r) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("potential_exact matches the simplified form on a log grid") {
    for (const auto& p : {params(1.0, 5.0, 0.1), params(1.0, 0.0, 0.05), params(0.3, 2.0, 0.075)}) {
        for (double r : log_grid(1e-3, 1e3, 121)) {
            const double x = p.alpha * r;
            const double ref = -p.V0 / std::expm1(x) - p.A * std::exp(-x) / r;
            CHECK(std::abs(model::potential_exact(p, r) - ref) <= 1e-13 * std::abs(ref));
        }
    }
}

TEST_CASE("potential_exact against 50-digit substitution") {
    const double ref = oracles::potential_literal(1.0, 5.0, 0.1, 1.0);
    CHECK(model::potential_exact(params(1.0, 5.0, 0.1), 1.0) == doctest::Approx(ref).epsilon(1e-14));
    for (double r : {1e-9, 1e-7, 5e-6}) {
        const double tiny = oracles::potential_literal(1.0, 5.0, 0.05, r);
        CHECK(model::potential_exact(params(1.0, 5.0, 0.05), r) == doctest::Approx(tiny).epsilon(1e-13));
    }
}

TEST_CASE("potentials reject nonpositive radii") {
    const PotentialParams p;
    CHECK_THROWS_AS(model::potential_exact(p, 0.0), DomainError);
    CHECK_THROWS_AS(model::potential_approx(p, -1.0), DomainError);
    CHECK_THROWS_AS(model::centrifugal_approx(0.05, 0.0), DomainError);
}

TEST_CASE("potential_approx") {
    const auto pure = params(1.0, 0.0, 0.05);
    for (double r : log_grid(1e-3, 1e3, 31)) CHECK(model::potential_approx(pure, r) == model::potential_exact(pure, r));

    const auto p = params(1.0, 5.0, 0.1);
    const double r0 = 1e-7;
    CHECK(model::potential_approx(p, r0) / model::potential_exact(p, r0) == doctest::Approx(1.0).epsilon(1e-6));

    const auto folded = params(p.V0 + p.alpha * p.A, 0.0, p.alpha);
    for (double r : log_grid(1e-3, 1e3, 31)) {
        CHECK(model::potential_approx(p, r) == doctest::Approx(model::potential_exact(folded, r)).epsilon(1e-15));
    }

    const double exact = model::potential_exact(p, 20.0);
    const double approx = model::potential_approx(p, 20.0);
    const std::vector<double> r{20.0};
    const auto report = model::approximation_report(p, r);
    CHECK(report.rows[0].potential_rel_error == doctest::Approx(std::abs(approx - exact) / std::abs(exact)));
    CHECK(report.rows[0].potential_rel_error > 0.1);
}

TEST_CASE("centrifugal_approx limits") {
    const double alpha = 0.05;
    CHECK(model::centrifugal_approx(alpha, 1e-6) * 1e-12 == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(model::centrifugal_approx(alpha, 2000.0) == doctest::Approx(alpha * alpha).epsilon(1e-15));

    // alpha^2 r^2 / (1 - e^{-x})^2 = 1 + x + 5x^2/12 + ..., so the error sits just above x.
    for (double x = 1e-4; x < 0.1; x *= 1.3) {
        const double r = x / alpha;
        const double err = std::abs(model::centrifugal_approx(alpha, r) * r * r - 1.0);
        CHECK(err > x);
        CHECK(err <= x + x * x / 2.0);
    }

    // alpha = 0.05, r = 10: x^2 / (1 - e^{-x})^2 - 1 at x = 0.5.
    const oracles::mp_real x("0.5");
    const double ref = static_cast<double>(x * x / ((1 - exp(-x)) * (1 - exp(-x))) - 1);
    const double err = model::centrifugal_approx(alpha, 10.0) * 100.0 - 1.0;
    CHECK(err == doctest::Approx(ref).epsilon(1e-13));
    CHECK(err == doctest::Approx(0.6148).epsilon(1e-4));
}

TEST_CASE("transformed_params worked values") {
    const auto t = model::transformed_params(params(1.0, 0.0, 0.05), Channel{0, 0.01});
    CHECK(t.zeta2 == doctest::Approx(800.0).epsilon(1e-15));
    CHECK(t.zeta3 == 0.0);
    CHECK(t.sigma == 1.0);
    CHECK(t.zeta1 == doctest::Approx(799.96).epsilon(1e-15));

    const auto u = model::transformed_params(params(1.0, 5.0, 0.1), Channel{2, 0.15});
    CHECK(u.zeta2 == doctest::Approx(300.0).epsilon(1e-14));
    CHECK(u.zeta3 == 6.0);
    CHECK(u.zeta1 == doctest::Approx(291.75).epsilon(1e-14));

    const auto f = model::transformed_params(params(0.0, 0.0, 0.05), Channel{3, 0.1});
    CHECK(f.zeta1 == doctest::Approx(-12.0 - 4.0).epsilon(1e-15));
    CHECK(f.sqrt_zeta1.real() == 0.0);
    CHECK(f.sqrt_zeta1.imag() == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("transformed_params invariants") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> v0(-1.0, 3.0), a(-2.0, 6.0), alpha(0.01, 1.0), k(1e-3, 2.0);
    for (int i = 0; i < 500; ++i) {
        const auto p = params(v0(rng), a(rng), alpha(rng));
        const Channel ch{static_cast<int>(rng() % 21), k(rng)};
        const auto t = model::transformed_params(p, ch);
        CHECK(t.sigma == ch.l + 1.0);
        CHECK(t.zeta3 == static_cast<double>(ch.l * (ch.l + 1)));
        const double expect = -ch.l * (ch.l + 1.0) - (ch.k / p.alpha) * (ch.k / p.alpha);
        CHECK(std::abs((t.zeta1 - t.zeta2) - expect) <= 1e-12 * std::max({std::abs(expect), std::abs(t.zeta2), 1.0}));
        const auto sq = t.sqrt_zeta1 * t.sqrt_zeta1;
        CHECK(std::abs(sq - model::Complex(t.zeta1, 0.0)) <= 1e-12 * std::max(1.0, std::abs(t.zeta1)));
        if (t.zeta1 < 0.0) {
            CHECK(t.sqrt_zeta1.real() == 0.0);
            CHECK(t.sqrt_zeta1.imag() > 0.0);
        }
    }
}

TEST_CASE("wave_number") {
    CHECK(model::wave_number(params(1.0, 0.0, 0.05), 0.005, 0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(model::wave_number(params(1.0, 0.0, 0.05), 0.01, 1) == doctest::Approx(std::sqrt(0.015)).epsilon(1e-15));
    CHECK_THROWS_AS(model::wave_number(params(1.0, 0.0, 0.05), 0.0025, 1), EvanescentChannel);
    CHECK_THROWS_AS(model::wave_number(params(1.0, 0.0, 0.05), -1.0, 0), EvanescentChannel);

    const auto p = params(1.0, 5.0, 0.1);
    const Channel ch{2, 0.07};
    CHECK(model::wave_number(p, model::channel_energy(p, ch), ch.l) == doctest::Approx(ch.k).epsilon(1e-14));
}

TEST_CASE("approximation_report") {
    // The centrifugal error sits just above alpha r (see the limits test), so bound it by x + x^2/2 at r = 10.
    const auto tiny_alpha = model::approximation_report(params(1.0, 5.0, 1e-6), log_grid(1.0, 10.0, 20));
    CHECK(tiny_alpha.max_centrifugal_rel_error <= 1e-5 + 0.5e-10);
    CHECK(tiny_alpha.max_potential_rel_error < 1e-5);

    const auto pure = model::approximation_report(params(1.0, 0.0, 0.1), log_grid(0.1, 50.0, 40));
    CHECK(pure.max_potential_rel_error == 0.0);

    double previous = 0.0;
    for (const auto& row : pure.rows) {
        CHECK(row.centrifugal_rel_error > previous);
        previous = row.centrifugal_rel_error;
    }
    CHECK_THROWS_AS(model::approximation_report(PotentialParams{}, std::vector<double>{}), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(params(1.0, 0.0, 0.0).validate(), DomainError);
    PotentialParams p;
    p.mu = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    CHECK_THROWS_AS((Channel{-1, 0.1}).validate(), DomainError);
    CHECK_THROWS_AS((Channel{0, 0.0}).validate(), DomainError);
    CHECK_FALSE(params(-1.0, 0.0, 0.1).in_validated_regime());
    CHECK(params(1.0, 5.0, 0.1).in_validated_regime());
}
