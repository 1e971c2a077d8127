#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eebandit/errors.hpp"
#include "eebandit/params.hpp"
#include "eebandit/units.hpp"

using namespace eebandit;

TEST_CASE("dbm_to_watt reference points")
{
    CHECK(dbm_to_watt(0.0) == doctest::Approx(1e-3).epsilon(1e-14));
    CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dbm_to_watt(-120.0) == doctest::Approx(1e-15).epsilon(1e-12));
    // W * sigma0^2 at 100 kHz and -170 dBm/Hz
    CHECK(1e5 * dbm_to_watt(-170.0) == doctest::Approx(dbm_to_watt(-120.0)).epsilon(1e-12));
}

TEST_CASE("dbm conversions reject bad input")
{
    CHECK_THROWS_AS(dbm_to_watt(std::nan("")), ConfigError);
    CHECK_THROWS_AS(dbm_to_watt(INFINITY), ConfigError);
    CHECK_THROWS_AS(watt_to_dbm(0.0), ConfigError);
    CHECK_THROWS_AS(watt_to_dbm(-1.0), ConfigError);
}

TEST_CASE("dbm round trip")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(-200.0, 60.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = dist(gen);
        CHECK(std::abs(watt_to_dbm(dbm_to_watt(x)) - x) <= 1e-9);
    }
}

TEST_CASE("path_loss_variance values")
{
    CHECK(std::abs(path_loss_variance(2.4e9, 13.0, 2.5) - 8.107945447126545e-08) <= 1e-11);
    CHECK(path_loss_variance(2.4e9, 13.0, 2.5) ==
          doctest::Approx(8.107945447126545e-08).epsilon(1e-12));

    const double free = 0.5 * std::pow(kSpeedOfLight / (4.0 * std::numbers::pi * 2.4e9), 2.0);
    CHECK(path_loss_variance(2.4e9, 1.0, 0.0) == doctest::Approx(free).epsilon(1e-14));
    CHECK(path_loss_variance(2.4e9, 977.0, 0.0) == doctest::Approx(free).epsilon(1e-14));

    const double ratio = path_loss_variance(2.4e9, 26.0, 2.5) / path_loss_variance(2.4e9, 13.0, 2.5);
    CHECK(ratio == doctest::Approx(std::pow(2.0, -2.5)).epsilon(1e-13));
    CHECK(ratio == doctest::Approx(0.17678).epsilon(1e-4));

    CHECK_THROWS_AS(path_loss_variance(0.0, 13.0, 2.5), ConfigError);
    CHECK_THROWS_AS(path_loss_variance(2.4e9, -1.0, 2.5), ConfigError);
}

TEST_CASE("path_loss_variance decreases with distance and frequency")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> d(1.0, 500.0);
    std::uniform_real_distribution<double> f(1e8, 6e9);
    std::uniform_real_distribution<double> g(0.5, 4.0);
    for (int i = 0; i < 2000; ++i) {
        const double fr = f(gen);
        const double d1 = d(gen);
        const double d2 = d1 * 1.01;
        const double gamma = g(gen);
        CHECK(path_loss_variance(fr, d2, gamma) < path_loss_variance(fr, d1, gamma));
        CHECK(path_loss_variance(fr * 1.01, d1, gamma) < path_loss_variance(fr, d1, gamma));
    }
}

TEST_CASE("default link layout")
{
    const SystemParams p = default_params(10);
    const LinkStats l1 = default_link_stats(p, 1);
    CHECK(l1.node_index == 1);
    CHECK(l1.distance == 13.0);
    CHECK(l1.f_energy == 2.4e9);
    CHECK(l1.f_info == 2.401e9);
    CHECK(std::abs(l1.var_g - 8.108e-8) <= 1e-11);
    CHECK(l1.var_h == doctest::Approx(path_loss_variance(2.401e9, 13.0, 2.5)).epsilon(1e-14));

    const LinkStats l10 = default_link_stats(p, 10);
    CHECK(l10.distance == 40.0);
    CHECK(l10.f_info == 2.41e9);

    CHECK_THROWS_AS(default_link_stats(p, 0), ConfigError);
    CHECK_THROWS_AS(default_link_stats(p, 11), ConfigError);

    const auto links = default_links(p);
    REQUIRE(links.size() == 10);
    for (std::size_t j = 1; j < links.size(); ++j) {
        CHECK(links[j].var_g < links[j - 1].var_g);
        CHECK(links[j].var_h < links[j - 1].var_h);
    }
}

TEST_CASE("default_params reference set")
{
    const SystemParams p = default_params(5);
    CHECK(p.k == 5);
    CHECK(p.arms() == 31);
    for (double w : p.weights) {
        CHECK(w == doctest::Approx(0.2).epsilon(1e-15));
    }
    CHECK(p.noise_power == doctest::Approx(1e-15).epsilon(1e-12));
    CHECK(p.powers.front() == doctest::Approx(1e-3).epsilon(1e-14));
    CHECK(p.powers.back() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.lambda_eff == 0.5);
    CHECK(p.alpha == 3.0);
    CHECK(p.r0 == 0.1);
    CHECK(p.p_min == doctest::Approx(1e-9).epsilon(1e-12));
    CHECK(p.b_max == doctest::Approx(1e-7).epsilon(1e-12));
    CHECK(p.path_loss_exp == 2.5);
    CHECK_THROWS_AS(default_params(0), ConfigError);
}

TEST_CASE("default_params validates for every k")
{
    for (std::size_t k = 1; k <= 64; ++k) {
        const SystemParams p = default_params(k);
        CHECK_NOTHROW(validate(p));
        double sum = 0.0;
        for (double w : p.weights) {
            sum += w;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        for (std::size_t i = 1; i < p.arms(); ++i) {
            CHECK(p.powers[i] > p.powers[i - 1]);
        }
    }
}

TEST_CASE("validate rejects broken parameter sets")
{
    const SystemParams base = default_params(3);

    SystemParams p = base;
    p.weights[0] += 1e-6;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.weights = {0.5, 0.5};
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.weights = {1.2, -0.1, -0.1};
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    std::swap(p.powers[3], p.powers[4]);
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.powers[1] = p.powers[0];
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.powers.clear();
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.lambda_eff = 1.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.r0 = 0.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.noise_power *= 2.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.p_min = -1.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.b_max = 0.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.alpha = 0.0;
    CHECK_THROWS_AS(validate(p), ConfigError);

    p = base;
    p.powers = {p.powers.back()};
    CHECK_NOTHROW(validate(p));

    p = base;
    p.lambda_eff = 0.0;
    CHECK_NOTHROW(validate(p));
}
