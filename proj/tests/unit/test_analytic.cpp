#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "eebandit/analytic.hpp"
#include "eebandit/channel.hpp"
#include "eebandit/errors.hpp"
#include "eebandit/params.hpp"
#include "eebandit/quadrature.hpp"
#include "oracles.hpp"

using namespace eebandit;

namespace {

// |G|^2 law with visible atoms at both ends: P(E=0) ~ 0.012, P(E=b_max) ~ 0.29.
struct LawSetup {
    SystemParams params = default_params(1);
    LinkStats link = default_link_stats(params, 1);
    double power = 1.0;
    double a() const { return params.lambda_eff * power; }
};

} // namespace

TEST_CASE("energy law has unit mass")
{
    LawSetup s;
    for (double power : {1e-3, 1e-2, 0.1, 1.0}) {
        const EnergyLaw law = energy_law(s.params.lambda_eff * power, s.params.p_min, s.link.var_g,
                                         s.params.b_max);
        QuadratureOptions opts;
        opts.rel_tol = 1e-13;
        const double body =
            adaptive_simpson([&](double e) { return e > 0.0 && e < law.b_max ? law.density(e) : 0.0; },
                             0.0, law.b_max, opts)
                .value;
        CHECK(std::abs(law.mass_at_zero() + body + law.mass_at_cap() - 1.0) <= 1e-10);
    }
}

TEST_CASE("unclamped energy law has the exponential mean")
{
    LawSetup s;
    const double a = s.a();
    const EnergyLaw law = energy_law(a, 0.0, s.link.var_g, std::numeric_limits<double>::infinity());
    CHECK(law.mass_at_zero() == 0.0);
    CHECK(law.mass_at_cap() == 0.0);
    const double scale = 2.0 * a * s.link.var_g;
    const double mean =
        adaptive_simpson([&](double e) { return e > 0.0 ? e * law.density(e) : 0.0; }, 0.0,
                         80.0 * scale)
            .value;
    CHECK(mean == doctest::Approx(scale).epsilon(1e-7));
}

TEST_CASE("energy density domain")
{
    LawSetup s;
    CHECK_THROWS_AS(energy_tail_density(0.0, s.a(), s.params.p_min, s.link.var_g, s.params.b_max),
                    ConfigError);
    CHECK_THROWS_AS(energy_tail_density(s.params.b_max, s.a(), s.params.p_min, s.link.var_g,
                                        s.params.b_max),
                    ConfigError);
    CHECK_THROWS_AS(energy_law(0.0, 0.0, 1.0, 1.0), ConfigError);
    const double scale = 2.0 * s.a() * s.link.var_g;
    CHECK(energy_tail_density(5e-8, s.a(), s.params.p_min, s.link.var_g, s.params.b_max) ==
          doctest::Approx(std::exp(-(5e-8 + s.params.p_min) / scale) / scale).epsilon(1e-14));
}

TEST_CASE("harvested energy samples follow the law")
{
    LawSetup s;
    const EnergyLaw law = energy_law(s.a(), s.params.p_min, s.link.var_g, s.params.b_max);
    REQUIRE(law.mass_at_zero() > 0.005);
    REQUIRE(law.mass_at_cap() > 0.1);

    EnvRng rng(4242);
    const std::size_t n = 1000000;
    std::vector<double> e(n);
    for (auto& x : e) {
        x = harvested_energy(s.power, sample_gain_sq(s.link.var_g, rng), s.params);
    }
    std::sort(e.begin(), e.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (e[i] > 0.0 && e[i] < s.params.b_max) {
            const double f = law.cdf(e[i]);
            ks = std::max({ks, std::abs(static_cast<double>(i + 1) / n - f),
                           std::abs(static_cast<double>(i) / n - f)});
        }
    }
    CHECK(ks < 0.005);
}

TEST_CASE("success probability limits")
{
    SystemParams p = default_params(1);
    const LinkStats link = default_link_stats(p, 1);

    SystemParams silent = p;
    silent.noise_power = 0.0;
    CHECK(success_prob(1.0, link, silent) == 1.0);

    SystemParams hard = p;
    hard.r0 = 200.0;
    CHECK(success_prob(1.0, link, hard) == 0.0);
    hard.r0 = 40.0;
    CHECK(success_prob(1.0, link, hard) < 1e-12);

    SystemParams dark = p;
    dark.lambda_eff = 0.0;
    CHECK(success_prob(1.0, link, dark) == 0.0);

    CHECK_THROWS_AS(success_prob(0.0, link, p), ConfigError);
}

TEST_CASE("success probability against the Bessel closed form")
{
    SystemParams p = default_params(1);
    const LinkStats link = default_link_stats(p, 1);
    p.p_min = 0.0;
    for (double power : {1e-3, 1e-2, 0.1, 1.0}) {
        for (double r0 : {0.01, 0.1, 0.5, 1.0, 2.0}) {
            p.r0 = r0;
            const double a = p.lambda_eff * power;
            p.b_max = 200.0 * 2.0 * a * link.var_g;
            const double want = oracle::unclamped_success(a, link.var_g, link.var_h,
                                                          decode_threshold(p));
            CAPTURE(power);
            CAPTURE(r0);
            CHECK(success_prob(power, link, p) == doctest::Approx(want).epsilon(1e-7));
        }
    }
}

TEST_CASE("success probability against an independent sampler")
{
    SystemParams p = default_params(3);
    p.r0 = 0.75;
    const auto links = default_links(p);
    const std::uint64_t n = 2000000;
    std::uint32_t seed = 17;
    for (std::size_t arm : {std::size_t{15}, std::size_t{25}, std::size_t{30}}) {
        for (const LinkStats& link : links) {
            const double want = success_prob(p.powers[arm], link, p);
            const double got =
                oracle::sampled_success(p.powers[arm], p.lambda_eff, p.p_min, p.b_max, link.var_g,
                                        link.var_h, decode_threshold(p), n, seed++);
            CHECK(std::abs(got - want) <= 3.0 * oracle::bernoulli_se(want, n));
        }
    }
}

TEST_CASE("success probability against ten million channel steps")
{
    const SystemParams p = default_params(1);
    const auto links = default_links(p);
    const double want = success_prob(1.0, links[0], p);
    EnvRng rng(2718);
    const std::uint64_t n = 10000000;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        hits += static_cast<std::uint64_t>(step(1.0, p, links, rng).decode[0]);
    }
    const double freq = static_cast<double>(hits) / static_cast<double>(n);
    CHECK(std::abs(freq - want) <= 3.0 * oracle::bernoulli_se(want, n));
}

TEST_CASE("success probability monotonicity")
{
    const SystemParams base = default_params(1);
    const LinkStats link = default_link_stats(base, 1);
    for (double power : {1e-3, 1e-2, 0.1, 1.0}) {
        SystemParams p = base;
        double prev = 2.0;
        for (double r0 : {0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0}) {
            p.r0 = r0;
            const double v = success_prob(power, link, p);
            CHECK(v <= prev);
            prev = v;
        }

        p = base;
        prev = -1.0;
        for (double b : {1e-9, 1e-8, 1e-7, 1e-6}) {
            p.b_max = b;
            const double v = success_prob(power, link, p);
            CHECK(v >= prev);
            prev = v;
        }

        p = base;
        prev = 2.0;
        for (double pm : {0.0, 1e-10, 1e-9, 1e-8}) {
            p.p_min = pm;
            const double v = success_prob(power, link, p);
            CHECK(v <= prev);
            prev = v;
        }
    }
    double prev = -1.0;
    for (double power : base.powers) {
        const double v = success_prob(power, link, base);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("degenerate table")
{
    SystemParams p = default_params(5);
    p.r0 = 200.0;
    const MeanRateTable t = mean_rate_table(p, default_links(p));
    for (double v : t.mu.values()) {
        CHECK(v == 0.0);
    }
    for (double v : t.ee_per_arm) {
        CHECK(v == 0.0);
    }
    CHECK(t.opt_arm == 0);
    CHECK_FALSE(t.min_gap.has_value());
}

TEST_CASE("table invariants")
{
    for (std::size_t k : {std::size_t{1}, std::size_t{4}, std::size_t{8}}) {
        for (double r0 : {0.1, 0.75, 2.0}) {
            SystemParams p = default_params(k);
            p.r0 = r0;
            const MeanRateTable t = mean_rate_table(p, default_links(p));
            REQUIRE(t.arms() == p.arms());
            REQUIRE(t.nodes() == k);
            double best = 0.0;
            for (std::size_t i = 0; i < t.arms(); ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    CHECK(t.mu(i, j) >= 0.0);
                    CHECK(t.mu(i, j) <= r0);
                    if (i > 0) {
                        CHECK(t.mu(i, j) >= t.mu(i - 1, j));
                    }
                }
                CHECK(t.gaps[i] == t.opt_value - t.ee_per_arm[i]);
                CHECK(t.gaps[i] >= 0.0);
                best = std::max(best, t.ee_per_arm[i]);
            }
            CHECK(t.opt_value == best);
            CHECK(t.gaps[t.opt_arm] == 0.0);
            REQUIRE(t.min_gap.has_value());
            CHECK(*t.min_gap > 0.0);
        }
    }
}

TEST_CASE("argmax ties go to the smallest power")
{
    SystemParams p = default_params(1);
    p.powers = {1.0, 2.0, 4.0};
    Matrix mu(3, 1);
    mu(0, 0) = 0.05;
    mu(1, 0) = 0.1;
    mu(2, 0) = 0.2;
    const MeanRateTable t = make_rate_table(mu, p);
    CHECK(t.opt_arm == 0);
    CHECK_FALSE(t.min_gap.has_value());
    CHECK_THROWS_AS(make_rate_table(Matrix(2, 1), p), ConfigError);
}

TEST_CASE("reference configuration oracle gain at r0 = 0.75")
{
    SystemParams p = default_params(5);
    p.r0 = 0.75;
    const MeanRateTable t = mean_rate_table(p, default_links(p));
    CHECK(t.opt_value >= 1.4 * t.ee_per_arm.back());
    CHECK(t.opt_value == doctest::Approx(0.9028).epsilon(1e-3));
}

TEST_CASE("exhaustive per-arm simulation finds the analytic optimum")
{
    SystemParams p = default_params(5);
    p.r0 = 0.75;
    const auto links = default_links(p);
    const MeanRateTable t = mean_rate_table(p, links);

    const std::uint64_t n = 1000000;
    double best_ee = -1.0;
    double best_se = 0.0;
    for (std::size_t i = 0; i < p.arms(); ++i) {
        EnvRng rng(9000 + i);
        double sum = 0.0;
        double sq = 0.0;
        for (std::uint64_t s = 0; s < n; ++s) {
            const double x = step(p.powers[i], p, links, rng).weighted_rate / p.powers[i];
            sum += x;
            sq += x * x;
        }
        const double mean = sum / static_cast<double>(n);
        const double var = (sq - sum * mean) / static_cast<double>(n - 1);
        if (mean > best_ee) {
            best_ee = mean;
            best_se = std::sqrt(var / static_cast<double>(n));
        }
    }
    CHECK(std::abs(t.opt_value - best_ee) <= 3.0 * best_se);
}
