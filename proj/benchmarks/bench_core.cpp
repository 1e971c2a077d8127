#include <benchmark/benchmark.h>

#include <cstdint>

#include "eebandit/analytic.hpp"
#include "eebandit/bandit.hpp"
#include "eebandit/channel.hpp"
#include "eebandit/params.hpp"
#include "eebandit/schemes.hpp"

using namespace eebandit;

static void BM_SlotStep(benchmark::State& state)
{
    const SystemParams params = default_params(static_cast<std::size_t>(state.range(0)));
    ChannelEnv env(params, default_links(params), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.step_arm(20).weighted_rate);
    }
}
BENCHMARK(BM_SlotStep)->Arg(4)->Arg(8)->Arg(12);

static void BM_SuccessProb(benchmark::State& state)
{
    SystemParams params = default_params(5);
    params.r0 = 0.75;
    const LinkStats link = default_link_stats(params, 3);
    const double power = params.powers[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        benchmark::DoNotOptimize(success_prob(power, link, params));
    }
}
BENCHMARK(BM_SuccessProb)->Arg(0)->Arg(20)->Arg(30);

static void BM_MeanRateTable(benchmark::State& state)
{
    const SystemParams params = default_params(5);
    const auto links = default_links(params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mean_rate_table(params, links).opt_arm);
    }
}
BENCHMARK(BM_MeanRateTable)->Unit(benchmark::kMillisecond);

static void BM_SelectArm(benchmark::State& state)
{
    const SystemParams params = default_params(5);
    BanditState bandit = BanditState::from_params(params);
    const std::vector<double> rates(params.k, 0.0);
    for (std::size_t i = 0; i < params.arms(); ++i) {
        bandit.update(i, rates);
    }
    std::uint64_t t = params.arms() + 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(select_arm(bandit, t++));
    }
}
BENCHMARK(BM_SelectArm);

static void BM_FullCsiSelect(benchmark::State& state)
{
    const SystemParams params = default_params(8);
    ChannelEnv env(params, default_links(params), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_csi_select(params, env.draw(), 1e-6));
    }
}
BENCHMARK(BM_FullCsiSelect);

static void BM_UcbEhEpisode(benchmark::State& state)
{
    const SystemParams params = default_params(5);
    const auto links = default_links(params);
    const MeanRateTable table = mean_rate_table(params, links);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        EnvRng rng(seed++);
        benchmark::DoNotOptimize(run_ucb_eh(params, links, table, 10000, rng).ee_sum);
    }
}
BENCHMARK(BM_UcbEhEpisode)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
