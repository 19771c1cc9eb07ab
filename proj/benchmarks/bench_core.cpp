#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "isotemporal/counting.hpp"
#include "isotemporal/cycle_forms.hpp"
#include "isotemporal/enumeration.hpp"
#include "isotemporal/temporal_network.hpp"

namespace iso = isotemporal;

namespace {

iso::PmForm random_form(int n, std::mt19937& rng) {
  std::vector<bool> bits(n);
  bool seen0 = false, seen1 = false;
  do {
    for (int i = 0; i < n; ++i) {
      bits[i] = rng() & 1;
      (bits[i] ? seen1 : seen0) = true;
    }
  } while (!seen0 || !seen1);
  return iso::pm_from_orientation(iso::CycleOrientation(bits));
}

void BM_canonical_pm(benchmark::State& state) {
  std::mt19937 rng(42);
  iso::PmForm p = random_form(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso::canonical_pm(p));
  }
}
BENCHMARK(BM_canonical_pm)->Arg(12)->Arg(18);

void BM_class_census(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso::enumerate_pm_classes(n));
  }
}
BENCHMARK(BM_class_census)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_class_count_formula(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso::isotemporal_class_count(n));
  }
}
BENCHMARK(BM_class_count_formula)->Arg(27)->Arg(500)->Arg(5000);

void BM_footprint_oracle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        iso::enumerate_footprints(n, iso::FootprintMode::RotationOnly));
  }
}
BENCHMARK(BM_footprint_oracle)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_realize_labeling(benchmark::State& state) {
  std::mt19937 rng(7);
  iso::PmForm p = random_form(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso::realize_labeling(p));
  }
}
BENCHMARK(BM_realize_labeling)->Arg(16);

void BM_reachability(benchmark::State& state) {
  // ring of k vertices plus random chords, times shuffled
  int k = static_cast<int>(state.range(0));
  std::mt19937 rng(1234);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
  std::vector<iso::LabeledEdge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({names[i], names[(i + 1) % k], 0});
  }
  for (int j = 0; j < k; ++j) {
    int a = static_cast<int>(rng() % k), b = static_cast<int>(rng() % k);
    if (a == b || std::abs(a - b) == 1 || std::abs(a - b) == k - 1) continue;
    edges.push_back({names[a], names[b], 0});
  }
  std::vector<double> times(edges.size());
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = double(i);
  std::shuffle(times.begin(), times.end(), rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].t = times[i];
  // chord duplicates are possible; drop them
  std::vector<iso::LabeledEdge> unique_edges;
  for (const auto& e : edges) {
    bool dup = false;
    for (const auto& u : unique_edges) {
      dup = dup || (u.u == e.u && u.v == e.v) || (u.u == e.v && u.v == e.u);
    }
    if (!dup) unique_edges.push_back(e);
  }
  iso::TemporalNetwork net = iso::TemporalNetwork::validate(names, unique_edges);
  for (auto _ : state) {
    benchmark::DoNotOptimize(net.temporal_reachable_set(names[0]));
  }
}
BENCHMARK(BM_reachability)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
