#include <benchmark/benchmark.h>

#include <random>

#include "coxkit/amalgam.hpp"
#include "coxkit/permgrp.hpp"
#include "coxkit/profinite.hpp"

namespace {

using namespace coxkit;
using perm::Permutation;
using perm::PermGroup;

std::vector<Permutation> symmetric_generators(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Permutation> out;
  for (std::size_t i = first; i + 1 < last; ++i) out.push_back(Permutation::cycle(degree, {i + 1, i + 2}));
  return out;
}

void BM_ClosureSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto gens = symmetric_generators(n, 0, n);
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup::closure(gens, n).order());
}
BENCHMARK(BM_ClosureSymmetric)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ClosureS6xS6(benchmark::State& state) {
  auto gens = symmetric_generators(12, 0, 6);
  for (auto& g : symmetric_generators(12, 6, 12)) gens.push_back(g);
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup::closure(gens, 12).order());
}
BENCHMARK(BM_ClosureS6xS6)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_HomCountIntoOrder24(benchmark::State& state) {
  const auto p = perm::parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a b)^4\n");
  const auto& cat = profinite::Catalog::instance();
  for (auto _ : state)
    for (const auto& e : cat.entries())
      if (e.order == 24) benchmark::DoNotOptimize(perm::hom_count(p, e.table));
}
BENCHMARK(BM_HomCountIntoOrder24)->Unit(benchmark::kMicrosecond);

void BM_Fingerprint(benchmark::State& state) {
  const auto p = perm::parse_presentation("gens a b\nrel a^2\nrel b^2\nrel (a b)^3\n");
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(profinite::fingerprint(p, bound));
}
BENCHMARK(BM_Fingerprint)->Arg(12)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_AmalgamNormalize(benchmark::State& state) {
  static const auto ex = amalgam::build_counterexample_amalgam();
  const auto& g = ex.g;
  std::mt19937_64 rng(1);
  const auto length = static_cast<std::size_t>(state.range(0));
  std::vector<amalgam::RawElement> seq;
  for (std::size_t i = 0; i < length; ++i) {
    const auto s = i % 2 ? amalgam::Side::A : amalgam::Side::B;
    seq.push_back({s, static_cast<perm::Index>(rng() % g.factor(s).order())});
  }
  for (auto _ : state) benchmark::DoNotOptimize(g.normalize(seq));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * length));
}
BENCHMARK(BM_AmalgamNormalize)->Arg(8)->Arg(64)->Arg(512);

}  // namespace
