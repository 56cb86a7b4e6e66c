#include <benchmark/benchmark.h>

#include <random>

#include "coxkit/exact.hpp"
#include "coxkit/logic.hpp"
#include "coxkit/profinite.hpp"
#include "coxkit/titsrep.hpp"

namespace {

using namespace coxkit;

void BM_WordEvaluation(benchmark::State& state) {
  const auto rep = titsrep::ReflectionRep::build(diagram::finite_diagram('H', 4));
  std::mt19937_64 rng(2);
  titsrep::Word w(static_cast<std::size_t>(state.range(0)));
  for (auto& l : w) l = rng() % 4;
  for (auto _ : state) benchmark::DoNotOptimize(rep.evaluate(w));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * w.size()));
}
BENCHMARK(BM_WordEvaluation)->Arg(16)->Arg(128);

void BM_TriangleElementOrder(benchmark::State& state) {
  const auto rep = titsrep::ReflectionRep::build(diagram::affine_diagram('A', 2));
  const titsrep::Word t{0, 1, 1, 2, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(titsrep::element_order(rep, t, 100));
}
BENCHMARK(BM_TriangleElementOrder)->Unit(benchmark::kMicrosecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  exact::Matrix<long long> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long long>(rng() % 21) - 10;
  const auto a = exact::to_int_matrix(m);
  for (auto _ : state) benchmark::DoNotOptimize(exact::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_EvaluateChi(benchmark::State& state) {
  const auto& e = profinite::Catalog::instance().at("S4");
  const auto model = logic::FiniteGroupModel::make(e.group);
  const auto chi = logic::emit_chi(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (perm::Index x = 0; x < e.order; ++x) benchmark::DoNotOptimize(logic::evaluate(chi, model, {{"x", x}}));
}
BENCHMARK(BM_EvaluateChi)->Arg(1)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
