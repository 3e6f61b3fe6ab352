#include <benchmark/benchmark.h>

#include <random>

#include "extbayes/engine.hpp"
#include "extbayes/logic.hpp"
#include "extbayes/measure.hpp"

using namespace extbayes;

namespace {

Rational rat(long n, long d = 1) { return Rational(n) / Rational(d); }

// n-state space, coarse pairs-of-states algebra, discrete fine algebra,
// uniform prior, posterior uniform on the even states.
UpdatePair make_pair(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  SpacePtr space = make_space(labels);
  std::vector<Event> blocks;
  for (std::size_t i = 0; i < n; i += 2) {
    std::vector<std::size_t> b{i};
    if (i + 1 < n) b.push_back(i + 1);
    blocks.emplace_back(space, b);
  }
  Algebra coarse = Algebra::from_blocks(space, blocks);
  Algebra fine = Algebra::discrete(space);
  std::vector<Rational> prior(coarse.atom_count(),
                              rat(1, (long)coarse.atom_count()));
  std::vector<Rational> post(n, rat(0));
  std::size_t evens = (n + 1) / 2;
  for (std::size_t i = 0; i < n; i += 2) post[i] = rat(1, (long)evens);
  return UpdatePair(Measure(coarse, prior), Measure(fine, post));
}

void BM_classify_update(benchmark::State& state) {
  UpdatePair pair = make_pair((std::size_t)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_update(pair));
}
BENCHMARK(BM_classify_update)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_construct_witness(benchmark::State& state) {
  UpdatePair pair = make_pair((std::size_t)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_witness(pair));
}
BENCHMARK(BM_construct_witness)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_extension_vertices(benchmark::State& state) {
  UpdatePair pair = make_pair((std::size_t)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        extension_vertices(pair.prior(), pair.posterior().algebra()));
}
BENCHMARK(BM_extension_vertices)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_conditional_bounds(benchmark::State& state) {
  UpdatePair pair = make_pair((std::size_t)state.range(0));
  const Event& s1 = pair.evidence();
  Event target = pair.posterior().algebra().atoms()[0];
  for (auto _ : state)
    benchmark::DoNotOptimize(conditional_bounds(
        pair.prior(), pair.posterior().algebra(), s1, target));
}
BENCHMARK(BM_conditional_bounds)->Arg(8)->Arg(12)->Arg(16);

void BM_parse_formula(benchmark::State& state) {
  std::string text = "!(a & b) -> c | !d & (e -> f) | !(g & !h)";
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_parse_formula);

void BM_truth_set(benchmark::State& state) {
  std::vector<std::string> props;
  for (long i = 0; i < state.range(0); ++i)
    props.push_back(std::string(1, (char)('a' + i)));
  SpacePtr space = valuation_space(props);
  Formula f = parse_formula("!(a & b) | (c -> a)");
  for (auto _ : state)
    benchmark::DoNotOptimize(truth_set(f, props, space));
}
BENCHMARK(BM_truth_set)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
