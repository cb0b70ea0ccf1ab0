#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "amalgam/doubles.hpp"
#include "amalgam/solvable.hpp"
#include "amalgam/stallings.hpp"
#include "amalgam/witness.hpp"
#include "amalgam/word.hpp"

namespace {

using namespace amalgam;

const Alphabet kRank2(2);

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> raw;
  raw.reserve(length);
  while (raw.size() < length) raw.push_back(letter_of_slot(pick(rng)));
  return reduce(raw, kRank2);
}

std::vector<Word> random_words(std::size_t count, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_word(rng, length));
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const auto words = random_words(64, static_cast<std::size_t>(state.range(0)), 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(words[i % 64], inv(words[(i + 1) % 64])));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Arg(16)->Arg(256)->Arg(4096);

void BM_KernelOfA5(benchmark::State& state) {
  const FiniteQuotientMap q = default_perfect_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(kernel_of_finite_quotient(q, kRank2).free_basis().size());
}
BENCHMARK(BM_KernelOfA5);

void BM_CosetDecompose(benchmark::State& state) {
  const SubgroupGraph g = kernel_of_finite_quotient(default_perfect_quotient(), kRank2);
  const auto words = random_words(64, 64, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.coset_decompose(words[i++ % 64]).representative.length());
}
BENCHMARK(BM_CosetDecompose);

void BM_InDerived(benchmark::State& state) {
  const int lambda = static_cast<int>(state.range(0));
  Word w = commutator(parse_word("a", kRank2), parse_word("b", kRank2));
  Word u = commutator(parse_word("b", kRank2), parse_word("ab", kRank2));
  for (int k = 1; k < lambda; ++k) {
    Word next = commutator(w, u);
    u = commutator(u, conjugate(w, parse_word("a", kRank2)));
    w = next;
  }
  const Word probe = mul(w, parse_word("a", kRank2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_derived(w, DerivedLevel{lambda}));
    benchmark::DoNotOptimize(in_derived(probe, DerivedLevel{lambda}));
  }
}
BENCHMARK(BM_InDerived)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_Normalize(benchmark::State& state) {
  const std::vector<Word> gens{parse_word("aa", kRank2), parse_word("b", kRank2), parse_word("abA", kRank2)};
  const DoubleGroup d = DoubleGroup::make(kRank2, gens);
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 6, 3);
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < words.size(); ++i) raw.push_back({i % 2 == 0 ? Side::A : Side::Abar, words[i]});
  for (auto _ : state) benchmark::DoNotOptimize(d.normalize(raw).syllable_count());
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(64)->Arg(512);

void BM_HomEnumeration(benchmark::State& state) {
  const std::vector<Word> gens{parse_word("aa", kRank2), parse_word("b", kRank2), parse_word("abA", kRank2)};
  const DoubleGroup d = DoubleGroup::make(kRank2, gens);
  const auto catalog = default_catalog();
  for (auto _ : state) {
    const auto summary = enumerate_solvable_homs(d, catalog, {}, [](const DoubleHom&, const HomFacts&) { return true; });
    benchmark::DoNotOptimize(summary.homs_found);
  }
}
BENCHMARK(BM_HomEnumeration)->Unit(benchmark::kMillisecond);

void BM_WitnessSearch(benchmark::State& state) {
  const std::vector<Word> gens{parse_word("aa", kRank2), parse_word("b", kRank2), parse_word("abA", kRank2)};
  const DoubleGroup d = DoubleGroup::make(kRank2, gens);
  const DoubleElement x = d.kernel_gen(parse_word("ab", kRank2)).element();
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(d, x).index());
}
BENCHMARK(BM_WitnessSearch)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
