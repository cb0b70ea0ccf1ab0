// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "amalgam/witness.hpp"
#include "testing.hpp"

namespace amalgam {
namespace {

namespace t = testing;

const Alphabet F2(2);

Word W(const char* text) { return parse_word(text, F2); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

DoubleGroup parity_double() {
  const FiniteQuotientMap q{2, {Perm::from_one_based(std::vector<int>{2, 1}), Perm::identity(2)}};
  return DoubleGroup::over(kernel_of_finite_quotient(q, F2));
}

std::vector<std::pair<std::string, DoubleGroup>> sample_doubles() {
  std::vector<std::pair<std::string, DoubleGroup>> out;
  out.emplace_back("C=<b>", DoubleGroup::make(F2, std::vector<Word>{W("b")}));
  out.emplace_back("C=<[a,b]>", DoubleGroup::make(F2, std::vector<Word>{commutator(W("a"), W("b"))}));
  out.emplace_back("C=ker(F2->Z/2)", parity_double());
  return out;
}

Outcome stallings_oracle() {
  t::Rng rng(2024);
  const auto words = t::all_words_upto(2, 8);
  std::size_t checked = 0, finite = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> gens;
    std::vector<std::vector<Letter>> raw;
    for (int i = rng.uniform(1, 3); i > 0; --i) {
      gens.push_back(t::random_word(rng, F2, 1, 4));
      raw.emplace_back(gens.back().letters().begin(), gens.back().letters().end());
    }
    const SubgroupGraph g = SubgroupGraph::build(gens, F2);
    const auto ball = t::subgroup_ball(raw, 12);
    for (const auto& w : words) {
      ++checked;
      if (g.member(t::to_word(w, F2)) != ball.contains(w)) {
        std::ostringstream os;
        os << "subgroup " << trial << ": membership of " << to_string(t::to_word(w, F2)) << " disagrees";
        return {false, os.str()};
      }
    }
    if (auto n = g.index()) {
      ++finite;
      if (g.free_basis().size() != *n + 1) return {false, "Nielsen-Schreier rank fails for subgroup " + std::to_string(trial)};
    }
  }
  return {true, std::to_string(checked) + " membership queries, " + std::to_string(finite) + " finite-index rank checks"};
}

Outcome fox_magnus() {
  std::size_t exhaustive = 0;
  for (const auto& letters : t::all_words_upto(2, 8)) {
    const Word w = t::to_word(letters, F2);
    const auto e = exponent_vector(w);
    if (e[0] != 0 || e[1] != 0) continue;
    ++exhaustive;
    const bool fox = in_derived(w, DerivedLevel{2});
    if (fox != magnus_matrix(w).is_identity() || fox != t::in_second_derived_by_paths(letters))
      return {false, "disagreement on " + to_string(w)};
  }
  t::Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = t::random_word(rng, F2, 0, 12);
    if (in_derived(w, DerivedLevel{2}) != magnus_matrix(w).is_identity()) return {false, "disagreement on " + to_string(w)};
  }
  return {true, std::to_string(exhaustive) + " balanced words of length <= 8 and 1000 random words of length <= 12"};
}

Outcome injects_to_factors() {
  std::size_t checked = 0;
  const auto words = all_reduced_words(F2, 5);
  for (const auto& [name, d] : sample_doubles())
    for (const Word& w : words)
      for (Side side : {Side::A, Side::Abar}) {
        ++checked;
        if (d.is_kernel_member(d.element(side, w)) != w.empty())
          return {false, name + ": (" + std::string(side_name(side)) + ": " + to_string(w) + ") misclassified"};
      }
  return {true, std::to_string(checked) + " single-syllable elements in 3 doubles"};
}

Outcome kernel_commutes_with_c() {
  const DoubleGroup d = parity_double();
  const auto samples = all_reduced_words(F2, 4);
  const CommutationReport r = d.check_ck_commutation(samples);
  if (!r.all_pass() || d.subgroup().generators().size() != 3 || r.checks != 3 * samples.size())
    return {false, "normal case: " + std::to_string(r.failures.size()) + " failures in " + std::to_string(r.checks) + " checks"};
  const DoubleGroup bad = DoubleGroup::make(F2, std::vector<Word>{W("a")});
  const CommutationReport f = bad.check_ck_commutation(std::vector<Word>{W("b")});
  if (f.all_pass()) return {false, "no failure reported for C=<a>"};
  return {true, std::to_string(r.checks) + " commutators trivial for ker(F2->Z/2); C=<a> fails with [a, kernel_gen(b)] = " +
                    to_string(f.failures[0].commutator)};
}

Outcome kernel_not_central() {
  std::ostringstream os;
  for (const auto& [name, d] : sample_doubles()) {
    bool found = false;
    for (const Word& a : all_reduced_words(F2, 2)) {
      const DoubleElement k = d.kernel_gen(a).element();
      if (k.is_identity()) continue;
      const auto gens = d.generators();
      for (std::size_t i = 0; i < gens.size() && !found; ++i) {
        const DoubleElement c = d.commutator(k, gens[i]);
        if (!c.is_identity()) {
          static const char* const names[] = {"a", "b", "abar", "bbar"};
          os << name << ": [kernel_gen(" << to_string(a) << "), " << names[i] << "] has "
             << c.syllable_count() << " syllables; ";
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) return {false, name + ": no noncommuting pair found"};
  }
  std::string s = os.str();
  s.resize(s.size() - 2);
  return {true, s};
}

Outcome separable_witnesses() {
  const DoubleGroup d = parity_double();
  SearchBudget budget;
  budget.lambda_max = 3;
  t::Rng rng(33);
  int done = 0;
  std::map<int, int> routes;
  while (done < 100) {
    const DoubleElement x = d.normalize(t::random_syllables(rng, F2, rng.uniform(1, 6), 4));
    if (x.is_identity()) continue;
    ++done;
    const Witness w = witness_search(d, x, budget);
    if (std::holds_alternative<ExhaustedReport>(w)) return {false, "exhausted on " + to_string(x)};
    if (!verify_witness(d, x, w, budget)) return {false, "unverified witness for " + to_string(x)};
    routes[std::holds_alternative<GLambdaCertificate>(w) ? 4 : std::get<SolvableQuotientWitness>(w).route]++;
  }
  // Elements of the kernel of the retraction skip route 1.
  int kernel_done = 0;
  while (kernel_done < 100) {
    DoubleElement x = d.normalize({});
    for (int i = rng.uniform(1, 3); i > 0; --i) {
      const DoubleElement k = d.kernel_gen(t::random_word(rng, F2, 1, 3)).element();
      const DoubleElement g = d.normalize(t::random_syllables(rng, F2, rng.uniform(0, 2), 3));
      x = d.multiply(x, rng.coin() ? k : d.commutator(k, g));
    }
    if (x.is_identity()) continue;
    ++kernel_done;
    const Witness w = witness_search(d, x, budget);
    if (std::holds_alternative<ExhaustedReport>(w)) return {false, "exhausted on kernel element " + to_string(x)};
    if (!verify_witness(d, x, w, budget)) return {false, "unverified witness for " + to_string(x)};
    routes[std::holds_alternative<GLambdaCertificate>(w) ? 4 : std::get<SolvableQuotientWitness>(w).route]++;
  }
  std::ostringstream os;
  os << "100 random elements and 100 kernel elements verified; routes";
  for (const auto& [r, n] : routes) os << ' ' << r << ':' << n;
  return {true, os.str()};
}

Outcome perfect_quotient() {
  NegativeDemoOptions options;
  options.order_bound = 24;
  const NegativeDemoReport r = negative_demo(options);
  std::ostringstream os;
  os << "|A/C|=" << r.quotient_order << ", " << r.homs_checked << " homs into " << r.catalog.size()
     << " groups of order <= 24, witness " << witness_type(r.witness);
  const bool ok = r.quotient_perfect && r.d_nontrivial && r.d_in_kernel && r.ab_image_zero && r.d_killed_by_all &&
                  r.mechanism_holds && !r.hom_search_truncated && r.homs_checked > 0 &&
                  std::holds_alternative<ExhaustedReport>(r.witness);
  if (!ok)
    os << "; nontrivial=" << r.d_nontrivial << " ab_zero=" << r.ab_image_zero << " killed=" << r.d_killed_by_all
       << " mechanism=" << r.mechanism_holds << " truncated=" << r.hom_search_truncated;
  return {ok, os.str()};
}

// Kernel generators from different left cosets aC, preferring a and b.
std::vector<Word> kernel_samples(const DoubleGroup& d) {
  std::vector<Word> picked;
  std::vector<Word> candidates{W("a"), W("b")};
  for (const Word& w : all_reduced_words(F2, 3)) candidates.push_back(w);
  for (const Word& w : candidates) {
    if (picked.size() == 2) break;
    if (d.subgroup().member(w)) continue;
    bool fresh = true;
    for (const Word& p : picked) fresh = fresh && !d.subgroup().member(mul(inv(p), w));
    if (fresh) picked.push_back(w);
  }
  return picked;
}

Outcome kernel_freeness() {
  std::ostringstream os;
  for (const auto& [name, d] : sample_doubles()) {
    const auto picks = kernel_samples(d);
    std::vector<DoubleElement> k;
    for (const Word& p : picks) k.push_back(d.kernel_gen(p).element());
    const int rank = static_cast<int>(k.size());
    std::size_t relations = 0;
    for (const auto& letters : t::all_words_upto(rank, 6)) {
      if (letters.empty()) continue;
      DoubleElement x = d.normalize({});
      for (Letter l : letters) {
        const DoubleElement& g = k[static_cast<std::size_t>(std::abs(l) - 1)];
        x = d.multiply(x, l > 0 ? g : d.inverse(g));
      }
      ++relations;
      if (x.is_identity()) return {false, name + ": relation of length " + std::to_string(letters.size()) + " holds"};
    }
    os << name << ": " << relations << " words in " << rank << " generator(s) kernel_gen(";
    for (std::size_t i = 0; i < picks.size(); ++i) os << (i ? "," : "") << to_string(picks[i]);
    os << "); ";
  }
  std::string s = os.str();
  s.resize(s.size() - 2);
  return {true, s};
}

}  // namespace
}  // namespace amalgam

int main() {
  using namespace amalgam;
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "membership agrees with brute-force enumeration; Nielsen-Schreier rank", 60, stallings_oracle},
      {2, "Fox criterion agrees with the Magnus matrix at lambda=2", 120, fox_magnus},
      {3, "the retraction is injective on each factor", 60, injects_to_factors},
      {4, "[C, K] = 1 for normal C; failure reported for C=<a>", 60, kernel_commutes_with_c},
      {5, "[K, D] != 1 in each sample double", 60, kernel_not_central},
      {6, "separable double: verified witness for 100 random elements", 300, separable_witnesses},
      {7, "perfect-quotient double: every solvable image of order <= 24 kills d", 600, perfect_quotient},
      {8, "no short relation among sampled kernel generators", 60, kernel_freeness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
