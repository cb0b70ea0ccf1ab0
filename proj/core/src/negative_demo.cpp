#include <random>

#include "amalgam/errors.hpp"
#include "amalgam/witness.hpp"

namespace amalgam {
namespace {

Word random_word(Alphabet alphabet, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<int> gen(1, alphabet.rank());
  std::bernoulli_distribution negate(0.5);
  std::vector<Letter> letters;
  const int n = length(rng);
  while (static_cast<int>(letters.size()) < n) {
    const Letter l = negate(rng) ? -gen(rng) : gen(rng);
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return reduce(letters, alphabet);
}

}  // namespace

FiniteQuotientMap default_perfect_quotient() {
  const int a[] = {2, 3, 4, 5, 1};
  const int b[] = {2, 3, 1, 4, 5};
  return FiniteQuotientMap{5, {Perm::from_one_based(a), Perm::from_one_based(b)}};
}

DoubleGroup build_perfect_quotient_double(const FiniteQuotientMap& q, Alphabet alphabet) {
  q.validate(alphabet);
  if (!is_perfect(PermGroup::generate(q.images, q.degree)))
    throw DomainError("the image of the quotient map is not perfect");
  return DoubleGroup::over(kernel_of_finite_quotient(q, alphabet));
}

DoubleElement negative_demo_element(const DoubleGroup& group) {
  if (group.alphabet().rank() < 2) throw PreconditionError("negative demo needs rank at least 2");
  const DoubleElement k = group.kernel_gen(Word::generator(group.alphabet(), 1)).element();
  const DoubleElement b = group.element(Side::A, Word::generator(group.alphabet(), 2));
  return group.commutator(k, b);
}

NegativeDemoReport negative_demo(const NegativeDemoOptions& options) {
  const Alphabet alphabet(static_cast<int>(options.quotient.images.size()));
  NegativeDemoReport report;
  const PermGroup image = PermGroup::generate(options.quotient.images, options.quotient.degree);
  report.quotient_order = image.order();
  report.quotient_perfect = is_perfect(image);
  const DoubleGroup group = build_perfect_quotient_double(options.quotient, alphabet);
  report.index = *group.subgroup().index();
  report.basis_size = group.subgroup().free_basis().size();

  const DoubleElement d = negative_demo_element(group);
  report.d = to_string(d);
  report.d_nontrivial = !d.is_identity();
  report.d_in_kernel = group.is_kernel_member(d);
  const AbelianizedDouble ab = abelianization(group);
  report.ab_image_zero = ab_image(ab, group, d).zero;

  std::mt19937_64 rng(options.seed);
  for (int i = 1; i <= alphabet.rank(); ++i) report.kernel_samples.push_back(Word::generator(alphabet, i));
  for (std::size_t i = 0; i < options.random_kernel_samples; ++i) report.kernel_samples.push_back(random_word(alphabet, rng));
  report.ck_commutation = group.check_ck_commutation(report.kernel_samples);

  SearchBudget budget = options.budget;
  budget.catalog = restrict_catalog(options.budget.catalog, options.order_bound);
  for (const auto& g : budget.catalog) report.catalog.push_back(g.name());
  report.witness = witness_search(group, d, budget);

  const HomSearchSummary summary = enumerate_solvable_homs(
      group, budget.catalog, HomSearchBudget{budget.hom_node_limit},
      [&](const DoubleHom& hom, const HomFacts& facts) {
        if (!evaluate(hom, group, d).is_identity()) report.d_killed_by_all = false;
        if (!facts.subgroup_image_is_full || !facts.kernel_images_central) {
          report.mechanism_holds = false;
          ++report.mechanism_failures;
        }
        return true;
      },
      report.kernel_samples);
  report.homs_checked = summary.homs_found;
  report.hom_nodes = summary.nodes;
  report.hom_search_truncated = summary.truncated;
  return report;
}

}  // namespace amalgam
