#include "amalgam/witness.hpp"

#include <algorithm>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

long long floor_mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<long long> to_ll(const std::vector<long>& v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Perm evaluate_word(const Word& w, std::span<const Perm> images, int degree) {
  Perm out = Perm::identity(degree);
  for (Letter l : w.letters()) {
    const Perm& p = images[static_cast<std::size_t>(generator_of(l) - 1)];
    out = out * (l > 0 ? p : p.inverse());
  }
  return out;
}

// Preimage in A of a syllable word (bar^-1 on the Abar side).
Word preimage(const DoubleGroup& group, const Syllable& s) {
  return s.side == Side::A ? s.word : group.bar().apply_inverse(s.word);
}

void require_outside_amalgam(const DoubleGroup& group, const DoubleElement& x) {
  if (x.is_identity()) throw PreconditionError("the identity has no nontrivial image anywhere");
  if (x.syllable_count() == 1 && group.in_amalgam(x.syllables()[0].side, x.syllables()[0].word))
    throw PreconditionError("element lies in the amalgamated subgroup; use the retraction route");
  for (const Syllable& s : x.syllables())
    if (group.in_amalgam(s.side, s.word))
      throw PreconditionError("syllable " + to_string(s.word) + " lies in the amalgamated subgroup");
}

SmithForm subgroup_lattice(const DoubleGroup& group) {
  IntMatrix rows;
  for (const Word& c : group.subgroup().generators()) rows.push_back(to_ll(exponent_vector(c)));
  return smith_normal_form(rows, static_cast<std::size_t>(group.alphabet().rank()));
}

// Whether rho(a) lies outside <rho(C), delta_lambda(P)> for some map
// rho: A -> P from the catalog. Fills the proof on success.
bool finite_image_separates(const DoubleGroup& group, const Word& a, int lambda,
                            std::span<const FiniteSolvableGroup> catalog, SyllableProof& proof) {
  const int r = group.alphabet().rank();
  for (const FiniteSolvableGroup& p : catalog) {
    const PermGroup derived = derived_term(p.group(), lambda);
    const auto& elements = p.group().elements();
    std::vector<std::size_t> choice(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<Perm> images;
      for (std::size_t c : choice) images.push_back(elements[c]);
      const Perm image_a = evaluate_word(a, images, p.degree());
      if (!derived.contains(image_a)) {
        std::vector<Perm> gens = derived.generators();
        for (const Word& c : group.subgroup().generators()) gens.push_back(evaluate_word(c, images, p.degree()));
        const PermGroup absorbed = PermGroup::generate(gens, p.degree());
        if (!absorbed.contains(image_a)) {
          proof.image_group = p.name();
          proof.image_hom = images;
          std::ostringstream os;
          os << "map to " << p.name() << " sends the syllable to " << to_cycle_string(image_a)
             << ", outside rho(C) delta_" << lambda << " of order " << absorbed.order();
          proof.evidence = os.str();
          return true;
        }
      }
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == elements.size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  }
  return false;
}

// Decides membership of syllable preimages in C delta_lambda A.
class AmalgamMembership {
 public:
  AmalgamMembership(const DoubleGroup& group, int lambda_max, std::span<const FiniteSolvableGroup> catalog,
                    int derived_cap)
      : group_(group), lambda_max_(lambda_max), catalog_(catalog), cap_(derived_cap) {
    const SubgroupGraph& c = group.subgroup();
    if (c.is_trivial()) {
      mode_ = SeparationMethod::DerivedWordProblem;
    } else if (c.is_normal()) {
      mode_ = SeparationMethod::FiniteQuotient;
      action_ = c.coset_action();
      quotient_ = PermGroup::generate(action_, static_cast<int>(*c.index()));
      for (int l = 0; l <= lambda_max; ++l) derived_.push_back(l == 0 ? quotient_ : derived_subgroup(derived_.back()));
    } else {
      mode_ = SeparationMethod::AbelianLattice;
      lattice_ = subgroup_lattice(group);
    }
  }

  SyllableProof decide(std::size_t position, const Syllable& s) const {
    SyllableProof proof;
    proof.position = position;
    proof.side = s.side;
    proof.word = s.word;
    const Word a = preimage(group_, s);
    std::ostringstream os;
    switch (mode_) {
      case SeparationMethod::DerivedWordProblem: {
        proof.method = mode_;
        if (auto level = first_escaping_level(a, lambda_max_, cap_)) {
          proof.verdict = SyllableVerdict::Separated;
          proof.lambda = *level;
          os << "C trivial; syllable outside delta_" << *level << " A";
        } else {
          proof.verdict = SyllableVerdict::Absorbed;
          os << "C trivial; syllable inside delta_" << lambda_max_ << " A";
        }
        break;
      }
      case SeparationMethod::FiniteQuotient: {
        proof.method = mode_;
        const Perm image = evaluate_word(a, action_, quotient_.degree());
        os << "image " << to_cycle_string(image) << " in A/C of order " << quotient_.order();
        proof.verdict = SyllableVerdict::Absorbed;
        for (int l = 1; l <= lambda_max_; ++l) {
          if (!derived_[static_cast<std::size_t>(l)].contains(image)) {
            proof.verdict = SyllableVerdict::Separated;
            proof.lambda = l;
            os << " lies outside delta_" << l << "(A/C) of order " << derived_[static_cast<std::size_t>(l)].order();
            break;
          }
        }
        if (proof.verdict == SyllableVerdict::Absorbed)
          os << " lies in delta_" << lambda_max_ << "(A/C) of order "
             << derived_[static_cast<std::size_t>(lambda_max_)].order();
        break;
      }
      default: {
        const std::vector<long long> e = to_ll(exponent_vector(a));
        if (!lattice_.in_row_space(e)) {
          proof.method = SeparationMethod::AbelianLattice;
          proof.verdict = SyllableVerdict::Separated;
          proof.lambda = 1;
          os << "exponent vector " << join(e) << " outside the exponent lattice of C";
          break;
        }
        for (int l = 2; l <= lambda_max_; ++l) {
          if (finite_image_separates(group_, a, l, catalog_, proof)) {
            proof.method = SeparationMethod::FiniteImage;
            proof.verdict = SyllableVerdict::Separated;
            proof.lambda = l;
            return proof;
          }
        }
        proof.method = SeparationMethod::None;
        proof.verdict = SyllableVerdict::Unknown;
        os << "exponent vector " << join(e) << " in the lattice of C; no finite image separates up to lambda "
           << lambda_max_ << " (C is not normal)";
        break;
      }
    }
    proof.evidence = os.str();
    return proof;
  }

 private:
  const DoubleGroup& group_;
  int lambda_max_;
  std::span<const FiniteSolvableGroup> catalog_;
  int cap_;
  SeparationMethod mode_ = SeparationMethod::None;
  std::vector<Perm> action_;
  PermGroup quotient_;
  std::vector<PermGroup> derived_;
  SmithForm lattice_;
};

// Iterated commutators of generators lying in delta_lambda A.
std::vector<Word> derived_samples(Alphabet alphabet, int lambda) {
  std::vector<Word> level;
  if (alphabet.rank() < 2) return level;
  const Word a = Word::generator(alphabet, 1);
  const Word b = Word::generator(alphabet, 2);
  level.push_back(commutator(a, b));
  level.push_back(commutator(b, mul(a, b)));
  for (int l = 2; l <= lambda; ++l) {
    std::vector<Word> next;
    next.push_back(commutator(level[0], conjugate(level[0], a)));
    next.push_back(commutator(level[0], level[1]));
    level = std::move(next);
  }
  return level;
}

const FiniteSolvableGroup* find_group(std::span<const FiniteSolvableGroup> catalog, const std::string& name) {
  for (const auto& g : catalog)
    if (g.name() == name) return &g;
  return nullptr;
}

bool recheck_proof(const DoubleGroup& group, const SyllableProof& proof, std::span<const FiniteSolvableGroup> catalog,
                   int derived_cap) {
  if (proof.verdict != SyllableVerdict::Separated || proof.lambda < 1) return false;
  const Word a = preimage(group, {proof.side, proof.word});
  if (proof.lambda == 1) {
    // a in C delta_1 A iff its exponent vector lies in C's exponent lattice.
    return !subgroup_lattice(group).in_row_space(to_ll(exponent_vector(a)));
  }
  switch (proof.method) {
    case SeparationMethod::FiniteQuotient: {
      const SubgroupGraph& c = group.subgroup();
      if (!c.is_normal()) return false;
      const auto action = c.coset_action();
      const PermGroup q = PermGroup::generate(action, static_cast<int>(*c.index()));
      return !derived_term(q, proof.lambda).contains(evaluate_word(a, action, q.degree()));
    }
    case SeparationMethod::DerivedWordProblem:
      if (!group.subgroup().is_trivial()) return false;
      if (proof.lambda == 2) return !magnus_matrix(a).is_identity();
      return !in_derived(a, DerivedLevel{proof.lambda}, derived_cap);
    case SeparationMethod::FiniteImage: {
      const FiniteSolvableGroup* p = find_group(catalog, proof.image_group);
      if (p == nullptr || static_cast<int>(proof.image_hom.size()) != group.alphabet().rank()) return false;
      std::vector<Perm> gens = derived_term(p->group(), proof.lambda).generators();
      for (const Word& c : group.subgroup().generators()) gens.push_back(evaluate_word(c, proof.image_hom, p->degree()));
      return !PermGroup::generate(gens, p->degree()).contains(evaluate_word(a, proof.image_hom, p->degree()));
    }
    default:
      return false;
  }
}

struct Relation {
  std::vector<int> lhs;  // letter codes: 2 * generator index (0-based over 2r) + (inverse ? 1 : 0)
  std::vector<int> rhs;
};

std::vector<int> encode(const Word& w, int offset) {
  std::vector<int> out;
  for (Letter l : w.letters()) out.push_back(2 * (generator_of(l) - 1 + offset) + (l < 0 ? 1 : 0));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t AbelianizedDouble::free_rank() const {
  return static_cast<std::size_t>(generator_count) - smith.rank();
}

std::vector<long long> AbelianizedDouble::torsion() const {
  std::vector<long long> out;
  for (long long d : smith.invariants)
    if (d > 1) out.push_back(d);
  return out;
}

std::string AbelianizedDouble::describe() const {
  std::vector<std::string> parts;
  if (free_rank() > 0) parts.push_back(free_rank() == 1 ? "Z" : "Z^" + std::to_string(free_rank()));
  for (long long d : torsion()) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianizedDouble abelianization(const DoubleGroup& group) {
  const int r = group.alphabet().rank();
  AbelianizedDouble ab;
  ab.generator_count = 2 * r;
  for (const Word& c : group.subgroup().generators()) {
    std::vector<long long> row(static_cast<std::size_t>(2 * r), 0);
    const auto lhs = exponent_vector(c);
    const auto rhs = exponent_vector(group.bar().apply(c));
    for (int i = 0; i < r; ++i) {
      row[static_cast<std::size_t>(i)] = lhs[static_cast<std::size_t>(i)];
      row[static_cast<std::size_t>(r + i)] = -rhs[static_cast<std::size_t>(i)];
    }
    ab.relations.push_back(std::move(row));
  }
  ab.smith = smith_normal_form(ab.relations, static_cast<std::size_t>(2 * r));
  return ab;
}

std::vector<long long> double_exponent_vector(const DoubleGroup& group, const DoubleElement& x) {
  const int r = group.alphabet().rank();
  std::vector<long long> v(static_cast<std::size_t>(2 * r), 0);
  for (const Syllable& s : x.syllables()) {
    const auto e = exponent_vector(s.word);
    const int offset = s.side == Side::A ? 0 : r;
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(offset + i)] += e[static_cast<std::size_t>(i)];
  }
  return v;
}

AbelianImage ab_image(const AbelianizedDouble& ab, const DoubleGroup& group, const DoubleElement& x) {
  AbelianImage img;
  img.exponents = double_exponent_vector(group, x);
  const auto y = ab.smith.transform(img.exponents);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (j < ab.smith.rank()) {
      const long long d = ab.smith.invariants[j];
      if (d > 1) img.torsion_coordinates.push_back(floor_mod(y[j], d));
    } else {
      img.free_coordinates.push_back(y[j]);
    }
  }
  img.zero = std::all_of(img.torsion_coordinates.begin(), img.torsion_coordinates.end(), [](long long c) { return c == 0; }) &&
             std::all_of(img.free_coordinates.begin(), img.free_coordinates.end(), [](long long c) { return c == 0; });
  return img;
}

std::optional<AbelianFunctional> separating_functional(const AbelianizedDouble& ab, const DoubleGroup& group,
                                                       const DoubleElement& x) {
  const auto y = ab.smith.transform(double_exponent_vector(group, x));
  for (std::size_t j = 0; j < y.size(); ++j) {
    long long modulus = 0;
    if (j < ab.smith.rank()) {
      modulus = ab.smith.invariants[j];
      if (modulus == 1 || floor_mod(y[j], modulus) == 0) continue;
    } else if (y[j] == 0) {
      continue;
    }
    AbelianFunctional f;
    f.modulus = modulus;
    for (const auto& row : ab.smith.column_transform) f.coefficients.push_back(row[j]);
    return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string_view method_name(SeparationMethod m) {
  switch (m) {
    case SeparationMethod::FiniteQuotient: return "finite-quotient";
    case SeparationMethod::DerivedWordProblem: return "derived-word-problem";
    case SeparationMethod::AbelianLattice: return "abelian-lattice";
    case SeparationMethod::FiniteImage: return "finite-image";
    case SeparationMethod::None: return "none";
  }
  return "none";
}

std::string_view verdict_name(SyllableVerdict v) {
  switch (v) {
    case SyllableVerdict::Separated: return "separated";
    case SyllableVerdict::Absorbed: return "absorbed";
    case SyllableVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

SeparationResult syllable_separation(const DoubleGroup& group, const DoubleElement& x, int lambda_max,
                                     std::span<const FiniteSolvableGroup> catalog, int derived_cap) {
  if (lambda_max < 1) throw DomainError("lambda_max must be at least 1");
  const DoubleElement nx = x.is_canonical() ? x : group.normalize(x.syllables());
  require_outside_amalgam(group, nx);
  const AmalgamMembership membership(group, lambda_max, catalog, derived_cap);
  SeparationResult result;
  int worst = 0;
  bool all = true;
  for (std::size_t i = 0; i < nx.syllable_count(); ++i) {
    SyllableProof proof = membership.decide(i, nx.syllables()[i]);
    if (proof.verdict == SyllableVerdict::Unknown) result.exact = false;
    if (proof.verdict == SyllableVerdict::Separated)
      worst = std::max(worst, proof.lambda);
    else
      all = false;
    result.proofs.push_back(std::move(proof));
  }
  if (all) result.lambda = worst;
  return result;
}

// ---------------------------------------------------------------------------

HomSearchSummary enumerate_solvable_homs(const DoubleGroup& group, std::span<const FiniteSolvableGroup> catalog,
                                         const HomSearchBudget& budget, const HomVisitor& visit,
                                         std::span<const Word> kernel_samples) {
  const Alphabet alphabet = group.alphabet();
  const int r = alphabet.rank();
  const int n = 2 * r;

  // Relation c = bar(c) is checked as soon as its highest generator is set.
  std::vector<std::vector<Relation>> by_depth(static_cast<std::size_t>(n));
  std::vector<Word> subgroup_gens = group.subgroup().generators();
  for (const Word& c : subgroup_gens) {
    Relation rel{encode(c, 0), encode(group.bar().apply(c), r)};
    int depth = -1;
    for (int code : rel.lhs) depth = std::max(depth, code / 2);
    for (int code : rel.rhs) depth = std::max(depth, code / 2);
    if (depth < 0) continue;
    by_depth[static_cast<std::size_t>(depth)].push_back(std::move(rel));
  }
  for (auto& rels : by_depth)
    std::stable_sort(rels.begin(), rels.end(), [](const Relation& x, const Relation& y) {
      return x.lhs.size() + x.rhs.size() < y.lhs.size() + y.rhs.size();
    });

  std::vector<Word> samples(kernel_samples.begin(), kernel_samples.end());
  if (samples.empty())
    for (int i = 1; i <= r; ++i) samples.push_back(Word::generator(alphabet, i));

  HomSearchSummary summary;
  bool stop = false;
  for (const FiniteSolvableGroup& target : catalog) {
    if (stop) break;
    const CayleyTable table(target.group());
    const int order = static_cast<int>(table.order());
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);

    auto eval = [&](const std::vector<int>& codes) {
      int x = table.identity();
      for (int code : codes) {
        const int g = assignment[static_cast<std::size_t>(code / 2)];
        x = table.mul(x, (code % 2) ? table.inverse(g) : g);
      }
      return x;
    };

    auto report = [&]() {
      DoubleHom hom{&target, {}};
      for (int g : assignment) hom.images.push_back(table.element(g));
      HomFacts facts;
      const PermGroup image = PermGroup::generate(hom.images, target.degree());
      std::vector<Perm> c_images;
      for (const Word& c : subgroup_gens) c_images.push_back(evaluate_word(c, std::span(hom.images).first(static_cast<std::size_t>(r)), target.degree()));
      const PermGroup c_image = PermGroup::generate(c_images, target.degree());
      facts.image_order = image.order();
      facts.subgroup_image_order = c_image.order();
      facts.subgroup_image_is_full = c_image.order() == image.order();
      facts.kernel_images_central = true;
      for (const Word& a : samples) {
        const Perm k = evaluate_word(a, std::span(hom.images).first(static_cast<std::size_t>(r)), target.degree()) *
                       evaluate_word(group.bar().apply(a), std::span(hom.images).subspan(static_cast<std::size_t>(r)), target.degree()).inverse();
        for (const Perm& g : hom.images)
          if (k * g != g * k) facts.kernel_images_central = false;
      }
      ++summary.homs_found;
      if (!visit(hom, facts)) stop = true;
    };

    auto dfs = [&](auto&& self, int depth) -> void {
      if (stop) return;
      if (depth == n) {
        report();
        return;
      }
      for (int e = 0; e < order && !stop; ++e) {
        if (++summary.nodes > budget.node_limit) {
          summary.truncated = true;
          stop = true;
          return;
        }
        assignment[static_cast<std::size_t>(depth)] = e;
        bool ok = true;
        for (const Relation& rel : by_depth[static_cast<std::size_t>(depth)])
          if (eval(rel.lhs) != eval(rel.rhs)) {
            ok = false;
            break;
          }
        if (ok) self(self, depth + 1);
      }
    };
    dfs(dfs, 0);
  }
  return summary;
}

Perm evaluate(const DoubleHom& hom, const DoubleGroup& group, const DoubleElement& x) {
  const std::size_t r = static_cast<std::size_t>(group.alphabet().rank());
  const int degree = hom.group->degree();
  const std::span<const Perm> images(hom.images);
  Perm out = Perm::identity(degree);
  for (const Syllable& s : x.syllables())
    out = out * evaluate_word(s.word, s.side == Side::A ? images.first(r) : images.subspan(r), degree);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view witness_type(const Witness& w) {
  switch (w.index()) {
    case 0: return "solvable_quotient";
    case 1: return "g_lambda_certificate";
    default: return "exhausted";
  }
}

GLambdaCertificate build_quotient_double_certificate(const DoubleGroup& group, const DoubleElement& x, int lambda,
                                                     std::span<const FiniteSolvableGroup> catalog, int derived_cap) {
  const SeparationResult sep = syllable_separation(group, x, lambda, catalog, derived_cap);
  if (!sep.separated())
    throw PreconditionError("syllables are not separated from C delta_" + std::to_string(lambda) + " A");
  GLambdaCertificate cert;
  cert.lambda = lambda;
  cert.syllable_proofs = sep.proofs;
  // bar maps delta_lambda A onto delta_lambda Abar, so the filtrations are
  // compatible on C; spot-check it on iterated commutators.
  for (const Word& g : derived_samples(group.alphabet(), lambda)) {
    if (!in_derived(group.bar().apply(g), DerivedLevel{lambda}, derived_cap))
      throw Error("bar does not preserve delta_" + std::to_string(lambda) + " on " + to_string(g));
    ++cert.compatibility_checks;
  }
  return cert;
}

Witness witness_search(const DoubleGroup& group, const DoubleElement& input, const SearchBudget& budget) {
  const DoubleElement x = input.is_canonical() ? input : group.normalize(input.syllables());
  if (x.is_identity()) throw PreconditionError("witness search needs a nontrivial element");

  auto checked = [&](Witness w) {
    if (!verify_witness(group, x, w, budget)) throw Error("internal: witness failed re-verification");
    return w;
  };

  // Route 1: retraction onto A, then A -> A / delta_lambda A.
  const Word retracted = group.retract(x);
  if (!retracted.empty()) {
    if (auto level = first_escaping_level(retracted, budget.lambda_max, budget.derived_cap)) {
      SolvableQuotientWitness w;
      w.target = SolvableQuotientWitness::Target::DerivedQuotient;
      w.route = 1;
      w.lambda = *level;
      w.derived_length = *level;
      w.group = "A/delta_" + std::to_string(*level) + "A";
      if (*level == 1)
        w.image = "retract " + to_string(retracted) + " has exponent vector " + join(to_ll(exponent_vector(retracted)));
      else if (*level == 2)
        w.image = "retract " + to_string(retracted) + " has Magnus image " + to_string(magnus_matrix(retracted));
      else
        w.image = "retract " + to_string(retracted) + " has a Fox derivative nonzero over Z[A/delta_" +
                  std::to_string(*level - 1) + "A]";
      return checked(w);
    }
  }

  // Route 2: abelianization of D.
  const AbelianizedDouble ab = abelianization(group);
  const AbelianImage image = ab_image(ab, group, x);
  if (!image.zero) {
    SolvableQuotientWitness w;
    w.target = SolvableQuotientWitness::Target::Abelianization;
    w.route = 2;
    w.lambda = 1;
    w.derived_length = 1;
    w.group = ab.describe();
    w.functional = separating_functional(ab, group, x);
    w.image = "torsion " + join(image.torsion_coordinates) + " free " + join(image.free_coordinates);
    return checked(w);
  }

  // Route 3: first catalog homomorphism not killing x.
  std::optional<SolvableQuotientWitness> found;
  const HomSearchSummary summary = enumerate_solvable_homs(
      group, budget.catalog, HomSearchBudget{budget.hom_node_limit},
      [&](const DoubleHom& hom, const HomFacts&) {
        const Perm px = evaluate(hom, group, x);
        if (px.is_identity()) return true;
        SolvableQuotientWitness w;
        w.target = SolvableQuotientWitness::Target::FiniteGroup;
        w.route = 3;
        w.group = hom.group->name();
        w.derived_length = hom.group->derived_length();
        w.lambda = w.derived_length;
        w.hom = hom.images;
        w.image = to_cycle_string(px);
        found = std::move(w);
        return false;
      });
  if (found) return checked(*found);

  // Route 4: quotient double certificate.
  ExhaustedReport exhausted;
  exhausted.lambda_max = budget.lambda_max;
  exhausted.derived_cap = budget.derived_cap;
  for (const auto& g : budget.catalog) exhausted.catalog.push_back(g.name());
  exhausted.hom_node_limit = budget.hom_node_limit;
  exhausted.hom_nodes = summary.nodes;
  exhausted.homs_checked = summary.homs_found;
  exhausted.hom_search_truncated = summary.truncated;
  exhausted.notes.push_back(retracted.empty() ? "retraction: retract is trivial"
                                              : "retraction: retract lies in delta_" + std::to_string(budget.lambda_max) + "A");
  exhausted.notes.push_back("abelianization: image is zero in " + ab.describe());
  exhausted.notes.push_back("finite catalog: every homomorphism found kills the element");

  const bool pure_amalgam = x.syllable_count() == 1 && group.in_amalgam(x.syllables()[0].side, x.syllables()[0].word);
  if (!pure_amalgam) {
    const SeparationResult sep = syllable_separation(group, x, budget.lambda_max, budget.catalog, budget.derived_cap);
    if (sep.separated()) {
      return checked(build_quotient_double_certificate(group, x, *sep.lambda, budget.catalog, budget.derived_cap));
    }
    std::size_t absorbed = 0, unknown = 0;
    for (const auto& p : sep.proofs) {
      if (p.verdict == SyllableVerdict::Absorbed) ++absorbed;
      if (p.verdict == SyllableVerdict::Unknown) ++unknown;
    }
    exhausted.notes.push_back("quotient double: " + std::to_string(absorbed) + " syllable(s) inside C delta_" +
                              std::to_string(budget.lambda_max) + "A, " + std::to_string(unknown) + " undecided");
  } else {
    exhausted.notes.push_back("quotient double: not applicable to an element of C");
  }
  return exhausted;
}

bool verify_witness(const DoubleGroup& group, const DoubleElement& input, const Witness& witness,
                    const SearchBudget& budget) {
  const DoubleElement x = input.is_canonical() ? input : group.normalize(input.syllables());
  if (x.is_identity()) return false;
  const int r = group.alphabet().rank();

  if (const auto* w = std::get_if<SolvableQuotientWitness>(&witness)) {
    switch (w->target) {
      case SolvableQuotientWitness::Target::DerivedQuotient: {
        for (const Word& c : group.subgroup().generators())
          if (group.retract(group.element(Side::A, c)) != group.retract(group.element(Side::Abar, group.bar().apply(c))))
            return false;
        const Word retracted = group.retract(x);
        if (w->lambda < 1) return false;
        if (w->lambda == 1) {
          const auto e = exponent_vector(retracted);
          return std::any_of(e.begin(), e.end(), [](long v) { return v != 0; });
        }
        if (w->lambda == 2) return !magnus_matrix(retracted).is_identity();
        return !in_derived(retracted, DerivedLevel{w->lambda}, budget.derived_cap);
      }
      case SolvableQuotientWitness::Target::Abelianization: {
        if (!w->functional) return false;
        const auto& f = *w->functional;
        auto apply = [&](const std::vector<long long>& v) {
          long long s = 0;
          for (std::size_t i = 0; i < v.size(); ++i) s += f.coefficients[i] * v[i];
          return f.modulus > 0 ? floor_mod(s, f.modulus) : s;
        };
        if (f.coefficients.size() != static_cast<std::size_t>(2 * r)) return false;
        for (const Word& c : group.subgroup().generators()) {
          const DoubleElement lhs = group.element(Side::A, c);
          std::vector<long long> row(static_cast<std::size_t>(2 * r), 0);
          const auto ec = exponent_vector(c);
          const auto ebar = exponent_vector(group.bar().apply(c));
          for (int i = 0; i < r; ++i) {
            row[static_cast<std::size_t>(i)] = ec[static_cast<std::size_t>(i)];
            row[static_cast<std::size_t>(r + i)] = -ebar[static_cast<std::size_t>(i)];
          }
          if (apply(row) != 0) return false;
        }
        return apply(double_exponent_vector(group, x)) != 0;
      }
      case SolvableQuotientWitness::Target::FiniteGroup: {
        const FiniteSolvableGroup* target = find_group(budget.catalog, w->group);
        if (target == nullptr || w->hom.size() != static_cast<std::size_t>(2 * r)) return false;
        const int degree = target->degree();
        for (const Perm& p : w->hom)
          if (!target->group().contains(p)) return false;
        if (!derived_length(PermGroup::generate(w->hom, degree))) return false;
        const std::span<const Perm> images(w->hom);
        for (const Word& c : group.subgroup().generators())
          if (evaluate_word(c, images.first(static_cast<std::size_t>(r)), degree) !=
              evaluate_word(group.bar().apply(c), images.subspan(static_cast<std::size_t>(r)), degree))
            return false;
        return !evaluate(DoubleHom{target, w->hom}, group, x).is_identity();
      }
    }
    return false;
  }

  if (const auto* cert = std::get_if<GLambdaCertificate>(&witness)) {
    if (cert->syllable_proofs.size() != x.syllable_count()) return false;
    for (std::size_t i = 0; i < x.syllable_count(); ++i) {
      const SyllableProof& p = cert->syllable_proofs[i];
      const Syllable& s = x.syllables()[i];
      if (p.side != s.side || p.word != s.word || p.lambda > cert->lambda) return false;
      if (group.in_amalgam(s.side, s.word)) return false;
      if (!recheck_proof(group, p, budget.catalog, budget.derived_cap)) return false;
    }
    return true;
  }
  return false;
}

}  // namespace amalgam
