#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "amalgam/catalog.hpp"
#include "amalgam/doubles.hpp"
#include "amalgam/smith.hpp"
#include "amalgam/solvable.hpp"

namespace amalgam {

// ---------------------------------------------------------------------------
// Abelianization D / delta_1 D
// ---------------------------------------------------------------------------

// Z^(2 rank) (coordinates a_1..a_r, abar_1..abar_r) modulo one relation row per
// generator c of C: exponents of c minus exponents of bar(c).
struct AbelianizedDouble {
  int generator_count = 0;
  IntMatrix relations;
  SmithForm smith;

  std::size_t free_rank() const;
  std::vector<long long> torsion() const;  // invariant factors > 1
  // e.g. "Z^3 + Z/2"; "0" for the trivial group.
  std::string describe() const;
};

AbelianizedDouble abelianization(const DoubleGroup& group);

// Total exponent vector of A-side and Abar-side letters.
std::vector<long long> double_exponent_vector(const DoubleGroup& group, const DoubleElement& x);

struct AbelianImage {
  bool zero = true;
  std::vector<long long> exponents;  // in Z^(2 rank)
  std::vector<long long> torsion_coordinates;
  std::vector<long long> free_coordinates;
};

AbelianImage ab_image(const AbelianizedDouble& ab, const DoubleGroup& group, const DoubleElement& x);

// A homomorphism D -> Z/modulus (modulus 0 meaning Z), as a functional on
// exponent vectors, that kills every relation row.
struct AbelianFunctional {
  std::vector<long long> coefficients;
  long long modulus = 0;
};

// A functional that is nonzero on x, when ab_image(x) is nonzero.
std::optional<AbelianFunctional> separating_functional(const AbelianizedDouble& ab, const DoubleGroup& group,
                                                       const DoubleElement& x);

// ---------------------------------------------------------------------------
// Membership of syllables in C delta_lambda A
// ---------------------------------------------------------------------------

enum class SeparationMethod {
  FiniteQuotient,      // C normal of finite index: image in A/C vs delta_lambda(A/C)
  DerivedWordProblem,  // C trivial: C delta_lambda A = delta_lambda A
  AbelianLattice,      // lambda = 1 for any C: exponent lattice of C
  FiniteImage,         // a map A -> P with rho(a) outside rho(C) delta_lambda(P)
  None,
};

std::string_view method_name(SeparationMethod m);

enum class SyllableVerdict {
  Separated,  // a outside C delta_lambda A at the recorded lambda (and above)
  Absorbed,   // a inside C delta_lambda A for every lambda <= lambda_max, decided exactly
  Unknown,    // no proof either way within budget
};

std::string_view verdict_name(SyllableVerdict v);

struct SyllableProof {
  std::size_t position = 0;
  Side side = Side::A;
  Word word;  // as written in the element (Abar letters for Abar syllables)
  SyllableVerdict verdict = SyllableVerdict::Unknown;
  int lambda = 0;  // least separating level, when Separated
  SeparationMethod method = SeparationMethod::None;
  std::string evidence;
  // FiniteImage only: the catalog group and images of a_1..a_r.
  std::string image_group;
  std::vector<Perm> image_hom;
};

struct SeparationResult {
  std::optional<int> lambda;  // least lambda separating every syllable
  std::vector<SyllableProof> proofs;
  bool exact = true;  // every verdict came from an exact decision procedure

  bool separated() const { return lambda.has_value(); }
};

// Throws PreconditionError for the identity, for an element of C, or for a
// syllable lying in the amalgam.
SeparationResult syllable_separation(const DoubleGroup& group, const DoubleElement& x, int lambda_max,
                                     std::span<const FiniteSolvableGroup> catalog = {},
                                     int derived_cap = kDefaultMaxDerivedLevel);

// ---------------------------------------------------------------------------
// Homomorphisms into finite solvable groups
// ---------------------------------------------------------------------------

struct DoubleHom {
  const FiniteSolvableGroup* group = nullptr;
  std::vector<Perm> images;  // a_1..a_r then abar_1..abar_r
};

struct HomFacts {
  std::size_t image_order = 0;
  std::size_t subgroup_image_order = 0;
  bool subgroup_image_is_full = false;  // C mu = D mu
  bool kernel_images_central = false;   // sampled kernel generators central in D mu
};

struct HomSearchBudget {
  std::uint64_t node_limit = 50'000'000;
};

struct HomSearchSummary {
  std::size_t homs_found = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

// Return false to stop the enumeration.
using HomVisitor = std::function<bool(const DoubleHom&, const HomFacts&)>;

// Every assignment of the 2 rank generators of D into each catalog group that
// satisfies the relations c = bar(c), in catalog order and then lexicographic
// order of element indices. Kernel samples default to the generators a_i.
HomSearchSummary enumerate_solvable_homs(const DoubleGroup& group, std::span<const FiniteSolvableGroup> catalog,
                                         const HomSearchBudget& budget, const HomVisitor& visit,
                                         std::span<const Word> kernel_samples = {});

Perm evaluate(const DoubleHom& hom, const DoubleGroup& group, const DoubleElement& x);

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

struct SearchBudget {
  int lambda_max = 3;
  std::vector<FiniteSolvableGroup> catalog = default_catalog();
  std::uint64_t hom_node_limit = 50'000'000;
  int derived_cap = kDefaultMaxDerivedLevel;
};

struct SolvableQuotientWitness {
  enum class Target { DerivedQuotient, Abelianization, FiniteGroup };

  Target target = Target::DerivedQuotient;
  int route = 0;
  int lambda = 0;  // DerivedQuotient: lambda with retract(x) outside delta_lambda A
  std::string group;
  int derived_length = 0;
  std::vector<Perm> hom;  // FiniteGroup only
  std::optional<AbelianFunctional> functional;  // Abelianization only
  std::string image;
};

struct GLambdaCertificate {
  int lambda = 0;
  std::vector<SyllableProof> syllable_proofs;
  std::size_t compatibility_checks = 0;
};

struct ExhaustedReport {
  int lambda_max = 0;
  int derived_cap = 0;
  std::vector<std::string> catalog;
  std::uint64_t hom_node_limit = 0;
  std::uint64_t hom_nodes = 0;
  std::size_t homs_checked = 0;
  bool hom_search_truncated = false;
  std::vector<std::string> notes;
};

using Witness = std::variant<SolvableQuotientWitness, GLambdaCertificate, ExhaustedReport>;

std::string_view witness_type(const Witness& w);

// Throws PreconditionError if the element does not separate at lambda or is
// the identity or lies in C.
GLambdaCertificate build_quotient_double_certificate(const DoubleGroup& group, const DoubleElement& x, int lambda,
                                                     std::span<const FiniteSolvableGroup> catalog = {},
                                                     int derived_cap = kDefaultMaxDerivedLevel);

// Routes in fixed order: retraction, abelianization, finite catalog, quotient
// double certificate. Every returned witness has passed verify_witness.
// Throws PreconditionError for the identity.
Witness witness_search(const DoubleGroup& group, const DoubleElement& x, const SearchBudget& budget = {});

// Independent re-check of a witness. Exhausted reports never verify.
bool verify_witness(const DoubleGroup& group, const DoubleElement& x, const Witness& w,
                    const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Perfect-quotient doubles
// ---------------------------------------------------------------------------

// a -> (1 2 3 4 5), b -> (1 2 3) onto A5.
FiniteQuotientMap default_perfect_quotient();

// Double over C = ker(q). Throws DomainError if the image of q is not perfect.
DoubleGroup build_perfect_quotient_double(const FiniteQuotientMap& q, Alphabet alphabet);

// [kernel_gen(a), (A: b)]
DoubleElement negative_demo_element(const DoubleGroup& group);

struct NegativeDemoOptions {
  FiniteQuotientMap quotient = default_perfect_quotient();
  std::size_t order_bound = 24;
  SearchBudget budget;
  std::uint64_t seed = 1;
  std::size_t random_kernel_samples = 4;
};

struct NegativeDemoReport {
  std::size_t quotient_order = 0;
  bool quotient_perfect = false;
  std::size_t index = 0;
  std::size_t basis_size = 0;
  std::string d;
  bool d_nontrivial = false;
  bool d_in_kernel = false;
  bool ab_image_zero = false;
  CommutationReport ck_commutation;
  Witness witness;
  std::vector<std::string> catalog;
  std::size_t homs_checked = 0;
  std::uint64_t hom_nodes = 0;
  bool hom_search_truncated = false;
  bool d_killed_by_all = true;
  bool mechanism_holds = true;  // C mu = D mu and kernel images central, every hom
  std::size_t mechanism_failures = 0;
  std::vector<Word> kernel_samples;
};

NegativeDemoReport negative_demo(const NegativeDemoOptions& options = {});

}  // namespace amalgam
