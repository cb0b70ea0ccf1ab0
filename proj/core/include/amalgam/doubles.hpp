#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/stallings.hpp"
#include "amalgam/word.hpp"

namespace amalgam {

enum class Side { A, Abar };

std::string_view side_name(Side side);

struct Syllable {
  Side side = Side::A;
  Word word;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// An automorphism of the free group given by generator images, with its
// inverse computed by Nielsen reduction of the image tuple.
class FreeAutomorphism {
 public:
  static FreeAutomorphism identity(Alphabet alphabet);
  // Throws DomainError if the images do not generate the free group, or if
  // Nielsen reduction does not bring them to a permuted signed basis.
  static FreeAutomorphism from_images(Alphabet alphabet, std::vector<Word> images);

  bool is_identity() const { return identity_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }
  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;

 private:
  Alphabet alphabet_{1};
  bool identity_ = true;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

// Element of the double D = A *_C Abar. Canonical elements are produced only
// by DoubleGroup and satisfy: sides alternate; every syllable after the first
// is a nontrivial canonical right-coset representative of C (resp. Cbar); the
// first syllable carries the amalgam part; an element of C is a single A-side
// syllable; the identity has no syllables. Abar-side words are written in the
// letters of Abar.
class DoubleElement {
 public:
  DoubleElement() = default;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }
  bool is_canonical() const { return canonical_; }

  friend bool operator==(const DoubleElement&, const DoubleElement&) = default;

 private:
  friend class DoubleGroup;
  std::vector<Syllable> syllables_;
  bool canonical_ = true;
};

// A canonical element of K = ker(retraction).
class KernelElement {
 public:
  const DoubleElement& element() const { return element_; }

 private:
  friend class DoubleGroup;
  explicit KernelElement(DoubleElement e) : element_(std::move(e)) {}
  DoubleElement element_;
};

struct CommutationFailure {
  Word subgroup_generator;
  Word sample;
  DoubleElement commutator;
};

struct CommutationReport {
  bool subgroup_normal = false;
  std::size_t checks = 0;
  std::vector<CommutationFailure> failures;

  bool all_pass() const { return failures.empty(); }
};

inline constexpr std::size_t kDefaultSyllableBound = 10'000;

class DoubleGroup {
 public:
  // bar defaults to the identity renaming a_i -> abar_i.
  static DoubleGroup make(Alphabet alphabet, std::span<const Word> subgroup_generators,
                          std::optional<std::vector<Word>> bar = std::nullopt);
  static DoubleGroup over(SubgroupGraph subgroup, std::optional<std::vector<Word>> bar = std::nullopt);

  Alphabet alphabet() const { return subgroup_.alphabet(); }
  const SubgroupGraph& subgroup() const { return subgroup_; }
  const FreeAutomorphism& bar() const { return bar_; }

  std::size_t syllable_bound() const { return syllable_bound_; }
  void set_syllable_bound(std::size_t bound) { syllable_bound_ = bound; }

  // Whether a factor word lies in the amalgamated subgroup (C or Cbar).
  bool in_amalgam(Side side, const Word& w) const;

  // Canonical form. Throws BudgetError if the working syllable stack grows
  // past syllable_bound().
  DoubleElement normalize(std::span<const Syllable> raw) const;
  DoubleElement element(Side side, const Word& w) const;
  // The generators a_1..a_r followed by abar_1..abar_r.
  std::vector<DoubleElement> generators() const;

  DoubleElement multiply(const DoubleElement& x, const DoubleElement& y) const;
  DoubleElement inverse(const DoubleElement& x) const;
  // x^-1 y^-1 x y
  DoubleElement commutator(const DoubleElement& x, const DoubleElement& y) const;
  bool equal(const DoubleElement& x, const DoubleElement& y) const;

  // The retraction D -> A: identity on A, bar^-1 on Abar.
  Word retract(const DoubleElement& x) const;
  // a * bar(a)^-1
  KernelElement kernel_gen(const Word& a) const;
  bool is_kernel_member(const DoubleElement& x) const;

  // Tests [c, kernel_gen(a)] = 1 for every stored generator c of C and every
  // sample a.
  CommutationReport check_ck_commutation(std::span<const Word> samples) const;

 private:
  DoubleGroup(SubgroupGraph subgroup, FreeAutomorphism bar)
      : subgroup_(std::move(subgroup)), bar_(std::move(bar)) {}

  SubgroupGraph subgroup_;
  FreeAutomorphism bar_;
  std::size_t syllable_bound_ = kDefaultSyllableBound;
};

inline DoubleGroup make_double(Alphabet alphabet, std::span<const Word> subgroup_generators,
                               std::optional<std::vector<Word>> bar = std::nullopt) {
  return DoubleGroup::make(alphabet, subgroup_generators, std::move(bar));
}

// "A: ab | Abar: Ba"; "1" or an empty string is the identity. The result is
// normalized.
DoubleElement parse_element(std::string_view text, const DoubleGroup& group);
std::vector<Syllable> parse_syllables(std::string_view text, Alphabet alphabet);
std::string to_string(const DoubleElement& x);
std::string to_string(std::span<const Syllable> syllables);

}  // namespace amalgam
