#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace amalgam {

// A permutation of {0, ..., degree-1} acting on the right: (a * b) applies a
// first, then b. Text I/O is 1-based.
class Perm {
 public:
  Perm() = default;
  // Throws DomainError unless `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  // From a 1-based image-of-point list such as [2,3,4,5,1].
  static Perm from_one_based(std::span<const int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// a^-1 b^-1 a b, matching the word convention.
Perm commutator(const Perm& a, const Perm& b);

// Disjoint cycle notation, 1-based, "()" for the identity.
std::string to_cycle_string(const Perm& p);
// 1-based image list, e.g. "[2,3,1]".
std::string to_image_list(const Perm& p);

// A finite permutation group stored by full element list. Meant for the small
// groups used as quotients here (orders up to a few thousand).
class PermGroup {
 public:
  // Closure of the generators. Throws BudgetError past `max_order` elements.
  static PermGroup generate(std::span<const Perm> generators, int degree,
                            std::size_t max_order = 200'000);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_subgroup_of(const PermGroup& other) const;

  friend bool operator==(const PermGroup& g, const PermGroup& h) { return g.elements_ == h.elements_; }

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
};

PermGroup derived_subgroup(const PermGroup& g);

// G = delta_0 G, delta_1 G, ... up to (and including) the first term equal to
// its own derived subgroup.
std::vector<PermGroup> derived_series(const PermGroup& g);

// delta_lambda G.
PermGroup derived_term(const PermGroup& g, int lambda);

// Derived length when solvable (0 for the trivial group), nullopt otherwise.
std::optional<int> derived_length(const PermGroup& g);
bool is_solvable(const PermGroup& g);
// Nontrivial and equal to its derived subgroup.
bool is_perfect(const PermGroup& g);

bool is_transitive(std::span<const Perm> generators, int degree);

// Dense multiplication table over the elements of a group, for fast
// evaluation of words during homomorphism search.
class CayleyTable {
 public:
  explicit CayleyTable(const PermGroup& group);

  std::size_t order() const { return elements_.size(); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * elements_.size() + static_cast<std::size_t>(y)]; }
  int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  const Perm& element(int x) const { return elements_[static_cast<std::size_t>(x)]; }
  int index_of(const Perm& p) const;

 private:
  std::vector<Perm> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

}  // namespace amalgam
