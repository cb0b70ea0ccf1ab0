#pragma once

#include <string>
#include <vector>

#include "amalgam/perm_group.hpp"

namespace amalgam {

// A named finite permutation group whose solvability has been checked by
// computing its derived series down to the trivial group.
class FiniteSolvableGroup {
 public:
  // Throws DomainError if the group is not solvable.
  static FiniteSolvableGroup make(std::string name, int degree, std::vector<Perm> generators);

  const std::string& name() const { return name_; }
  int degree() const { return group_.degree(); }
  const std::vector<Perm>& generators() const { return group_.generators(); }
  const PermGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  int derived_length() const { return derived_length_; }

 private:
  std::string name_;
  PermGroup group_;
  int derived_length_ = 0;
};

// trivial, Z2, Z3, Z4, Z2^2, S3, D4, Q8, Z6, A4, D6, S4 (ascending order up to
// ties), each as a permutation group.
std::vector<FiniteSolvableGroup> default_catalog();

// Catalog entries of order <= bound, preserving order.
std::vector<FiniteSolvableGroup> restrict_catalog(const std::vector<FiniteSolvableGroup>& catalog,
                                                  std::size_t order_bound);

}  // namespace amalgam
