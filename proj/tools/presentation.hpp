#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/catalog.hpp"
#include "amalgam/doubles.hpp"
#include "amalgam/stallings.hpp"

namespace amalgam::cli {

// Flat key-value file:
//
//   rank = 2
//   subgroup = ["aa", "b", "abA"]
//   bar = ["a", "b"]            # optional
//
// or, instead of subgroup, a quotient block whose kernel is C:
//
//   degree = 5
//   perm.a = [2,3,4,5,1]
//   perm.b = [2,3,1,4,5]
//
// Values are JSON literals; '#' starts a comment outside strings.
struct Presentation {
  int rank = 0;
  std::optional<std::vector<std::string>> subgroup;
  std::optional<std::vector<std::string>> bar;
  std::optional<FiniteQuotientMap> quotient;

  Alphabet alphabet() const { return Alphabet(rank); }
  SubgroupGraph subgroup_graph() const;
  DoubleGroup double_group() const;
};

Presentation parse_presentation(std::istream& in);
Presentation load_presentation(const std::string& path);

// Sections of the form
//
//   [Z5]
//   degree = 5
//   perm.x = [2,3,4,5,1]
//
// each naming one permutation group; solvability is checked on load.
std::vector<FiniteSolvableGroup> parse_catalog(std::istream& in);
std::vector<FiniteSolvableGroup> load_catalog(const std::string& path);

}  // namespace amalgam::cli
