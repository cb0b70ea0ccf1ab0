#include "amalgam/catalog.hpp"

#include <initializer_list>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

FiniteSolvableGroup entry(std::string name, int degree, std::initializer_list<std::vector<int>> gens) {
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(Perm::from_one_based(g));
  return FiniteSolvableGroup::make(std::move(name), degree, std::move(perms));
}

}  // namespace

FiniteSolvableGroup FiniteSolvableGroup::make(std::string name, int degree, std::vector<Perm> generators) {
  FiniteSolvableGroup g;
  g.name_ = std::move(name);
  g.group_ = PermGroup::generate(generators, degree);
  auto length = amalgam::derived_length(g.group_);
  if (!length) throw DomainError("catalog group " + g.name_ + " is not solvable");
  g.derived_length_ = *length;
  return g;
}

std::vector<FiniteSolvableGroup> default_catalog() {
  std::vector<FiniteSolvableGroup> out;
  out.push_back(entry("trivial", 1, {}));
  out.push_back(entry("Z2", 2, {{2, 1}}));
  out.push_back(entry("Z3", 3, {{2, 3, 1}}));
  out.push_back(entry("Z4", 4, {{2, 3, 4, 1}}));
  out.push_back(entry("Z2xZ2", 4, {{2, 1, 4, 3}, {3, 4, 1, 2}}));
  out.push_back(entry("S3", 3, {{2, 1, 3}, {2, 3, 1}}));
  out.push_back(entry("D4", 4, {{2, 3, 4, 1}, {3, 2, 1, 4}}));
  // Right regular representation on 1, -1, i, -i, j, -j, k, -k.
  out.push_back(entry("Q8", 8, {{3, 4, 2, 1, 8, 7, 5, 6}, {5, 6, 7, 8, 2, 1, 4, 3}}));
  out.push_back(entry("Z6", 6, {{2, 3, 4, 5, 6, 1}}));
  out.push_back(entry("A4", 4, {{2, 3, 1, 4}, {2, 1, 4, 3}}));
  out.push_back(entry("D6", 6, {{2, 3, 4, 5, 6, 1}, {1, 6, 5, 4, 3, 2}}));
  out.push_back(entry("S4", 4, {{2, 3, 4, 1}, {2, 1, 3, 4}}));
  return out;
}

std::vector<FiniteSolvableGroup> restrict_catalog(const std::vector<FiniteSolvableGroup>& catalog,
                                                  std::size_t order_bound) {
  std::vector<FiniteSolvableGroup> out;
  for (const auto& g : catalog)
    if (g.order() <= order_bound) out.push_back(g);
  return out;
}

}  // namespace amalgam
