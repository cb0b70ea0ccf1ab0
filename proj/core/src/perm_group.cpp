#include "amalgam/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int p : images_) {
    if (p < 0 || p >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(p)])
      throw DomainError("not a permutation of 0.." + std::to_string(images_.size() - 1));
    seen[static_cast<std::size_t>(p)] = true;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm Perm::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based;
  zero_based.reserve(images.size());
  for (int p : images) zero_based.push_back(p - 1);
  try {
    return Perm(std::move(zero_based));
  } catch (const DomainError&) {
    std::ostringstream os;
    os << "not a permutation of 1.." << images.size() << ": [";
    for (std::size_t i = 0; i < images.size(); ++i) os << (i ? "," : "") << images[i];
    os << "]";
    throw DomainError(os.str());
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degree mismatch");
  Perm out;
  out.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) out.images_[i] = b[a.images_[i]];
  return out;
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

std::string to_cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p[start] == start) continue;
    any = true;
    os << '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      os << (first ? "" : " ") << x + 1;
      first = false;
      x = p[x];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::string to_image_list(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.degree(); ++i) os << (i ? "," : "") << p[i] + 1;
  os << ']';
  return os.str();
}

PermGroup PermGroup::generate(std::span<const Perm> generators, int degree, std::size_t max_order) {
  PermGroup g;
  g.degree_ = degree;
  g.generators_.assign(generators.begin(), generators.end());
  for (const Perm& p : generators)
    if (p.degree() != degree) throw DomainError("generator degree does not match group degree");
  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : generators) {
      Perm y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw BudgetError("permutation group exceeds " + std::to_string(max_order) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  g.elements_.assign(seen.begin(), seen.end());
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return other.contains(p); });
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::set<Perm> commutators;
  for (const Perm& x : g.elements())
    for (const Perm& y : g.elements()) commutators.insert(commutator(x, y));
  commutators.erase(Perm::identity(g.degree()));
  std::vector<Perm> gens(commutators.begin(), commutators.end());
  return PermGroup::generate(gens, g.degree());
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

PermGroup derived_term(const PermGroup& g, int lambda) {
  if (lambda < 0) throw DomainError("derived level must be non-negative");
  PermGroup current = g;
  for (int i = 0; i < lambda; ++i) {
    PermGroup next = derived_subgroup(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::optional<int> derived_length(const PermGroup& g) {
  auto series = derived_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_solvable(const PermGroup& g) { return derived_length(g).has_value(); }

bool is_perfect(const PermGroup& g) { return !g.is_trivial() && derived_subgroup(g) == g; }

bool is_transitive(std::span<const Perm> generators, int degree) {
  if (degree <= 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const Perm& s : generators) {
      for (int y : {s[x], s.inverse()[x]}) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          ++count;
          queue.push_back(y);
        }
      }
    }
  }
  return count == degree;
}

CayleyTable::CayleyTable(const PermGroup& group) : elements_(group.elements()) {
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = index_of(elements_[i] * elements_[j]);
    inverse_[i] = index_of(elements_[i].inverse());
  }
  identity_ = index_of(Perm::identity(group.degree()));
}

int CayleyTable::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DomainError("permutation not in group");
  return static_cast<int>(it - elements_.begin());
}

}  // namespace amalgam
