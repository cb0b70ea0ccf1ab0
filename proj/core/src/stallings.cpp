#include "amalgam/stallings.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

// Union-find folding of labelled graphs. Every edge is stored in both
// directions; a second edge with an occupied slot queues a merge.
class Folder {
 public:
  explicit Folder(int rank) : slots_(2 * rank) {}

  int new_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    adjacency_.insert(adjacency_.end(), static_cast<std::size_t>(slots_), -1);
    return static_cast<int>(parent_.size()) - 1;
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void add_edge(int u, Letter l, int v) {
    u = find(u);
    v = find(v);
    attach(u, slot_of(l), v);
    attach(v, slot_of(-l), u);
    drain();
  }

  std::size_t size() const { return parent_.size(); }

  // Adjacency of the root vertices with targets resolved to roots.
  std::vector<int> resolved() {
    std::vector<int> out(adjacency_.size(), -1);
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(static_cast<int>(v)) != static_cast<int>(v)) continue;
      for (int s = 0; s < slots_; ++s) {
        int t = at(static_cast<int>(v), s);
        if (t >= 0) out[v * static_cast<std::size_t>(slots_) + static_cast<std::size_t>(s)] = find(t);
      }
    }
    return out;
  }

 private:
  int& at(int v, int s) { return adjacency_[static_cast<std::size_t>(v) * static_cast<std::size_t>(slots_) + static_cast<std::size_t>(s)]; }

  void attach(int u, int s, int v) {
    int& slot = at(u, s);
    if (slot < 0)
      slot = v;
    else
      pending_.emplace_back(slot, v);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.back();
      pending_.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);  // keep the smaller id (the basepoint stays 0)
      parent_[static_cast<std::size_t>(y)] = x;
      for (int s = 0; s < slots_; ++s) {
        int ty = at(y, s);
        if (ty >= 0) attach(x, s, ty);
      }
    }
  }

  int slots_;
  std::vector<int> parent_;
  std::vector<int> adjacency_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

void FiniteQuotientMap::validate(Alphabet alphabet) const {
  if (degree < 1) throw DomainError("quotient degree must be positive");
  if (static_cast<int>(images.size()) != alphabet.rank())
    throw DomainError("quotient needs one permutation per generator (" + std::to_string(alphabet.rank()) +
                      "), got " + std::to_string(images.size()));
  for (const Perm& p : images)
    if (p.degree() != degree) throw DomainError("permutation degree differs from quotient degree");
  if (!is_transitive(images, degree)) throw DomainError("quotient permutations do not act transitively");
}

Perm FiniteQuotientMap::evaluate(const Word& w) const {
  Perm out = Perm::identity(degree);
  for (Letter l : w.letters()) {
    const Perm& p = images[static_cast<std::size_t>(generator_of(l) - 1)];
    out = out * (l > 0 ? p : p.inverse());
  }
  return out;
}

SubgroupGraph SubgroupGraph::build(std::span<const Word> generators, Alphabet alphabet) {
  Folder folder(alphabet.rank());
  const int base = folder.new_vertex();
  std::vector<Word> kept;
  for (const Word& g : generators) {
    if (g.rank() != alphabet.rank()) throw DomainError("subgroup generator has the wrong rank");
    if (g.empty()) continue;
    kept.push_back(g);
    int v = base;
    for (std::size_t k = 0; k < g.length(); ++k) {
      const int next = (k + 1 == g.length()) ? base : folder.new_vertex();
      folder.add_edge(v, g[k], next);
      v = next;
    }
  }
  SubgroupGraph graph = from_folded(alphabet.rank(), folder.resolved(), folder.size());
  graph.generators_ = std::move(kept);
  return graph;
}

SubgroupGraph SubgroupGraph::from_folded(int rank, const std::vector<int>& adjacency, std::size_t vertices) {
  const int slots = 2 * rank;
  auto at = [&](std::size_t v, int s) { return adjacency[v * static_cast<std::size_t>(slots) + static_cast<std::size_t>(s)]; };

  // Trim hanging trees: repeatedly drop non-basepoint vertices of degree 1.
  std::vector<int> degree(vertices, 0);
  std::vector<bool> alive(vertices, false);
  for (std::size_t v = 0; v < vertices; ++v)
    for (int s = 0; s < slots; ++s)
      if (at(v, s) >= 0) {
        ++degree[v];
        alive[v] = true;
      }
  alive[0] = true;
  std::vector<int> removed_slot(vertices * static_cast<std::size_t>(slots), 0);
  std::deque<std::size_t> queue;
  for (std::size_t v = 1; v < vertices; ++v)
    if (alive[v] && degree[v] == 1) queue.push_back(v);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (!alive[v] || degree[v] != 1) continue;
    alive[v] = false;
    for (int s = 0; s < slots; ++s) {
      int t = at(v, s);
      if (t < 0 || removed_slot[v * static_cast<std::size_t>(slots) + static_cast<std::size_t>(s)]) continue;
      const int back = slot_of(-letter_of_slot(s));
      removed_slot[static_cast<std::size_t>(t) * static_cast<std::size_t>(slots) + static_cast<std::size_t>(back)] = 1;
      --degree[static_cast<std::size_t>(t)];
      if (t != 0 && degree[static_cast<std::size_t>(t)] == 1) queue.push_back(static_cast<std::size_t>(t));
    }
  }
  auto live_target = [&](std::size_t v, int s) -> int {
    int t = at(v, s);
    if (t < 0 || removed_slot[v * static_cast<std::size_t>(slots) + static_cast<std::size_t>(s)] ||
        !alive[static_cast<std::size_t>(t)])
      return -1;
    return t;
  };

  // BFS renumbering from the basepoint; the BFS tree is the transversal.
  SubgroupGraph g;
  g.rank_ = rank;
  const Alphabet alphabet(rank);
  std::vector<int> new_id(vertices, -1);
  std::vector<std::size_t> order{0};
  new_id[0] = 0;
  g.transversal_.push_back(Word(alphabet));
  g.tree_parent_.push_back(-1);
  g.tree_letter_.push_back(0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t v = order[k];
    for (int s = 0; s < slots; ++s) {
      const int t = live_target(v, s);
      if (t < 0 || new_id[static_cast<std::size_t>(t)] >= 0) continue;
      new_id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
      order.push_back(static_cast<std::size_t>(t));
      const Letter l = letter_of_slot(s);
      g.transversal_.push_back(mul(g.transversal_[k], Word::letter(alphabet, l)));
      g.tree_parent_.push_back(static_cast<int>(k));
      g.tree_letter_.push_back(l);
    }
  }
  g.adjacency_.assign(order.size() * static_cast<std::size_t>(slots), -1);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int s = 0; s < slots; ++s) {
      const int t = live_target(order[k], s);
      if (t >= 0) g.adjacency_[k * static_cast<std::size_t>(slots) + static_cast<std::size_t>(s)] = new_id[static_cast<std::size_t>(t)];
    }

  // Free basis from the non-tree positive edges.
  for (std::size_t u = 0; u < order.size(); ++u) {
    for (int gen = 1; gen <= rank; ++gen) {
      const int v = g.raw_target(static_cast<int>(u), slot_of(gen));
      if (v < 0) continue;
      const bool tree_edge =
          (g.tree_parent_[static_cast<std::size_t>(v)] == static_cast<int>(u) && g.tree_letter_[static_cast<std::size_t>(v)] == gen) ||
          (g.tree_parent_[u] == v && g.tree_letter_[u] == -gen);
      if (tree_edge) continue;
      g.basis_.push_back(mul(mul(g.transversal_[u], Word::generator(alphabet, gen)), inv(g.transversal_[static_cast<std::size_t>(v)])));
    }
  }
  g.generators_ = g.basis_;
  return g;
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (int gen = 1; gen <= rank_; ++gen)
      if (raw_target(static_cast<int>(v), slot_of(gen)) >= 0) ++count;
  return count;
}

std::optional<int> SubgroupGraph::target(int vertex, Letter l) const {
  if (!alphabet().contains(l)) throw DomainError("letter outside alphabet");
  const int t = raw_target(vertex, slot_of(l));
  if (t < 0) return std::nullopt;
  return t;
}

bool SubgroupGraph::member(const Word& w) const {
  if (w.rank() != rank_) throw DomainError("word rank does not match subgroup graph");
  int v = kBasepoint;
  for (Letter l : w.letters()) {
    v = raw_target(v, slot_of(l));
    if (v < 0) return false;
  }
  return v == kBasepoint;
}

std::optional<std::size_t> SubgroupGraph::index() const {
  for (int t : adjacency_)
    if (t < 0) return std::nullopt;
  return vertex_count();
}

CosetDecomposition SubgroupGraph::coset_decompose(const Word& w) const {
  if (w.rank() != rank_) throw DomainError("word rank does not match subgroup graph");
  int v = kBasepoint;
  std::size_t consumed = 0;
  for (; consumed < w.length(); ++consumed) {
    const int next = raw_target(v, slot_of(w[consumed]));
    if (next < 0) break;
    v = next;
  }
  // The suffix cannot start with the inverse of the tree letter into v (that
  // edge exists), so the representative below is already reduced.
  Word representative = mul(transversal_[static_cast<std::size_t>(v)], w.slice(consumed, w.length()));
  Word subgroup_part = mul(w, inv(representative));
  return {std::move(subgroup_part), std::move(representative)};
}

bool SubgroupGraph::is_normal() const {
  if (is_trivial()) return true;
  // A nontrivial finitely generated normal subgroup of a free group of rank
  // >= 2 has finite index; at rank 1 every nontrivial subgroup does.
  if (!index()) return false;
  const Alphabet a = alphabet();
  for (const Word& c : basis_) {
    for (int s = 0; s < 2 * rank_; ++s) {
      const Letter l = letter_of_slot(s);
      if (!member(conjugate(c, Word::letter(a, l)))) return false;
    }
  }
  return true;
}

std::vector<Perm> SubgroupGraph::coset_action() const {
  if (!index()) throw DomainError("coset action requires a finite-index subgroup");
  std::vector<Perm> out;
  for (int gen = 1; gen <= rank_; ++gen) {
    std::vector<int> images(vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) images[v] = raw_target(static_cast<int>(v), slot_of(gen));
    out.emplace_back(std::move(images));
  }
  return out;
}

std::string SubgroupGraph::canonical_encoding() const {
  std::ostringstream os;
  os << "r" << rank_ << ";v" << vertex_count() << ";";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (int s = 0; s < 2 * rank_; ++s) os << raw_target(static_cast<int>(v), s) << ",";
    os << ";";
  }
  return os.str();
}

SubgroupGraph kernel_of_finite_quotient(const FiniteQuotientMap& q, Alphabet alphabet) {
  q.validate(alphabet);
  const int slots = 2 * alphabet.rank();
  std::vector<Perm> moves;
  for (int s = 0; s < slots; ++s) {
    const Letter l = letter_of_slot(s);
    const Perm& p = q.images[static_cast<std::size_t>(generator_of(l) - 1)];
    moves.push_back(l > 0 ? p : p.inverse());
  }
  std::map<Perm, int> id;
  std::vector<Perm> elements{Perm::identity(q.degree)};
  id.emplace(elements[0], 0);
  std::vector<int> adjacency;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int s = 0; s < slots; ++s) {
      Perm next = elements[k] * moves[static_cast<std::size_t>(s)];
      auto [it, inserted] = id.emplace(next, static_cast<int>(elements.size()));
      if (inserted) {
        if (elements.size() >= 1'000'000) throw BudgetError("finite quotient is too large");
        elements.push_back(std::move(next));
      }
      adjacency.push_back(it->second);
    }
  }
  return SubgroupGraph::from_folded(alphabet.rank(), adjacency, elements.size());
}

}  // namespace amalgam
