#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgam/perm_group.hpp"
#include "amalgam/word.hpp"

namespace amalgam {

// A homomorphism from the free group onto a transitive permutation group,
// given by one permutation per free generator.
struct FiniteQuotientMap {
  int degree = 1;
  std::vector<Perm> images;

  // Throws DomainError on degree mismatches or a non-transitive action.
  void validate(Alphabet alphabet) const;
  // Image of a word, letters applied left to right.
  Perm evaluate(const Word& w) const;
};

struct CosetDecomposition {
  Word subgroup_part;   // c, an element of C
  Word representative;  // t, the canonical representative of the right coset Cw
};

// Folded core graph (Stallings graph) of a finitely generated subgroup C of
// the free group. Vertices are numbered in BFS order from the basepoint 0 with
// edge order a, a^-1, b, b^-1, ...; this numbering is canonical, so two graphs
// of the same subgroup have identical adjacency tables.
//
// Right cosets Cw correspond to vertices of the full Schreier graph, which is
// the core plus hanging trees. A coset outside the core is identified by the
// core vertex where the reading of w leaves the graph together with the
// remaining suffix, so canonical representatives are computed directly and
// every query is const.
class SubgroupGraph {
 public:
  static constexpr int kBasepoint = 0;

  static SubgroupGraph build(std::span<const Word> generators, Alphabet alphabet);

  Alphabet alphabet() const { return Alphabet(rank_); }
  std::size_t vertex_count() const { return transversal_.size(); }
  // Number of positively oriented edges.
  std::size_t edge_count() const;
  std::optional<int> target(int vertex, Letter l) const;

  bool member(const Word& w) const;
  // Finite index iff the graph is complete; nullopt means infinite index.
  std::optional<std::size_t> index() const;
  CosetDecomposition coset_decompose(const Word& w) const;
  bool is_normal() const;
  bool is_trivial() const { return edge_count() == 0; }

  // Basis read from the edges outside the BFS spanning tree, in vertex then
  // generator order. Size is edge_count - vertex_count + 1.
  const std::vector<Word>& free_basis() const { return basis_; }
  // The generating set the graph was built from (the free basis for kernels of
  // finite quotients).
  const std::vector<Word>& generators() const { return generators_; }
  // Spanning-tree path from the basepoint to a vertex.
  const Word& transversal(int vertex) const { return transversal_[static_cast<std::size_t>(vertex)]; }

  // Action of each free generator on the cosets, for finite index only.
  std::vector<Perm> coset_action() const;

  // BFS-ordered adjacency encoding; equal iff the graphs are isomorphic as
  // based labelled graphs.
  std::string canonical_encoding() const;

 private:
  friend SubgroupGraph kernel_of_finite_quotient(const FiniteQuotientMap& q, Alphabet alphabet);

  // Takes an arbitrary folded graph (adjacency by vertex * 2 * rank + slot,
  // -1 for none, vertex 0 the basepoint); trims, renumbers and computes the
  // transversal and basis.
  static SubgroupGraph from_folded(int rank, const std::vector<int>& adjacency, std::size_t vertices);

  int raw_target(int vertex, int slot) const {
    return adjacency_[static_cast<std::size_t>(vertex) * static_cast<std::size_t>(2 * rank_) + static_cast<std::size_t>(slot)];
  }

  int rank_ = 1;
  std::vector<int> adjacency_;
  std::vector<Word> transversal_;
  std::vector<int> tree_parent_;
  std::vector<Letter> tree_letter_;  // letter of the tree edge parent -> vertex
  std::vector<Word> basis_;
  std::vector<Word> generators_;
};

inline SubgroupGraph build_subgroup_graph(std::span<const Word> generators, Alphabet alphabet) {
  return SubgroupGraph::build(generators, alphabet);
}

// The Stallings graph of ker(q): the Cayley graph of the permutation group
// generated by q's images, based at the identity.
SubgroupGraph kernel_of_finite_quotient(const FiniteQuotientMap& q, Alphabet alphabet);

}  // namespace amalgam
