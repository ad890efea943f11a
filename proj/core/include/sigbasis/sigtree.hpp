#ifndef SIGBASIS_SIGTREE_HPP
#define SIGBASIS_SIGTREE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sigbasis/sigpair.hpp"

namespace sigbasis {

struct SigTreeNode {
  std::size_t parent = 0;
  std::vector<std::size_t> children;  ///< in insertion order
  /// sig(node) = multiplier * sig(parent); the identity for inputs.
  Monomial multiplier;
  std::size_t rank = 0;
};

/// Node 0 is a virtual root whose children are the inputs. Node i > 0 is
/// labelled by member i - 1 of the accompanying sigset.
class SigTree {
public:
  SigTree() : nodes_(1) {}

  std::size_t size() const { return nodes_.size(); }
  const SigTreeNode& node(std::size_t i) const { return nodes_.at(i); }
  static std::size_t member_of(std::size_t node) { return node - 1; }
  static std::size_t node_of(std::size_t member) { return member + 1; }

  std::size_t add(std::size_t parent, Monomial multiplier, std::size_t rank);
  /// Shuffles every child list; used to check that descent does not depend
  /// on iteration order.
  void permute_children(std::uint64_t seed);

private:
  std::vector<SigTreeNode> nodes_;
};

struct TreeViolation {
  std::string rule;  ///< T1..T4 or "edge"
  std::size_t node = 0;
  std::string detail;
};

/// Checks the well-formedness conditions against the labels in g.
/// unique_ranks is false for batched runs, where one batch shares a rank.
std::vector<TreeViolation> validate_sigtree(const SigTree& tree, const SigSet& g, bool unique_ranks = true);

/// Every node signature equals the product of edge multipliers times its input's signature.
bool edge_products_consistent(const SigTree& tree, const SigSet& g);

/// Minimal elements, under divisibility, of the nonzero leading monomials.
std::vector<Monomial> minimal_leading_monomials(const SigSet& g);

/// Graphviz rendering: node label "id: lm" (or "id: 0"), edge label the
/// multiplier, bold nodes for leading monomials listed in highlight.
std::string export_dot(const SigTree& tree, const SigSet& g, const std::vector<Monomial>& highlight);

} // namespace sigbasis

#endif
