#include "sigbasis/sigtree.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sigbasis/error.hpp"
#include "sigbasis/text.hpp"

namespace sigbasis {

std::size_t SigTree::add(std::size_t parent, Monomial multiplier, std::size_t rank) {
  if (parent >= nodes_.size())
    throw ContractError("parent node does not exist");
  std::size_t id = nodes_.size();
  nodes_.push_back(SigTreeNode{parent, {}, std::move(multiplier), rank});
  nodes_[parent].children.push_back(id);
  return id;
}

void SigTree::permute_children(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (SigTreeNode& n : nodes_)
    std::shuffle(n.children.begin(), n.children.end(), rng);
}

std::vector<TreeViolation> validate_sigtree(const SigTree& tree, const SigSet& g, bool unique_ranks) {
  std::vector<TreeViolation> out;
  if (tree.size() != g.size() + 1) {
    out.push_back({"edge", 0, "tree has " + std::to_string(tree.size() - 1) + " labelled nodes for " +
                                  std::to_string(g.size()) + " members"});
    return out;
  }
  const Space& ps = *g.part_space();
  const Space& ss = *g.sig_space();
  const MonoidSpec& monoid = g.monoid();
  const Ring& ring = ps.ring();
  auto label = [&](std::size_t n) -> const SigPair& { return g[SigTree::member_of(n)]; };

  for (std::size_t n = 1; n < tree.size(); ++n) {
    const SigTreeNode& node = tree.node(n);
    const SigPair& child = label(n);
    if (node.parent >= n) {
      out.push_back({"edge", n, "parent is not older than the child"});
      continue;
    }
    if (node.parent == 0)
      continue;
    const SigPair& parent = label(node.parent);
    const Monomial& a = node.multiplier;
    if (!monoid.contains(a) || !(parent.signature.times(a) == child.signature)) {
      out.push_back({"T1", n, "sig is not " + format_monomial(a, ring) + " times the parent signature"});
    } else if (!ps.less(child.part.lm(), parent.part.lm().times(a))) {
      out.push_back({"T1", n, "leading monomial did not drop below the multiplied parent"});
    }
    if (tree.node(node.parent).rank >= node.rank)
      out.push_back({"T4", n, "rank does not increase from parent to child"});
    if (!child.part.is_zero()) {
      for (std::size_t p = node.parent; p != 0; p = tree.node(p).parent) {
        const SigPair& anc = label(p);
        if (anc.part.is_zero())
          continue;
        auto b = divide(anc.part.lm(), child.part.lm(), monoid);
        if (b && ss.less(anc.signature.times(*b), child.signature)) {
          out.push_back({"T2", n, "regular-reducible by ancestor " + std::to_string(p)});
          break;
        }
      }
    }
  }

  for (std::size_t n = 0; n < tree.size(); ++n) {
    const auto& kids = tree.node(n).children;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = 0; j < kids.size(); ++j) {
        std::size_t p = kids[i], q = kids[j];
        if (tree.node(p).rank >= tree.node(q).rank)
          continue;
        if (monoid_divides(label(p).signature, label(q).signature, monoid))
          out.push_back({"T3", q, "older sibling " + std::to_string(p) + " divides its signature"});
      }
    }
  }

  if (unique_ranks) {
    std::vector<std::size_t> ranks;
    for (std::size_t n = 1; n < tree.size(); ++n)
      ranks.push_back(tree.node(n).rank);
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
      out.push_back({"T4", 0, "ranks are not unique"});
  }
  return out;
}

bool edge_products_consistent(const SigTree& tree, const SigSet& g) {
  for (std::size_t n = 1; n < tree.size(); ++n) {
    Monomial product = Monomial::one(g.part_space()->width());
    std::size_t p = n;
    while (tree.node(p).parent != 0) {
      product = product.times(tree.node(p).multiplier);
      p = tree.node(p).parent;
    }
    if (!(g[SigTree::member_of(p)].signature.times(product) == g[SigTree::member_of(n)].signature))
      return false;
  }
  return true;
}

std::vector<Monomial> minimal_leading_monomials(const SigSet& g) {
  std::vector<Monomial> lms;
  for (const SigPair& p : g)
    if (!p.part.is_zero())
      lms.push_back(p.part.lm());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < lms.size() && keep; ++j) {
      if (i == j)
        continue;
      if (lms[j] == lms[i] ? j < i : monoid_divides(lms[j], lms[i], g.monoid()))
        keep = false;
    }
    if (keep)
      out.push_back(lms[i]);
  }
  return out;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string export_dot(const SigTree& tree, const SigSet& g, const std::vector<Monomial>& highlight) {
  std::ostringstream out;
  out << "digraph sigtree {\n";
  if (tree.size() > 1)
    out << "  node [shape=box];\n";
  const Ring& ring = g.part_space()->ring();
  for (std::size_t n = 1; n < tree.size(); ++n) {
    const SigPair& p = g[SigTree::member_of(n)];
    std::string lm = p.part.is_zero() ? "0" : format_monomial(p.part.lm(), ring);
    out << "  n" << n << " [label=\"" << escape(std::to_string(p.id) + ": " + lm) << "\"";
    if (!p.part.is_zero() && std::find(highlight.begin(), highlight.end(), p.part.lm()) != highlight.end())
      out << ", style=bold";
    out << "];\n";
  }
  for (std::size_t n = 1; n < tree.size(); ++n) {
    const SigTreeNode& node = tree.node(n);
    if (node.parent == 0)
      continue;
    out << "  n" << node.parent << " -> n" << n << " [label=\"" << escape(format_monomial(node.multiplier, ring))
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace sigbasis
