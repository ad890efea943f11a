#ifndef SIGBASIS_ENGINE_HPP
#define SIGBASIS_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigbasis/critical.hpp"
#include "sigbasis/sigpair.hpp"
#include "sigbasis/sigtree.hpp"
#include "sigbasis/trace.hpp"

namespace sigbasis {

struct Strategy {
  enum class Kind { in_order, min_lm, f5, f5_pruned, f4 };

  Kind kind = Kind::in_order;
  std::size_t batch_size = 1;  ///< only meaningful for f4

  static Strategy in_order() { return {Kind::in_order, 1}; }
  static Strategy min_lm() { return {Kind::min_lm, 1}; }
  static Strategy f5() { return {Kind::f5, 1}; }
  static Strategy f5_pruned() { return {Kind::f5_pruned, 1}; }
  static Strategy f4(std::size_t batch);

  std::string name() const;
  bool operator==(const Strategy&) const = default;
};

/// Accepts "in-order", "min-lm", "f5", "f5-pruned", "f4" (underscores also accepted).
Strategy parse_strategy(std::string_view name, std::size_t batch = 4);

struct Limits {
  std::size_t max_insertions = 1000000;
  double max_seconds = 300.0;
};

struct RunOptions {
  Strategy strategy;
  Limits limits;
  /// Check the queue invariant at every loop head and safety of every insertion.
  bool check_invariants = false;
  /// Pop a seeded pseudo-random queue element instead of the minimum (not for f4).
  std::optional<std::uint64_t> shuffled_pop_seed;
  /// Visit sigtree children in a seeded shuffled order during descent.
  std::optional<std::uint64_t> child_order_seed;
  TraceSink trace;
};

struct RunStats {
  std::size_t iterations = 0;
  std::size_t insertions = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  std::size_t peak_queue = 0;
};

struct RunResult {
  SigSet basis;
  SigTree tree;
  std::vector<Monomial> syzygies;
  RunStats stats;
  Strategy strategy;
  /// False if some monoid critical-multiple search could not certify completeness.
  bool critical_search_complete = true;
};

class LimitExceeded : public std::runtime_error {
public:
  LimitExceeded(const std::string& what, RunResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RunResult& partial() const { return partial_; }

private:
  RunResult partial_;
};

/// Some member with signature dividing sigma, or none at all, yields a
/// multiple at sigma that is not regular-reducible.
bool rewrite_basis_at(const SigSet& g, const Monomial& sigma);

struct Reductant {
  std::size_t node = 0;  ///< sigtree node (member + 1) the multiple comes from
  Monomial multiplier;
  SigPair value;         ///< multiplier * label, with signature sigma
};

/// Descends from the root into any child whose signature divides sigma.
Reductant select_reductant_sigtree(const Monomial& sigma, const SigTree& tree, const SigSet& g,
                                   std::optional<std::uint64_t> child_order_seed = std::nullopt);
/// The last member, by increasing id, whose signature divides sigma; stops at a zero part.
Reductant select_reductant_f5(const Monomial& sigma, const SigSet& g);
/// The multiple at sigma with the smallest leading monomial, then the smallest id.
Reductant select_reductant_min_lm(const Monomial& sigma, const SigSet& g);

/// Runs the signature algorithm from a prebasis. Throws LimitExceeded with a
/// partial result when a limit is hit.
RunResult run(const SigSet& prebasis, const RunOptions& options);

struct CertificateReport {
  bool passed = true;
  std::vector<Monomial> failures;  ///< critical signatures where the set is not a rewrite basis
  std::size_t checked = 0;
  bool complete = true;            ///< monoid searches certified
};

/// Faugere's criterion: g is a rewrite basis iff it is one at every critical signature.
CertificateReport faugere_certificate(const SigSet& g);

/// Signatures in the critical set not covered by the queue and where g is not a rewrite basis.
std::vector<Monomial> queue_invariant_violations(const SigSet& g, const CriticalQueue& q);

/// Pairs (dominated member, dominating member) among nonzero members.
std::vector<std::pair<std::size_t, std::size_t>> redundancy_report(const SigSet& g);

/// Display-only: parts of the nonzero members with tails reduced by the others.
std::vector<Element> tail_reduced_parts(const SigSet& g);

} // namespace sigbasis

#endif
