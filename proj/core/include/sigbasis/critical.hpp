#ifndef SIGBASIS_CRITICAL_HPP
#define SIGBASIS_CRITICAL_HPP

#include <cstddef>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigbasis/sigpair.hpp"
#include "sigbasis/trace.hpp"

namespace sigbasis {

/// Minimal signatures a*sig f at which a*f becomes reducible by a multiple b*g
/// of smaller signature, for the single partner g.
std::vector<Monomial> critical_pair_signatures(const SigPair& f, const SigPair& g, const SigSet& context,
                                               bool* complete = nullptr);

struct CriticalSignature {
  Monomial signature;
  std::size_t source_id = 0;   ///< f, the element being multiplied
  std::size_t partner_id = 0;  ///< g, the element that reduces the multiple
};

struct CriticalSet {
  std::vector<CriticalSignature> entries;
  bool complete = true;
};

/// Critical signatures of one member against the whole set, minimal under divisibility.
CriticalSet critical_set_of(const SigSet& g, std::size_t member);
/// Union over all members, each source keeping only its minimal signatures.
CriticalSet critical_set(const SigSet& g);

/// Pending critical signatures, ordered by the signature order.
class CriticalQueue {
public:
  CriticalQueue(SpacePtr sig_space, MonoidSpec monoid, bool pruned = false);

  bool pruned() const { return pruned_; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  bool contains(const Monomial& s) const { return items_.count(s) > 0; }
  /// Some queued signature divides s (s itself included).
  bool covers(const Monomial& s) const;

  /// Adds s unless present (or, when pruned, already covered). Returns whether it was added.
  bool insert(const Monomial& s, std::pair<std::size_t, std::size_t> source);
  std::pair<std::size_t, std::size_t> source(const Monomial& s) const;

  Monomial pop_min();
  /// Removes a specific queued signature, reported like a pop.
  Monomial take(const Monomial& s);
  /// The k smallest, ascending.
  std::vector<Monomial> pop_batch(std::size_t k);
  std::vector<Monomial> items() const { return {items_.begin(), items_.end()}; }

  void set_trace(TraceSink sink) { trace_ = std::move(sink); }

private:
  struct Less {
    const Space* space;
    bool operator()(const Monomial& a, const Monomial& b) const { return space->less(a, b); }
  };

  SpacePtr sig_space_;
  MonoidSpec monoid_;
  bool pruned_;
  std::set<Monomial, Less> items_;
  std::unordered_map<Monomial, std::pair<std::size_t, std::size_t>, MonomialHash> sources_;
  TraceSink trace_;
};

/// Adds the critical signatures created by the member at position `member`:
/// its own minimal set against all of g, and each other member's pairwise set
/// against it. Returns false if some monoid search could not certify completeness.
bool queue_update(CriticalQueue& q, const SigSet& g, std::size_t member);

} // namespace sigbasis

#endif
