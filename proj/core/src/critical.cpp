#include "sigbasis/critical.hpp"

#include <algorithm>

#include "sigbasis/error.hpp"

namespace sigbasis {

const char* to_string(TraceKind k) {
  switch (k) {
  case TraceKind::queue_add:
    return "queue_add";
  case TraceKind::queue_prune:
    return "queue_prune";
  case TraceKind::pop:
    return "pop";
  case TraceKind::select:
    return "select";
  case TraceKind::reduce:
    return "reduce";
  case TraceKind::insert:
    return "insert";
  case TraceKind::skip:
    return "skip";
  }
  return "?";
}

namespace {

// Keeps the entries not divisible by another entry; earlier entries win ties.
template <class T, class Sig>
std::vector<T> minimal_by_divisibility(std::vector<T> items, Sig sig, const MonoidSpec& monoid) {
  std::vector<char> keep(items.size(), 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < items.size() && !dominated; ++j) {
      if (i == j)
        continue;
      const Monomial& a = sig(items[j]);
      const Monomial& b = sig(items[i]);
      if (a == b ? j < i : monoid_divides(a, b, monoid))
        dominated = true;
    }
    keep[i] = !dominated;
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (keep[i])
      out.push_back(std::move(items[i]));
  return out;
}

} // namespace

std::vector<Monomial> critical_pair_signatures(const SigPair& f, const SigPair& g, const SigSet& context,
                                               bool* complete) {
  std::vector<Monomial> out;
  if (f.part.is_zero() || g.part.is_zero())
    return out;
  const Space& ss = *context.sig_space();
  CommonMultiples cm = minimal_common_multiples(f.part.lm(), g.part.lm(), context.monoid());
  if (complete && !cm.complete)
    *complete = false;
  for (const auto& [a, b] : cm.pairs) {
    Monomial s = f.signature.times(a);
    if (ss.less(g.signature.times(b), s))
      out.push_back(std::move(s));
  }
  return minimal_by_divisibility(
      std::move(out), [](const Monomial& m) -> const Monomial& { return m; }, context.monoid());
}

CriticalSet critical_set_of(const SigSet& g, std::size_t member) {
  CriticalSet out;
  const SigPair& f = g[member];
  std::vector<CriticalSignature> all;
  for (const SigPair& h : g) {
    for (Monomial& s : critical_pair_signatures(f, h, g, &out.complete))
      all.push_back({std::move(s), f.id, h.id});
  }
  out.entries = minimal_by_divisibility(
      std::move(all), [](const CriticalSignature& c) -> const Monomial& { return c.signature; }, g.monoid());
  return out;
}

CriticalSet critical_set(const SigSet& g) {
  CriticalSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    CriticalSet one = critical_set_of(g, i);
    out.complete = out.complete && one.complete;
    for (auto& e : one.entries)
      out.entries.push_back(std::move(e));
  }
  return out;
}

CriticalQueue::CriticalQueue(SpacePtr sig_space, MonoidSpec monoid, bool pruned)
    : sig_space_(std::move(sig_space)),
      monoid_(std::move(monoid)),
      pruned_(pruned),
      items_(Less{sig_space_.get()}) {}

bool CriticalQueue::covers(const Monomial& s) const {
  // a divisor never exceeds its multiple
  for (auto it = items_.begin(); it != items_.end() && !sig_space_->less(s, *it); ++it)
    if (monoid_divides(*it, s, monoid_))
      return true;
  return false;
}

bool CriticalQueue::insert(const Monomial& s, std::pair<std::size_t, std::size_t> source) {
  sig_space_->order().check(s);
  if (items_.count(s) || (pruned_ && covers(s)))
    return false;
  if (pruned_) {
    for (auto it = items_.upper_bound(s); it != items_.end();) {
      if (monoid_divides(s, *it, monoid_)) {
        if (trace_)
          trace_(TraceEvent{TraceKind::queue_prune, *it, {}, {}, {}, {}, {}, sources_[*it]});
        sources_.erase(*it);
        it = items_.erase(it);
      } else {
        ++it;
      }
    }
  }
  items_.insert(s);
  sources_[s] = source;
  if (trace_)
    trace_(TraceEvent{TraceKind::queue_add, s, {}, {}, {}, {}, {}, source});
  return true;
}

std::pair<std::size_t, std::size_t> CriticalQueue::source(const Monomial& s) const {
  auto it = sources_.find(s);
  return it == sources_.end() ? std::pair<std::size_t, std::size_t>{0, 0} : it->second;
}

Monomial CriticalQueue::pop_min() {
  if (items_.empty())
    throw ContractError("pop from an empty queue");
  return take(*items_.begin());
}

Monomial CriticalQueue::take(const Monomial& sig) {
  auto it = items_.find(sig);
  if (it == items_.end())
    throw ContractError("signature is not queued");
  Monomial s = *it;
  items_.erase(it);
  if (trace_)
    trace_(TraceEvent{TraceKind::pop, s, {}, {}, {}, {}, {}, sources_[s]});
  sources_.erase(s);
  return s;
}

std::vector<Monomial> CriticalQueue::pop_batch(std::size_t k) {
  if (k == 0)
    throw ContractError("batch size must be positive");
  std::vector<Monomial> out;
  while (!items_.empty() && out.size() < k)
    out.push_back(pop_min());
  return out;
}

bool queue_update(CriticalQueue& q, const SigSet& g, std::size_t member) {
  CriticalSet own = critical_set_of(g, member);
  bool complete = own.complete;
  for (const CriticalSignature& c : own.entries)
    q.insert(c.signature, {c.source_id, c.partner_id});
  const SigPair& fresh = g[member];
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == member)
      continue;
    for (const Monomial& s : critical_pair_signatures(g[i], fresh, g, &complete))
      q.insert(s, {g[i].id, fresh.id});
  }
  return complete;
}

} // namespace sigbasis
