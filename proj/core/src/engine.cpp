#include "sigbasis/engine.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "sigbasis/error.hpp"
#include "sigbasis/text.hpp"

namespace sigbasis {

Strategy Strategy::f4(std::size_t batch) {
  if (batch == 0)
    throw ContractError("f4 batch size must be positive");
  return {Kind::f4, batch};
}

std::string Strategy::name() const {
  switch (kind) {
  case Kind::in_order:
    return "in-order";
  case Kind::min_lm:
    return "min-lm";
  case Kind::f5:
    return "f5";
  case Kind::f5_pruned:
    return "f5-pruned";
  case Kind::f4:
    return "f4";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name, std::size_t batch) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '_', '-');
  if (n == "in-order")
    return Strategy::in_order();
  if (n == "min-lm")
    return Strategy::min_lm();
  if (n == "f5")
    return Strategy::f5();
  if (n == "f5-pruned")
    return Strategy::f5_pruned();
  if (n == "f4")
    return Strategy::f4(batch);
  throw ContractError("unknown strategy '" + std::string(name) + "'");
}

bool rewrite_basis_at(const SigSet& g, const Monomial& sigma) {
  const MonoidSpec& monoid = g.monoid();
  for (std::size_t i = g.size(); i-- > 0;) {
    const SigPair& p = g[i];
    auto a = divide(p.signature, sigma, monoid);
    if (!a)
      continue;
    if (p.part.is_zero())
      return true;
    if (!find_regular_reducer(p.part.lm().times(*a), sigma, g))
      return true;
  }
  // vacuous when no signature divides sigma, false otherwise
  for (const SigPair& p : g)
    if (monoid_divides(p.signature, sigma, monoid))
      return false;
  return true;
}

Reductant select_reductant_sigtree(const Monomial& sigma, const SigTree& tree, const SigSet& g,
                                   std::optional<std::uint64_t> child_order_seed) {
  const MonoidSpec& monoid = g.monoid();
  std::size_t k = 0;
  std::vector<std::size_t> order;
  for (bool moved = true; moved;) {
    moved = false;
    order = tree.node(k).children;
    if (child_order_seed) {
      std::mt19937_64 rng(*child_order_seed ^ (k * 0x9e3779b97f4a7c15ull));
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::size_t c : order) {
      if (monoid_divides(g[SigTree::member_of(c)].signature, sigma, monoid)) {
        k = c;
        moved = true;
        break;
      }
    }
  }
  if (k == 0)
    throw ContractError("no member signature divides the selected signature");
  const SigPair& label = g[SigTree::member_of(k)];
  Monomial a = *divide(label.signature, sigma, monoid);
  SigPair value = multiply(a, label);
  return Reductant{k, std::move(a), std::move(value)};
}

Reductant select_reductant_f5(const Monomial& sigma, const SigSet& g) {
  const MonoidSpec& monoid = g.monoid();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!monoid_divides(g[i].signature, sigma, monoid))
      continue;
    best = i;
    if (g[i].part.is_zero())
      break;
  }
  if (!best)
    throw ContractError("no member signature divides the selected signature");
  Monomial a = *divide(g[*best].signature, sigma, monoid);
  SigPair value = multiply(a, g[*best]);
  return Reductant{SigTree::node_of(*best), std::move(a), std::move(value)};
}

Reductant select_reductant_min_lm(const Monomial& sigma, const SigSet& g) {
  const MonoidSpec& monoid = g.monoid();
  const Space& ps = *g.part_space();
  std::optional<std::size_t> best;
  Monomial best_lm, best_a;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto a = divide(g[i].signature, sigma, monoid);
    if (!a)
      continue;
    Monomial lm = g[i].part.lm().times(*a);
    if (best && !ps.less(lm, best_lm))
      continue;  // ties keep the smaller id
    best = i;
    best_lm = std::move(lm);
    best_a = std::move(*a);
  }
  if (!best)
    throw ContractError("no member signature divides the selected signature");
  SigPair value = multiply(best_a, g[*best]);
  return Reductant{SigTree::node_of(*best), std::move(best_a), std::move(value)};
}

std::vector<Monomial> queue_invariant_violations(const SigSet& g, const CriticalQueue& q) {
  std::vector<Monomial> out;
  for (const CriticalSignature& c : critical_set(g).entries) {
    bool queued = q.pruned() ? q.covers(c.signature) : q.contains(c.signature);
    if (!queued && !rewrite_basis_at(g, c.signature))
      out.push_back(c.signature);
  }
  return out;
}

namespace {

class Engine {
public:
  Engine(const SigSet& prebasis, const RunOptions& options)
      : options_(options),
        result_{SigSet(prebasis.part_space(), prebasis.sig_space()), SigTree(), {}, {}, options.strategy, true},
        queue_(prebasis.sig_space(), prebasis.monoid(), options.strategy.kind == Strategy::Kind::f5_pruned),
        start_(std::chrono::steady_clock::now()) {
    if (options_.trace)
      queue_.set_trace(options_.trace);
    if (options_.shuffled_pop_seed)
      rng_.seed(*options_.shuffled_pop_seed);
    for (const SigPair& p : prebasis) {
      SigPair q = p;
      q.part = q.part.monic();
      std::size_t rank = batched() ? 0 : result_.tree.size();
      insert(std::move(q), 0, Monomial::one(prebasis.part_space()->width()), rank, 0);
    }
  }

  RunResult run() {
    if (batched())
      run_batched();
    else
      run_single();
    for (const SigPair& p : result_.basis)
      if (p.part.is_zero())
        result_.syzygies.push_back(p.signature);
    return std::move(result_);
  }

private:
  bool batched() const { return options_.strategy.kind == Strategy::Kind::f4; }

  void emit(TraceEvent e) {
    if (options_.trace)
      options_.trace(e);
  }

  void check_limits() {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > options_.limits.max_seconds)
      fail_limit("time limit of " + std::to_string(options_.limits.max_seconds) + " s exceeded");
    if (result_.stats.insertions > options_.limits.max_insertions)
      fail_limit("insertion limit of " + std::to_string(options_.limits.max_insertions) + " exceeded");
  }

  [[noreturn]] void fail_limit(const std::string& what) {
    for (const SigPair& p : result_.basis)
      if (p.part.is_zero())
        result_.syzygies.push_back(p.signature);
    throw LimitExceeded(what, std::move(result_));
  }

  void check_invariants() {
    if (!options_.check_invariants)
      return;
    auto bad = queue_invariant_violations(result_.basis, queue_);
    if (!bad.empty())
      throw ContractError("queue invariant fails at " +
                          format_monomial(bad.front(), result_.basis.sig_space()->ring()));
  }

  // Adds a member and its node; updates the queue against everything present.
  void insert(SigPair p, std::size_t parent, Monomial multiplier, std::size_t rank, std::size_t steps) {
    std::size_t member = result_.basis.size();
    p.id = member + 1;
    if (p.part.is_zero())
      ++result_.stats.zero_reductions;
    Monomial sig = p.signature;
    Monomial lm = p.part.lm();
    result_.basis.add(std::move(p));
    std::size_t node = result_.tree.add(parent, multiplier, rank);
    emit(TraceEvent{TraceKind::insert, sig, node, parent, multiplier, lm, steps, {}});
    if (!queue_update(queue_, result_.basis, member))
      result_.critical_search_complete = false;
    result_.stats.peak_queue = std::max(result_.stats.peak_queue, queue_.size());
  }

  Monomial pop_one() {
    if (!options_.shuffled_pop_seed)
      return queue_.pop_min();
    auto items = queue_.items();
    std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
    return queue_.take(items[pick(rng_)]);
  }

  Reductant select(const Monomial& sigma) {
    const SigSet& g = result_.basis;
    switch (options_.strategy.kind) {
    case Strategy::Kind::min_lm:
      return select_reductant_min_lm(sigma, g);
    case Strategy::Kind::f5:
    case Strategy::Kind::f5_pruned:
      return select_reductant_f5(sigma, g);
    case Strategy::Kind::in_order:
    case Strategy::Kind::f4:
      break;
    }
    return select_reductant_sigtree(sigma, result_.tree, g, options_.child_order_seed);
  }

  void trace_select(const Monomial& sigma, const Reductant& r) {
    emit(TraceEvent{TraceKind::select, sigma, r.node, {}, r.multiplier, r.value.part.lm(), {}, {}});
  }

  void run_single() {
    while (!queue_.empty()) {
      check_invariants();
      check_limits();
      ++result_.stats.iterations;
      Monomial sigma = pop_one();
      // Algorithm 2 tests every multiple at sigma, not only the chosen one.
      if (options_.strategy.kind == Strategy::Kind::in_order && rewrite_basis_at(result_.basis, sigma)) {
        emit(TraceEvent{TraceKind::skip, sigma, {}, {}, {}, {}, {}, {}});
        continue;
      }
      Reductant r = select(sigma);
      trace_select(sigma, r);
      if (!is_regular_reducible(r.value, result_.basis)) {
        emit(TraceEvent{TraceKind::skip, sigma, r.node, {}, {}, r.value.part.lm(), {}, {}});
        continue;
      }
      RegularNormalForm nf = regular_normal_form(r.value, result_.basis);
      result_.stats.reduction_steps += nf.steps;
      emit(TraceEvent{TraceKind::reduce, sigma, r.node, {}, {}, nf.result.part.lm(), nf.steps, {}});
      if (options_.check_invariants && is_regular_reducible(nf.result, result_.basis))
        throw ContractError("inserted element is still regular-reducible");
      ++result_.stats.insertions;
      insert(std::move(nf.result), r.node, r.multiplier, result_.tree.size(), nf.steps);
    }
    check_invariants();
  }

  void run_batched() {
    std::size_t batch_no = 0;
    while (!queue_.empty()) {
      check_invariants();
      check_limits();
      ++result_.stats.iterations;
      ++batch_no;
      std::vector<Monomial> batch = queue_.pop_batch(options_.strategy.batch_size);
      std::vector<Reductant> chosen;
      for (const Monomial& sigma : batch) {
        Reductant r = select(sigma);
        trace_select(sigma, r);
        if (is_regular_reducible(r.value, result_.basis))
          chosen.push_back(std::move(r));
        else
          emit(TraceEvent{TraceKind::skip, sigma, r.node, {}, {}, r.value.part.lm(), {}, {}});
      }
      // Reduce in increasing signature order modulo multiples of the members
      // present before the batch together with this batch's results used whole.
      std::size_t whole_from = result_.basis.size();
      for (Reductant& r : chosen) {
        SigPair f = std::move(r.value);
        Element& part = f.part;
        std::size_t steps = 0;
        for (;;) {
          auto red = find_regular_reducer(part.lm(), f.signature, result_.basis, whole_from);
          if (!red)
            break;
          const Element& e = result_.basis[red->member].part;
          part = part.minus_multiple(part.lc() / e.lc(), red->multiplier, e);
          ++steps;
        }
        part = part.monic();
        result_.stats.reduction_steps += steps;
        emit(TraceEvent{TraceKind::reduce, f.signature, r.node, {}, {}, part.lm(), steps, {}});
        ++result_.stats.insertions;
        insert(std::move(f), r.node, r.multiplier, batch_no, steps);
      }
    }
    check_invariants();
  }

  const RunOptions& options_;
  RunResult result_;
  CriticalQueue queue_;
  std::chrono::steady_clock::time_point start_;
  std::mt19937_64 rng_;
};

} // namespace

RunResult run(const SigSet& prebasis, const RunOptions& options) {
  if (options.strategy.kind == Strategy::Kind::f4 && options.shuffled_pop_seed)
    throw ContractError("batched runs always pop the smallest signatures");
  Engine engine(prebasis, options);
  return engine.run();
}

std::vector<std::pair<std::size_t, std::size_t>> redundancy_report(const SigSet& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].part.is_zero())
      continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || g[j].part.is_zero())
        continue;
      if (dominates(g[j], g[i], g) != Domination::none) {
        out.emplace_back(i, j);
        break;
      }
    }
  }
  return out;
}

std::vector<Element> tail_reduced_parts(const SigSet& g) {
  std::vector<const Element*> keep;
  std::vector<Monomial> lms = minimal_leading_monomials(g);
  for (const Monomial& m : lms)
    for (const SigPair& p : g)
      if (!p.part.is_zero() && p.part.lm() == m) {
        keep.push_back(&p.part);
        break;
      }
  const MonoidSpec& monoid = g.monoid();
  std::vector<Element> out;
  for (const Element* f : keep) {
    Element rest = *f;
    std::vector<Term> fixed;
    while (!rest.is_zero()) {
      const Term& lead = rest.terms().front();
      const Element* red = nullptr;
      Monomial mult;
      if (!fixed.empty()) {
        for (const Element* h : keep) {
          if (auto a = divide(h->lm(), lead.monomial, monoid)) {
            red = h;
            mult = *a;
            break;
          }
        }
      }
      if (red) {
        rest = rest.minus_multiple(lead.coefficient / red->lc(), mult, *red);
      } else {
        fixed.push_back(lead);
        rest = rest.minus_multiple(lead.coefficient, Monomial::one(f->space()->width()),
                                   Element::monomial(f->space(), lead.monomial, f->space()->field().one()));
      }
    }
    out.push_back(Element::from_terms(f->space(), std::move(fixed)).monic());
  }
  return out;
}

} // namespace sigbasis
