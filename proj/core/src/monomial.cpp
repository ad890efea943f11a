#include "sigbasis/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "sigbasis/error.hpp"

namespace sigbasis {

Monomial::Monomial(std::initializer_list<Exponent> exps, std::uint32_t index)
    : exps_(exps.begin(), exps.end()), index_(index), zero_(false) {
  recompute_degree();
}

Monomial::Monomial(std::span<const Exponent> exps, std::uint32_t index)
    : exps_(exps.begin(), exps.end()), index_(index), zero_(false) {
  recompute_degree();
}

Monomial Monomial::one(std::size_t width, std::uint32_t index) {
  Monomial m;
  m.exps_.assign(width, 0);
  m.index_ = index;
  m.zero_ = false;
  return m;
}

void Monomial::recompute_degree() {
  degree_ = 0;
  for (Exponent e : exps_)
    degree_ += e;
}

Monomial Monomial::with_index(std::uint32_t index) const {
  if (zero_)
    return *this;
  Monomial m = *this;
  m.index_ = index;
  return m;
}

Monomial Monomial::times(const Monomial& a) const {
  if (zero_ || a.zero_)
    return Monomial();
  if (a.index_ != 0)
    throw StructuralError("multiplier must not carry a module index");
  if (a.exps_.size() != exps_.size())
    throw StructuralError("monomial width mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t e = std::uint64_t(exps_[i]) + a.exps_[i];
    if (e > std::numeric_limits<Exponent>::max())
      throw StructuralError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + a.degree_;
  return r;
}

bool Monomial::divides(const Monomial& n) const {
  if (zero_ || n.zero_)
    return false;
  if (index_ != n.index_ || exps_.size() != n.exps_.size())
    return false;
  if (degree_ > n.degree_)
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > n.exps_[i])
      return false;
  return true;
}

std::optional<Monomial> Monomial::quotient_into(const Monomial& n) const {
  if (!divides(n))
    return std::nullopt;
  Monomial q = n;
  q.index_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    q.exps_[i] -= exps_[i];
  q.degree_ = n.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& n) const {
  if (exps_.size() != n.exps_.size())
    throw StructuralError("monomial width mismatch");
  Monomial r = *this;
  r.index_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], n.exps_[i]);
  r.recompute_degree();
  return r;
}

std::size_t Monomial::hash() const {
  if (zero_)
    return 0x9e3779b97f4a7c15ull;
  std::size_t h = index_ * 0x100000001b3ull + 0xcbf29ce484222325ull;
  for (Exponent e : exps_)
    h = (h ^ e) * 0x100000001b3ull;
  return h;
}

ScalarOrder::ScalarOrder(Kind kind, std::vector<std::size_t> ascending)
    : kind_(kind), ascending_(std::move(ascending)) {
  std::vector<std::size_t> sorted = ascending_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      throw ContractError("variable ranking is not a permutation");
}

ScalarOrder ScalarOrder::degrevlex(std::size_t width) {
  std::vector<std::size_t> v(width);
  std::iota(v.begin(), v.end(), 0);
  return ScalarOrder(Kind::degrevlex, std::move(v));
}

ScalarOrder ScalarOrder::lex(std::size_t width) {
  std::vector<std::size_t> v(width);
  std::iota(v.begin(), v.end(), 0);
  return ScalarOrder(Kind::lex, std::move(v));
}

std::strong_ordering ScalarOrder::compare(const Monomial& m, const Monomial& n) const {
  if (m.width() != ascending_.size() || n.width() != ascending_.size())
    throw StructuralError("monomial width does not match the order");
  if (kind_ == Kind::degrevlex) {
    if (m.degree() != n.degree())
      return m.degree() <=> n.degree();
    // a larger exponent in a smaller variable makes the monomial smaller
    for (std::size_t v : ascending_)
      if (m[v] != n[v])
        return n[v] <=> m[v];
    return std::strong_ordering::equal;
  }
  for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it)
    if (m[*it] != n[*it])
      return m[*it] <=> n[*it];
  return std::strong_ordering::equal;
}

ModuleOrder::ModuleOrder(ScalarOrder base, std::uint32_t rank, Kind kind)
    : base_(std::move(base)), rank_(rank), kind_(kind) {}

void ModuleOrder::check(const Monomial& m) const {
  if (m.is_zero())
    return;
  if (m.width() != base_.width())
    throw StructuralError("monomial width does not match the order");
  if (rank_ == 0 ? m.has_index() : (m.index() == 0 || m.index() > rank_))
    throw StructuralError("module index " + std::to_string(m.index()) + " invalid for rank " +
                          std::to_string(rank_));
}

std::strong_ordering ModuleOrder::compare(const Monomial& m, const Monomial& n) const {
  if (m.is_zero() || n.is_zero())
    return n.is_zero() <=> m.is_zero();
  if (m.has_index() != n.has_index())
    throw StructuralError("comparing monomials with and without module index");
  if (rank_ == 0 || m.index() == n.index())
    return base_.compare(m, n);
  if (kind_ == Kind::pot)
    return m.index() <=> n.index();
  auto c = base_.compare(m, n);
  if (c != 0)
    return c;
  return m.index() <=> n.index();
}

MonoidSpec MonoidSpec::degree_truncated(std::uint64_t min_degree, std::vector<Monomial> exclusions) {
  MonoidSpec s;
  s.kind_ = Kind::degree_truncated;
  s.min_degree_ = min_degree;
  for (const Monomial& e : exclusions) {
    if (e.is_zero() || e.has_index())
      throw ContractError("monoid exclusions must be index-free monomials");
    if (e.degree() < min_degree)
      throw ContractError("exclusion below the truncation degree is redundant");
  }
  s.exclusions_ = std::move(exclusions);
  // Products of members must stay members: no exclusion may split into two
  // non-identity members.
  for (const Monomial& e : s.exclusions_) {
    bool splits = false;
    for_each_monomial_up_to(e.width(), e.degree() - 1, [&](const Monomial& c) {
      if (splits || c.is_one() || !c.divides(e))
        return;
      Monomial rest = *c.quotient_into(e);
      if (s.contains(c) && s.contains(rest))
        splits = true;
    });
    if (splits)
      throw ContractError("excluded monomials do not leave a multiplicatively closed set");
  }
  return s;
}

MonoidSpec MonoidSpec::generated(std::vector<Monomial> generators) {
  MonoidSpec s;
  s.kind_ = Kind::generated;
  for (const Monomial& g : generators)
    if (g.is_zero() || g.has_index() || g.is_one())
      throw ContractError("monoid generators must be non-identity index-free monomials");
  s.generators_ = std::move(generators);
  return s;
}

namespace {

bool generated_contains(const Monomial& a, const std::vector<Monomial>& gens,
                        std::unordered_map<Monomial, bool, MonomialHash>& memo) {
  if (a.is_one())
    return true;
  auto it = memo.find(a);
  if (it != memo.end())
    return it->second;
  bool found = false;
  for (const Monomial& g : gens) {
    if (auto rest = g.quotient_into(a)) {
      if (generated_contains(*rest, gens, memo)) {
        found = true;
        break;
      }
    }
  }
  memo.emplace(a, found);
  return found;
}

} // namespace

bool MonoidSpec::contains(const Monomial& a) const {
  if (a.is_zero())
    return false;
  if (a.has_index())
    throw StructuralError("monoid membership needs an index-free monomial");
  switch (kind_) {
  case Kind::full:
    return true;
  case Kind::degree_truncated:
    if (a.is_one())
      return true;
    if (a.degree() < min_degree_)
      return false;
    return std::find(exclusions_.begin(), exclusions_.end(), a) == exclusions_.end();
  case Kind::generated: {
    std::unordered_map<Monomial, bool, MonomialHash> memo;
    return generated_contains(a, generators_, memo);
  }
  }
  return false;
}

bool monoid_member(const Monomial& a, const MonoidSpec& spec) { return spec.contains(a); }

std::optional<Monomial> divide(const Monomial& m, const Monomial& n, const MonoidSpec& spec) {
  auto q = m.quotient_into(n);
  if (!q || spec.kind() == MonoidSpec::Kind::full)
    return q;
  if (!spec.contains(*q))
    return std::nullopt;
  return q;
}

void for_each_monomial_up_to(std::size_t width, std::uint64_t max_degree,
                             const std::function<void(const Monomial&)>& fn) {
  std::vector<Exponent> exps(width, 0);
  // fill positions [pos, width) with exactly `left` total degree
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
    if (pos + 1 >= width) {
      if (width == 0) {
        if (left == 0)
          fn(Monomial(std::span<const Exponent>(exps)));
        return;
      }
      exps[pos] = static_cast<Exponent>(left);
      fn(Monomial(std::span<const Exponent>(exps)));
      exps[pos] = 0;
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      exps[pos] = static_cast<Exponent>(e);
      rec(pos + 1, left - e);
    }
    exps[pos] = 0;
  };
  for (std::uint64_t d = 0; d <= max_degree; ++d)
    rec(0, d);
}

namespace {

struct Search {
  std::vector<std::pair<Monomial, Monomial>> minimal;
  std::uint64_t top_new_degree = 0;
};

// Minimal a = l*t (deg t <= bound) with a and a*m/n in A.
Search search_multipliers(const Monomial& m, const Monomial& n, const Monomial& l, std::uint64_t bound,
                          const MonoidSpec& spec) {
  Search s;
  Monomial mi = m.without_index(), ni = n.without_index();
  for_each_monomial_up_to(m.width(), bound, [&](const Monomial& t) {
    Monomial a = l.times(t);
    if (!spec.contains(a))
      return;
    auto b = ni.quotient_into(mi.times(a));
    if (!b || !spec.contains(*b))
      return;
    for (const auto& [a0, b0] : s.minimal)
      if (divide(a0, a, spec))
        return;
    s.minimal.emplace_back(a, *b);
    s.top_new_degree = t.degree();
  });
  return s;
}

} // namespace

CommonMultiples minimal_common_multiples(const Monomial& m, const Monomial& n, const MonoidSpec& spec) {
  CommonMultiples out;
  if (m.is_zero() || n.is_zero() || m.index() != n.index())
    return out;
  if (m.width() != n.width())
    throw StructuralError("monomial width mismatch");
  Monomial lc = m.lcm(n);
  Monomial l = *m.without_index().quotient_into(lc);
  if (spec.kind() == MonoidSpec::Kind::full) {
    out.pairs.emplace_back(l, *n.without_index().quotient_into(lc));
    return out;
  }

  if (spec.kind() == MonoidSpec::Kind::degree_truncated) {
    // Any a of larger degree splits as c*a' with c of degree k in A and a' a solution.
    std::uint64_t k = spec.min_degree();
    for (const Monomial& e : spec.exclusions())
      k = std::max<std::uint64_t>(k, e.degree() + 1);
    std::uint64_t shift = n.degree() > m.degree() ? n.degree() - m.degree() : 0;
    std::uint64_t bound = std::max<std::int64_t>(
        std::int64_t(k), std::int64_t(2 * k + shift) - std::int64_t(l.degree()));
    out.pairs = search_multipliers(m, n, l, bound, spec).minimal;
    return out;
  }

  // Generated monoid: grow the search until the top band yields no new minimal element.
  std::uint64_t step = 1;
  for (const Monomial& g : spec.generators())
    step = std::max(step, g.degree());
  std::uint64_t bound = n.degree() + step;
  for (int attempt = 0; attempt < 4; ++attempt, bound *= 2) {
    Search s = search_multipliers(m, n, l, bound, spec);
    out.pairs = std::move(s.minimal);
    if (!out.pairs.empty() && s.top_new_degree + step <= bound) {
      out.complete = true;
      return out;
    }
  }
  out.complete = false;
  return out;
}

} // namespace sigbasis
