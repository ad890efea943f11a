#include "sigbasis/sigpair.hpp"

#include <algorithm>

#include "sigbasis/error.hpp"
#include "sigbasis/text.hpp"

namespace sigbasis {

SigSet::SigSet(SpacePtr part_space, SpacePtr sig_space)
    : part_space_(std::move(part_space)), sig_space_(std::move(sig_space)) {
  if (!part_space_ || !sig_space_)
    throw ContractError("sigset needs both spaces");
  if (!(part_space_->monoid() == sig_space_->monoid()) || part_space_->ring().variables != sig_space_->ring().variables)
    throw StructuralError("part and signature spaces use different rings");
}

const SigPair& SigSet::add(SigPair p) {
  if (p.part.space() != part_space_ && !same_space(*p.part.space(), *part_space_))
    throw StructuralError("sigpair part lives in another space");
  sig_space_->order().check(p.signature);
  if (p.signature.is_zero())
    throw ContractError("zero signature");
  if (find_id(p.id))
    throw ContractError("duplicate sigpair id " + std::to_string(p.id));
  members_.push_back(std::move(p));
  return members_.back();
}

const SigPair* SigSet::find_id(std::size_t id) const {
  for (const SigPair& p : members_)
    if (p.id == id)
      return &p;
  return nullptr;
}

SigPair multiply(const Monomial& a, const SigPair& f) {
  if (!f.part.space()->monoid().contains(a))
    throw ContractError("multiplier outside the monoid");
  return SigPair{f.part.times(a), f.signature.times(a), f.id};
}

std::uint32_t flattened_index(const Space& part_space, std::size_t generator, std::uint32_t part_index) {
  std::uint32_t r = std::max<std::uint32_t>(1, part_space.rank());
  std::uint32_t j = part_space.rank() == 0 ? 1 : part_index;
  return static_cast<std::uint32_t>((generator - 1) * r + j);
}

SpacePtr make_signature_space(const Space& part_space, std::size_t count, ModuleOrder::Kind kind) {
  std::uint32_t r = std::max<std::uint32_t>(1, part_space.rank());
  return make_space(part_space.ring_ptr(),
                    ModuleOrder(part_space.order().base(), static_cast<std::uint32_t>(count * r), kind));
}

namespace {

void check_generators(const std::vector<Element>& gens, bool allow_zero) {
  if (gens.empty())
    throw ContractError("no generators");
  for (const Element& g : gens) {
    if (!same_space(*g.space(), *gens.front().space()))
      throw StructuralError("generators from different spaces");
    if (!allow_zero && g.is_zero())
      throw ContractError("zero generator has no leading monomial to shift by");
  }
}

} // namespace

SigSet make_prebasis_shifted(const std::vector<Element>& gens, ModuleOrder::Kind kind) {
  check_generators(gens, false);
  const SpacePtr& ps = gens.front().space();
  SigSet set(ps, make_signature_space(*ps, gens.size(), kind));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Monomial& m = gens[i].lm();
    set.add({gens[i].monic(), m.with_index(flattened_index(*ps, i + 1, m.index())), i + 1});
  }
  return set;
}

SigSet make_prebasis_unshifted(const std::vector<Element>& gens, ModuleOrder::Kind kind) {
  check_generators(gens, true);
  const SpacePtr& ps = gens.front().space();
  if (ps->rank() != 0)
    throw UnsupportedError("unshifted signatures need an identity monomial in M; use a ring setting");
  SigSet set(ps, make_signature_space(*ps, gens.size(), kind));
  for (std::size_t i = 0; i < gens.size(); ++i)
    set.add({gens[i].monic(), Monomial::one(ps->width(), static_cast<std::uint32_t>(i + 1)), i + 1});
  return set;
}

SigSet make_prebasis_sum(const std::vector<Element>& g_list, const std::vector<Element>& h_list,
                         ModuleOrder::Kind kind) {
  if (g_list.empty() && h_list.empty())
    throw ContractError("no generators");
  if (!g_list.empty())
    check_generators(g_list, false);
  if (!h_list.empty())
    check_generators(h_list, false);
  const SpacePtr& ps = g_list.empty() ? h_list.front().space() : g_list.front().space();
  if (!h_list.empty() && !same_space(*ps, *h_list.front().space()))
    throw StructuralError("both summands must live in the same module");
  SigSet set(ps, make_signature_space(*ps, 2, kind));
  std::size_t id = 1;
  for (const Element& g : g_list)
    set.add({g.monic(), g.lm().with_index(flattened_index(*ps, 1, g.lm().index())), id++});
  for (const Element& h : h_list)
    set.add({h.monic(), h.lm().with_index(flattened_index(*ps, 2, h.lm().index())), id++});
  return set;
}

std::optional<RegularReducer> find_regular_reducer(const Monomial& target, const Monomial& bound, const SigSet& g,
                                                   std::size_t whole_from) {
  if (target.is_zero())
    return std::nullopt;
  const MonoidSpec& monoid = g.monoid();
  const Space& ss = *g.sig_space();
  std::optional<RegularReducer> best;
  std::size_t best_id = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const SigPair& p = g[i];
    if (p.part.is_zero())
      continue;
    auto b = divide(p.part.lm(), target, monoid);
    if (!b || (i >= whole_from && !b->is_one()))
      continue;
    Monomial s = p.signature.times(*b);
    if (!ss.less(s, bound))
      continue;
    if (best) {
      auto c = ss.compare(s, best->signature);
      if (c > 0 || (c == 0 && p.id >= best_id))
        continue;
    }
    best = RegularReducer{i, std::move(*b), std::move(s)};
    best_id = p.id;
  }
  return best;
}

bool is_regular_reducible(const SigPair& f, const SigSet& g) {
  return find_regular_reducer(f.part.lm(), f.signature, g).has_value();
}

RegularNormalForm regular_normal_form(const SigPair& f, const SigSet& g) {
  RegularNormalForm out{f, 0};
  Element& part = out.result.part;
  for (;;) {
    auto r = find_regular_reducer(part.lm(), f.signature, g);
    if (!r)
      break;
    const Element& e = g[r->member].part;
    part = part.minus_multiple(part.lc() / e.lc(), r->multiplier, e);
    ++out.steps;
  }
  part = part.monic();
  return out;
}

Domination dominates(const SigPair& g, const SigPair& f, const SigSet& context) {
  const MonoidSpec& monoid = context.monoid();
  const Space& ps = *context.part_space();
  const Space& ss = *context.sig_space();
  if (auto a = divide(g.signature, f.signature, monoid)) {
    Monomial l = g.part.lm().times(*a);
    if (!ps.less(f.part.lm(), l))
      return Domination::same_signature;
  }
  if (!f.part.is_zero() && !g.part.is_zero()) {
    if (auto a = divide(g.part.lm(), f.part.lm(), monoid))
      if (ss.less(g.signature.times(*a), f.signature))
        return Domination::smaller_signature;
  }
  return Domination::none;
}

std::string to_string(SignatureClass c) {
  switch (c) {
  case SignatureClass::empty:
    return "empty";
  case SignatureClass::syzygy:
    return "syzygy";
  case SignatureClass::regular:
    return "regular";
  }
  return "?";
}

SignatureClass classify_signature(const Monomial& sigma, const CertifiedBasis& basis) {
  const SigSet& g = basis.sigset();
  g.sig_space()->order().check(sigma);
  bool any = false;
  for (const SigPair& p : g) {
    if (!monoid_divides(p.signature, sigma, g.monoid()))
      continue;
    if (p.part.is_zero())
      return SignatureClass::syzygy;
    any = true;
  }
  return any ? SignatureClass::regular : SignatureClass::empty;
}

std::vector<Monomial> syzygy_signatures(const SigSet& g) {
  std::vector<Monomial> out;
  for (const SigPair& p : g)
    if (p.part.is_zero())
      out.push_back(p.signature);
  return out;
}

std::string format_sigpair(const SigPair& p, const SigSet& context) {
  return format_element(p.part) + " @ " + format_monomial(p.signature, context.sig_space()->ring());
}

SigPair parse_sigpair(std::string_view text, const SigSet& context, std::size_t id) {
  auto at = text.find('@');
  if (at == std::string_view::npos)
    throw ParseError("expected 'part @ signature'", 1, 1);
  Element part = parse_element(text.substr(0, at), context.part_space());
  Monomial sig;
  try {
    sig = parse_monomial(text.substr(at + 1), *context.sig_space());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), 1, at + 1 + e.column());
  }
  return SigPair{std::move(part), std::move(sig), id};
}

} // namespace sigbasis
