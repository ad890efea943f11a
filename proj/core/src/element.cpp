#include "sigbasis/element.hpp"

#include <algorithm>

#include "sigbasis/error.hpp"

namespace sigbasis {

Space::Space(RingPtr ring, ModuleOrder order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (!ring_)
    throw ContractError("space without ring");
  if (order_.base().width() != ring_->width())
    throw StructuralError("order width does not match the number of variables");
}

SpacePtr make_space(RingPtr ring, ModuleOrder order) {
  return std::make_shared<const Space>(std::move(ring), std::move(order));
}

bool same_space(const Space& a, const Space& b) {
  if (&a == &b)
    return true;
  return (a.ring_ptr() == b.ring_ptr() ||
          (a.ring().variables == b.ring().variables && a.field() == b.field() && a.monoid() == b.monoid())) &&
         a.order() == b.order();
}

namespace {
const Monomial kZero;
}

Element Element::from_terms(SpacePtr space, std::vector<Term> terms) {
  const Space& s = *space;
  for (const Term& t : terms) {
    if (t.monomial.is_zero())
      throw ContractError("zero monomial inside an element");
    s.order().check(t.monomial);
    if (!s.field().owns(t.coefficient))
      throw StructuralError("coefficient outside the field " + s.field().name());
    if (s.monoid().kind() != MonoidSpec::Kind::full && !s.monoid().contains(t.monomial.without_index()))
      throw ContractError("monomial outside the multiplier monoid");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return s.less(b.monomial, a.monomial); });
  Element e(std::move(space));
  for (Term& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().monomial == t.monomial) {
      e.terms_.back().coefficient = e.terms_.back().coefficient + t.coefficient;
      continue;
    }
    if (!e.terms_.empty() && e.terms_.back().coefficient.is_zero())
      e.terms_.pop_back();
    e.terms_.push_back(std::move(t));
  }
  if (!e.terms_.empty() && e.terms_.back().coefficient.is_zero())
    e.terms_.pop_back();
  return e;
}

Element Element::monomial(SpacePtr space, Monomial m, Coefficient c) {
  std::vector<Term> t;
  t.push_back({std::move(m), std::move(c)});
  return from_terms(std::move(space), std::move(t));
}

const Monomial& Element::lm() const { return terms_.empty() ? kZero : terms_.front().monomial; }

const Coefficient& Element::lc() const {
  if (terms_.empty())
    throw ContractError("leading coefficient of zero");
  return terms_.front().coefficient;
}

std::uint64_t Element::degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_)
    d = std::max(d, t.monomial.degree());
  return d;
}

Element Element::times(const Monomial& a) const {
  Element r(space_);
  if (a.is_zero())
    return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back({t.monomial.times(a), t.coefficient});
  return r;
}

Element Element::scaled(const Coefficient& c) const {
  Element r(space_);
  if (c.is_zero())
    return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back({t.monomial, t.coefficient * c});
  return r;
}

Element Element::monic() const {
  if (terms_.empty() || lc().is_one())
    return *this;
  return scaled(lc().inverse());
}

Element Element::without_lead() const {
  Element r(space_);
  if (!terms_.empty())
    r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  for (Term& t : r.terms_)
    t.coefficient = -t.coefficient;
  return r;
}

void Element::check_compatible(const Element& o) const {
  if (space_ != o.space_ && !same_space(*space_, *o.space_))
    throw StructuralError("elements from different spaces");
}

Element Element::operator+(const Element& o) const {
  check_compatible(o);
  return minus_multiple(-space_->field().one(), Monomial::one(space_->width()), o);
}

Element Element::operator-(const Element& o) const {
  check_compatible(o);
  return minus_multiple(space_->field().one(), Monomial::one(space_->width()), o);
}

Element Element::minus_multiple(const Coefficient& c, const Monomial& a, const Element& e) const {
  check_compatible(e);
  if (c.is_zero() || e.is_zero())
    return *this;
  const ModuleOrder& order = space_->order();
  Element r(space_);
  r.terms_.reserve(terms_.size() + e.terms_.size());
  auto i = terms_.begin();
  auto j = e.terms_.begin();
  Monomial mj = j->monomial.times(a);
  while (i != terms_.end() || j != e.terms_.end()) {
    std::strong_ordering cmp = std::strong_ordering::greater;
    if (i == terms_.end())
      cmp = std::strong_ordering::less;
    else if (j != e.terms_.end())
      cmp = order.compare(i->monomial, mj);
    if (cmp > 0) {
      r.terms_.push_back(*i);
      ++i;
      continue;
    }
    if (cmp < 0) {
      r.terms_.push_back({std::move(mj), -(c * j->coefficient)});
    } else {
      Coefficient v = i->coefficient.minus_product(c, j->coefficient);
      if (!v.is_zero())
        r.terms_.push_back({std::move(mj), std::move(v)});
      ++i;
    }
    ++j;
    if (j != e.terms_.end())
      mj = j->monomial.times(a);
  }
  return r;
}

bool Element::operator==(const Element& o) const {
  if (space_ != o.space_ && !same_space(*space_, *o.space_))
    return false;
  return terms_ == o.terms_;
}

Element top_reduce_step(const Element& f, const Element& e) {
  if (f.is_zero() || e.is_zero() || !(f.lm() == e.lm()))
    throw ContractError("top reduction needs equal nonzero leading monomials");
  return f.minus_multiple(f.lc() / e.lc(), Monomial::one(f.space()->width()), e);
}

NormalForm normal_form(const Element& f, const Admission& admissible) {
  NormalForm nf{f, 0};
  while (!nf.remainder.is_zero()) {
    auto r = admissible(nf.remainder.lm());
    if (!r)
      break;
    const Element& e = *r->element;
    Coefficient c = nf.remainder.lc() / e.lc();
    Element next = nf.remainder.minus_multiple(c, r->multiplier, e);
    if (!next.is_zero() && !nf.remainder.space()->less(next.lm(), nf.remainder.lm()))
      throw ContractError("admitted reducer does not match the leading monomial");
    nf.remainder = std::move(next);
    ++nf.steps;
  }
  return nf;
}

} // namespace sigbasis
