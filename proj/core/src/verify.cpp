#include "sigbasis/verify.hpp"

#include <algorithm>
#include <map>

#include "sigbasis/echelon.hpp"
#include "sigbasis/error.hpp"

namespace sigbasis {

Element full_reduce(const Element& f, const std::vector<Element>& by) {
  const MonoidSpec& monoid = f.space()->monoid();
  std::vector<Term> rest;
  Element cur = f;
  while (!cur.is_zero()) {
    const Element* red = nullptr;
    Monomial a;
    for (const Element& h : by) {
      if (h.is_zero())
        continue;
      if (auto q = divide(h.lm(), cur.lm(), monoid)) {
        red = &h;
        a = std::move(*q);
        break;
      }
    }
    if (red) {
      cur = cur.minus_multiple(cur.lc() / red->lc(), a, *red);
    } else {
      rest.push_back(cur.terms().front());
      cur = cur.without_lead();
    }
  }
  return Element::from_terms(f.space(), std::move(rest));
}

std::vector<Element> buchberger(const std::vector<Element>& gens, std::size_t max_basis_size) {
  if (gens.empty())
    return {};
  const SpacePtr& space = gens.front().space();
  const MonoidSpec& monoid = space->monoid();
  struct Pair {
    std::size_t i, j;
    Monomial a, b, lcm;
  };
  std::vector<Element> g;
  std::vector<Pair> pairs;
  auto add = [&](const Element& r) {
    if (g.size() >= max_basis_size)
      throw std::runtime_error("Buchberger oracle exceeded its basis size cap");
    Element m = r.monic();
    std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i) {
      CommonMultiples cm = minimal_common_multiples(g[i].lm(), m.lm(), monoid);
      if (!cm.complete)
        throw UnsupportedError("monoid common-multiple search did not certify completeness");
      for (auto& [a, b] : cm.pairs) {
        Monomial l = g[i].lm().times(a);
        pairs.push_back({i, k, std::move(a), std::move(b), std::move(l)});
      }
    }
    g.push_back(std::move(m));
  };
  for (const Element& f : gens) {
    Element r = full_reduce(f, g);
    if (!r.is_zero())
      add(r);
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (space->less(pairs[k].lcm, pairs[best].lcm))
        best = k;
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Element s = g[p.i].times(p.a).minus_multiple(space->field().one(), p.b, g[p.j]);
    Element r = full_reduce(s, g);
    if (!r.is_zero())
      add(r);
  }
  // interreduce
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j)
        continue;
      if (g[j].lm() == g[i].lm() ? j < i : monoid_divides(g[j].lm(), g[i].lm(), monoid))
        redundant = true;
    }
    if (!redundant)
      minimal.push_back(g[i]);
  }
  std::vector<Element> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    reduced.push_back(full_reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Element& a, const Element& b) { return space->less(b.lm(), a.lm()); });
  return reduced;
}

bool lm_ideal_equal(const std::vector<Monomial>& a, const std::vector<Monomial>& b, const MonoidSpec& monoid) {
  auto covered = [&](const std::vector<Monomial>& xs, const std::vector<Monomial>& by) {
    for (const Monomial& x : xs) {
      bool ok = false;
      for (const Monomial& y : by)
        if (monoid_divides(y, x, monoid)) {
          ok = true;
          break;
        }
      if (!ok)
        return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

std::vector<Monomial> leading_monomials(const std::vector<Element>& elements) {
  std::vector<Monomial> out;
  for (const Element& e : elements)
    if (!e.is_zero())
      out.push_back(e.lm());
  return out;
}

std::vector<Monomial> leading_monomials(const SigSet& g) {
  std::vector<Monomial> out;
  for (const SigPair& p : g)
    if (!p.part.is_zero())
      out.push_back(p.part.lm());
  return out;
}

namespace {

struct Multiple {
  Monomial signature;
  Element part;
};

std::vector<Multiple> bounded_multiples(const SigSet& g, std::uint64_t max_degree) {
  std::vector<Multiple> out;
  std::vector<Monomial> mults = multipliers_up_to(g.part_space()->ring(), max_degree);
  for (const SigPair& p : g) {
    if (p.part.is_zero())
      continue;
    for (const Monomial& a : mults)
      if (a.degree() + p.part.degree() <= max_degree)
        out.push_back({p.signature.times(a), p.part.times(a)});
  }
  return out;
}

std::vector<Monomial> support(const std::vector<Multiple>& ms) {
  std::vector<Monomial> out;
  for (const Multiple& m : ms)
    for (const Term& t : m.part.terms())
      out.push_back(t.monomial);
  return out;
}

} // namespace

BoundedBasisCheck bounded_signature_basis_check(const SigSet& g, std::uint64_t max_degree) {
  BoundedBasisCheck out;
  std::vector<Multiple> ms = bounded_multiples(g, max_degree);
  if (ms.empty())
    return out;
  const Space& ss = *g.sig_space();
  std::stable_sort(ms.begin(), ms.end(),
                   [&](const Multiple& a, const Multiple& b) { return ss.less(a.signature, b.signature); });
  ColumnIndex cols(*g.part_space(), support(ms));
  Echelon ech(g.part_space()->field(), cols.size());
  std::vector<bool> admissible(cols.size(), false);
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    std::vector<std::size_t> fresh;
    while (j < ms.size() && ms[j].signature == ms[i].signature) {
      admissible[*cols.find(ms[j].part.lm())] = true;
      if (auto c = ech.add(cols.row(ms[j].part)))
        fresh.push_back(*c);
      ++j;
    }
    ++out.signatures_checked;
    for (std::size_t c : fresh) {
      if (!admissible[c]) {
        out.passed = false;
        out.violations.push_back(ms[i].signature);
        break;
      }
    }
    i = j;
  }
  return out;
}

BoundedSyzygyCheck bounded_syzygy_check(const SigSet& prebasis, const SigSet& result, std::uint64_t max_degree) {
  BoundedSyzygyCheck out;
  const Space& ps = *prebasis.part_space();
  const Space& ss = *prebasis.sig_space();
  const SpacePtr& sig_ptr = prebasis.sig_space();
  std::uint32_t r = std::max<std::uint32_t>(1, ps.rank());

  // Each input h_i in S with image g_i: either g_i spread over its block
  // (shifted) or the bare basis vector (unshifted).
  std::vector<Element> images, lifts;
  for (const SigPair& p : prebasis) {
    std::uint32_t block = (p.signature.index() - 1) / r;
    std::vector<Term> terms;
    for (const Term& t : p.part.terms()) {
      std::uint32_t j = ps.rank() == 0 ? 1 : t.monomial.index();
      terms.push_back({t.monomial.with_index(block * r + j), t.coefficient});
    }
    Element shifted = Element::from_terms(sig_ptr, std::move(terms));
    if (!p.part.is_zero() && shifted.lm() == p.signature) {
      lifts.push_back(std::move(shifted));
    } else if (p.signature.is_one()) {
      lifts.push_back(Element::monomial(sig_ptr, p.signature, ps.field().one()));
    } else {
      throw ContractError("prebasis is neither shifted nor unshifted");
    }
    images.push_back(p.part);
  }

  std::vector<Monomial> mults = multipliers_up_to(ps.ring(), max_degree);
  std::vector<std::pair<Element, Element>> rows;
  std::vector<Monomial> mcols, scols;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::uint64_t deg = images[i].is_zero() ? 0 : images[i].degree();
    for (const Monomial& a : mults) {
      if (a.degree() + deg > max_degree)
        continue;
      Element m = images[i].times(a), s = lifts[i].times(a);
      for (const Term& t : m.terms())
        mcols.push_back(t.monomial);
      for (const Term& t : s.terms())
        scols.push_back(t.monomial);
      rows.emplace_back(std::move(m), std::move(s));
    }
  }
  ColumnIndex mc(ps, std::move(mcols)), sc(ss, std::move(scols));
  Echelon ech(ps.field(), mc.size() + sc.size());
  for (const auto& [m, s] : rows) {
    Echelon::Row row = mc.row(m);
    Echelon::Row srow = sc.row(s);
    row.insert(row.end(), srow.begin(), srow.end());
    ech.add(row);
  }
  std::vector<Monomial> syz = syzygy_signatures(result);
  for (std::size_t c : ech.pivot_columns()) {
    if (c < mc.size())
      continue;
    const Monomial& lm = sc.monomial(c - mc.size());
    out.kernel_lms.push_back(lm);
    bool ok = std::any_of(syz.begin(), syz.end(),
                          [&](const Monomial& s) { return monoid_divides(s, lm, prebasis.monoid()); });
    if (!ok) {
      out.passed = false;
      out.uncovered.push_back(lm);
    }
  }
  return out;
}

bool prebasis_spotcheck_P2(const SigSet& g, const Monomial& sigma, std::uint64_t max_degree) {
  const MonoidSpec& monoid = g.monoid();
  const Space& ss = *g.sig_space();
  std::vector<Element> at;
  for (const SigPair& p : g)
    if (auto a = divide(p.signature, sigma, monoid))
      at.push_back(p.part.times(*a));
  if (at.size() < 2)
    return true;
  std::vector<Multiple> below;
  for (Multiple& m : bounded_multiples(g, max_degree))
    if (ss.less(m.signature, sigma))
      below.push_back(std::move(m));
  std::vector<Monomial> mons = support(below);
  for (const Element& e : at)
    for (const Term& t : e.terms())
      mons.push_back(t.monomial);
  ColumnIndex cols(*g.part_space(), std::move(mons));
  Echelon ech(g.part_space()->field(), cols.size());
  for (const Multiple& m : below)
    ech.add(cols.row(m.part));
  for (std::size_t k = 1; k < at.size(); ++k)
    if (!ech.congruent_up_to_scalar(cols.row(at[0]), cols.row(at[k])))
      return false;
  return true;
}

} // namespace sigbasis
