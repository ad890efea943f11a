#include <random>

#include "doctest.h"
#include "sigbasis/error.hpp"
#include "sigbasis/verify.hpp"
#include "support.hpp"

using namespace sigbasis;
using namespace testing;

namespace {

// K[x] with signatures in K[x] itself, as in the one-variable worked example.
struct Scalar {
  Problem p = ring("x", {"x - 1"});
  SigSet g{p.part_space, p.part_space};
  Scalar() { g.add({elem(p, "x - 1"), mono(p, "x"), 1}); }
  SigPair pair(const std::string& part, const std::string& s) const { return {elem(p, part), mono(p, s), 0}; }
};

} // namespace

TEST_CASE("regular reduction in the one-variable example") {
  Scalar s;
  auto r = regular_normal_form(s.pair("x^2", "x^3"), s.g);
  CHECK(r.result.part == elem(s.p, "1"));
  CHECK(r.result.signature == mono(s.p, "x^3"));
  CHECK(r.steps == 2);

  SigPair f1 = s.pair("x^2", "x");
  CHECK(!is_regular_reducible(f1, s.g));
  CHECK(regular_normal_form(f1, s.g).result.part == f1.part);
  CHECK(regular_normal_form(f1, s.g).steps == 0);

  auto red = find_regular_reducer(mono(s.p, "x^2"), mono(s.p, "x^3"), s.g);
  REQUIRE(red);
  CHECK(red->multiplier == mult(s.p, "x"));
  CHECK(!find_regular_reducer(mono(s.p, "x^2"), mono(s.p, "x"), s.g));
}

TEST_CASE("multiplying sigpairs") {
  Problem p = load("mora");
  SigSet g = p.prebasis();
  SigPair id = multiply(mult(p, "1"), g[1]);
  CHECK(id.part == g[1].part);
  CHECK(id.signature == g[1].signature);
  SigPair a = multiply(mult(p, "x^2"), g[1]);
  CHECK(a.part == elem(p, "x^2*y^5 - x^4*y"));
  CHECK(a.signature == sig(g, "x^2*y^5*e_2"));
  CHECK(a.id == g[1].id);
  SigPair b = multiply(mult(p, "y^3"), g[0]);
  CHECK(b.part == elem(p, "x^2*y^5 - y^3"));
  CHECK(b.signature == sig(g, "x^2*y^5*e_1"));
}

TEST_CASE("shifted prebasis of the Mora system") {
  Problem p = load("mora");
  SigSet g = p.prebasis();
  REQUIRE(g.size() == 3);
  CHECK(format_sigpair(g[0], g) == "x^2*y^2 - 1 @ x^2*y^2*e_1");
  CHECK(format_sigpair(g[1], g) == "y^5 - x^2*y @ y^5*e_2");
  CHECK(format_sigpair(g[2], g) == "x^5 - x*y^2 @ x^5*e_3");
  CHECK(g[0].id == 1);
  CHECK(g[2].id == 3);
  CHECK(parse_sigpair("y^5 - x^2*y @ y^5*e_2", g, 9).part == g[1].part);

  // Distinct indices: at most one member signature divides any signature.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Exponent> e(0, 9);
  std::uniform_int_distribution<std::uint32_t> ix(1, 3);
  for (int i = 0; i < 500; ++i) {
    Monomial s({e(rng), e(rng)}, ix(rng));
    int dividing = 0;
    for (const SigPair& m : g)
      dividing += monoid_divides(m.signature, s, g.monoid());
    CHECK(dividing <= 1);
  }
}

TEST_CASE("shifted prebasis of Katsura-6") {
  Problem p = load("katsura6");
  SigSet g = p.prebasis();
  REQUIRE(g.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(g[i].signature == g[i].part.lm().with_index(static_cast<std::uint32_t>(i + 1)));
    CHECK(g[i].part.lc().is_one());
  }
  Problem u = load("katsura6", ModuleOrder::Kind::top, SigInit::unshifted);
  SigSet h = u.prebasis();
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(fmt(h, h[i].signature) == "e_" + std::to_string(i + 1));
}

TEST_CASE("unshifted and sum prebases") {
  Problem p = load("mora", ModuleOrder::Kind::top, SigInit::unshifted);
  SigSet g = p.prebasis();
  CHECK(fmt_all(g, {g[0].signature, g[1].signature, g[2].signature}) ==
        std::vector<std::string>{"e_1", "e_2", "e_3"});

  Problem k = ring("x", {"x - 1"});
  SigSet one = make_prebasis_unshifted(k.generators, ModuleOrder::Kind::top);
  CHECK(format_sigpair(one[0], one) == "x - 1 @ e_1");

  Problem m = ring("x y", {"x*e_1 + y*e_2"}, "module rank=2 order=top");
  CHECK_THROWS_AS((void)make_prebasis_unshifted(m.generators, ModuleOrder::Kind::top), UnsupportedError);

  Problem xy = ring("x y", {"x - 1", "y - 1"});
  SigSet s = make_prebasis_sum({xy.generators[0]}, {xy.generators[1]}, ModuleOrder::Kind::top);
  CHECK(format_sigpair(s[0], s) == "x - 1 @ x*e_1");
  CHECK(format_sigpair(s[1], s) == "y - 1 @ y*e_2");
  SigSet only_h = make_prebasis_sum({}, {xy.generators[1]}, ModuleOrder::Kind::top);
  REQUIRE(only_h.size() == 1);
  CHECK(format_sigpair(only_h[0], only_h) == "y - 1 @ y*e_2");
}

TEST_CASE("sum prebasis over Mora with each summand a Groebner basis") {
  Problem p = load("mora");
  std::vector<Element> g = {p.generators[0]};
  std::vector<Element> h = {p.generators[1], p.generators[2]};
  // {g2, g3} is already a Groebner basis: the oracle adds nothing new.
  CHECK(lm_ideal_equal(leading_monomials(buchberger(h)), leading_monomials(h), p.ring->monoid));
  SigSet s = make_prebasis_sum(g, h, ModuleOrder::Kind::top);
  REQUIRE(s.size() == 3);
  CHECK(fmt_all(s, {s[0].signature, s[1].signature, s[2].signature}) ==
        std::vector<std::string>{"x^2*y^2*e_1", "y^5*e_2", "x^5*e_2"});
  RunResult r = run_with(s, Strategy::in_order());
  CHECK(faugere_certificate(r.basis).passed);
  CHECK(lm_ideal_equal(leading_monomials(r.basis), leading_monomials(buchberger(p.generators)), p.ring->monoid));
}

TEST_CASE("rejected prebasis inputs") {
  Problem p = ring("x", {"x - 1"});
  Element zero(p.part_space);
  CHECK_THROWS_AS((void)make_prebasis_shifted({zero}, ModuleOrder::Kind::top), ContractError);
  CHECK(instantiate(parse_problem("vars: x\norder: degrevlex\nfield: Q\nsetting: ring\ngens:\n")).prebasis().empty());
}

TEST_CASE("regular reducers on the Mora prebasis") {
  Problem p = load("mora");
  SigSet g = p.prebasis();
  auto r = find_regular_reducer(mono(p, "x^2*y^5"), sig(g, "x^2*y^5*e_2"), g);
  REQUIRE(r);
  CHECK(r->member == 0);
  CHECK(r->multiplier == mult(p, "y^3"));
  CHECK(r->signature == sig(g, "x^2*y^5*e_1"));

  auto nf = regular_normal_form(multiply(mult(p, "x^2"), g[1]), g);
  CHECK(nf.result.part == elem(p, "x^4*y - y^3"));
  CHECK(nf.result.signature == sig(g, "x^2*y^5*e_2"));
  CHECK(!is_regular_reducible(nf.result, g));
}

namespace {

bool d1(const SigPair& g, const SigPair& f, const SigSet& ctx) {
  auto a = divide(g.signature, f.signature, ctx.monoid());
  if (!a)
    return false;
  Monomial l = g.part.is_zero() ? Monomial::zero() : g.part.lm().times(*a);
  return !ctx.part_space()->less(f.part.lm(), l);
}

bool d2(const SigPair& g, const SigPair& f, const SigSet& ctx) {
  if (g.part.is_zero() || f.part.is_zero())
    return false;
  auto a = divide(g.part.lm(), f.part.lm(), ctx.monoid());
  return a && ctx.sig_less(g.signature.times(*a), f.signature);
}

} // namespace

TEST_CASE("domination") {
  Problem p = load("mora");
  SigSet g = p.prebasis();
  CHECK(dominates(g[0], g[0], g) == Domination::same_signature);
  SigPair f{elem(p, "x^4*y^2 - x^2"), sig(g, "x^4*y^2*e_1"), 0};
  CHECK(dominates(g[0], f, g) == Domination::same_signature);
  CHECK(dominates(g[1], g[0], g) == Domination::none);

  // Random small sigpairs: the combined relation is the union of D1 and D2,
  // and each condition alone is transitive.
  Problem q = ring("x y", {"x"}, "ring");
  SigSet ctx(q.part_space, make_signature_space(*q.part_space, 2, ModuleOrder::Kind::top));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Exponent> e(0, 2);
  std::uniform_int_distribution<std::uint32_t> ix(1, 2);
  std::vector<SigPair> pool;
  for (int i = 0; i < 40; ++i) {
    Monomial lmv({e(rng), e(rng)});
    Element part = rng() % 6 == 0 ? Element(q.part_space) : Element::monomial(q.part_space, lmv, q.ring->field.one());
    pool.push_back({part, Monomial({e(rng), e(rng)}, ix(rng)), 0});
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK((dominates(a, b, ctx) != Domination::none) == (d1(a, b, ctx) || d2(a, b, ctx)));
      for (const auto& c : pool) {
        if (d1(a, b, ctx) && d1(b, c, ctx))
          CHECK(d1(a, c, ctx));
        if (d2(a, b, ctx) && d2(b, c, ctx))
          CHECK(d2(a, c, ctx));
      }
    }
}

TEST_CASE("signature classification on the certified Mora basis") {
  Problem p = load("mora");
  RunResult r = run_with(p.prebasis(), Strategy::in_order());
  auto cert = CertifiedBasis::certify(r.basis);
  REQUIRE(cert);
  const SigSet& g = cert->sigset();
  CHECK(classify_signature(sig(g, "e_1"), *cert) == SignatureClass::empty);
  CHECK(classify_signature(sig(g, "x^2*y^2*e_1"), *cert) == SignatureClass::regular);
  CHECK(classify_signature(sig(g, "x^5*y^5*e_3"), *cert) == SignatureClass::syzygy);
  CHECK(!CertifiedBasis::certify(p.prebasis()));

  auto syz = syzygy_signatures(r.basis);
  bool covers = false;
  for (const auto& s : syz)
    covers = covers || monoid_divides(s, sig(g, "x^5*y^5*e_3"), g.monoid());
  CHECK(covers);
  CHECK(syzygy_signatures(p.prebasis()).empty());

  Problem k = ring("x", {"x"});
  SigSet z(k.part_space, make_signature_space(*k.part_space, 1, ModuleOrder::Kind::top));
  z.add({Element(k.part_space), parse_monomial("x*e_1", *z.sig_space()), 1});
  CHECK(fmt_all(z, syzygy_signatures(z)) == std::vector<std::string>{"x*e_1"});
}

TEST_CASE("all multiples at a signature reduce to the same leading monomial") {
  Problem p = load("mora");
  RunResult r = run_with(p.prebasis(), Strategy::in_order());
  const SigSet& g = r.basis;
  std::size_t with_choice = 0;
  for_each_monomial_up_to(2, 10, [&](const Monomial& a) {
    for (std::uint32_t i = 1; i <= 3; ++i) {
      Monomial sigma = a.with_index(i);
      std::vector<Monomial> lms;
      for (const SigPair& m : g)
        if (auto q = divide(m.signature, sigma, g.monoid()))
          lms.push_back(regular_normal_form(multiply(*q, m), g).result.part.lm());
      if (lms.size() > 1)
        ++with_choice;
      for (const auto& l : lms)
        CHECK(l == lms.front());
    }
  });
  CHECK(with_choice > 10);
}
