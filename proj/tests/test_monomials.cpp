#include <random>
#include <set>

#include "doctest.h"
#include "sigbasis/error.hpp"
#include "support.hpp"

using namespace sigbasis;
using namespace testing;

namespace {

Monomial m2(Exponent a, Exponent b, std::uint32_t index = 0) { return Monomial({a, b}, index); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t width, Exponent max_exp, std::uint32_t rank) {
  std::uniform_int_distribution<Exponent> e(0, max_exp);
  std::vector<Exponent> exps(width);
  for (auto& x : exps)
    x = e(rng);
  std::uint32_t index = 0;
  if (rank > 0)
    index = std::uniform_int_distribution<std::uint32_t>(1, rank)(rng);
  return Monomial(std::span<const Exponent>(exps), index);
}

std::vector<std::pair<std::string, ModuleOrder>> sample_orders() {
  std::vector<std::pair<std::string, ModuleOrder>> out;
  out.emplace_back("lex", ModuleOrder(ScalarOrder::lex(3)));
  out.emplace_back("degrevlex", ModuleOrder(ScalarOrder::degrevlex(3)));
  out.emplace_back("degrevlex permuted", ModuleOrder(ScalarOrder(ScalarOrder::Kind::degrevlex, {2, 0, 1})));
  out.emplace_back("lex permuted", ModuleOrder(ScalarOrder(ScalarOrder::Kind::lex, {1, 2, 0})));
  out.emplace_back("pot", ModuleOrder(ScalarOrder::degrevlex(3), 3, ModuleOrder::Kind::pot));
  out.emplace_back("top", ModuleOrder(ScalarOrder::degrevlex(3), 3, ModuleOrder::Kind::top));
  return out;
}

} // namespace

TEST_CASE("degrevlex and module orders on small examples") {
  ModuleOrder ring(ScalarOrder::degrevlex(2));  // x < y
  CHECK(ring.less(m2(4, 2), m2(2, 6)));
  CHECK(ring.less(m2(1, 0), m2(0, 1)));
  // Same degree: the larger exponent of the smallest variable is smaller.
  CHECK(ring.less(m2(2, 1), m2(1, 2)));

  ModuleOrder top(ScalarOrder::degrevlex(2), 2, ModuleOrder::Kind::top);
  CHECK(top.less(m2(2, 5, 1), m2(2, 5, 2)));
  CHECK(top.less(m2(2, 5, 2), m2(3, 5, 1)));

  ModuleOrder pot(ScalarOrder::degrevlex(2), 2, ModuleOrder::Kind::pot);
  CHECK(pot.less(m2(99, 0, 1), m2(1, 0, 2)));
  CHECK(pot.less(m2(1, 0, 2), m2(2, 0, 2)));
}

TEST_CASE("the zero monomial is below everything") {
  ModuleOrder ring(ScalarOrder::degrevlex(2));
  CHECK(ring.less(Monomial::zero(), Monomial::one(2)));
  CHECK(ring.compare(Monomial::zero(), Monomial::zero()) == std::strong_ordering::equal);
  ModuleOrder top(ScalarOrder::degrevlex(2), 2, ModuleOrder::Kind::top);
  CHECK(top.less(Monomial::zero(), m2(0, 0, 1)));
}

TEST_CASE("structural errors on mismatched monomials") {
  ModuleOrder ring(ScalarOrder::degrevlex(2));
  CHECK_THROWS_AS((void)ring.compare(m2(1, 0), Monomial({1, 0, 0})), StructuralError);
  ModuleOrder top(ScalarOrder::degrevlex(2), 2, ModuleOrder::Kind::top);
  CHECK_THROWS_AS((void)top.compare(m2(1, 0), m2(1, 0, 1)), StructuralError);
  CHECK_THROWS_AS(top.check(m2(1, 0, 3)), StructuralError);
  std::vector<Exponent> big{std::numeric_limits<Exponent>::max(), 0};
  Monomial huge{std::span<const Exponent>(big)};
  CHECK_THROWS_AS((void)huge.times(m2(1, 0)), StructuralError);
}

TEST_CASE("order properties on random samples") {
  constexpr int triples = 10000;
  for (const auto& [name, order] : sample_orders()) {
    CAPTURE(name);
    std::mt19937_64 rng(20240611);
    std::uint32_t rank = order.rank();
    int m2_checked = 0;
    for (int i = 0; i < triples; ++i) {
      Monomial a = random_monomial(rng, 3, 5, 0);
      Monomial m = random_monomial(rng, 3, 6, rank);
      Monomial n = random_monomial(rng, 3, 6, rank);
      auto c = order.compare(m, n);
      int truths = (c < 0) + (c == 0) + (c > 0);
      REQUIRE(truths == 1);
      REQUIRE((c == 0) == (m == n));
      REQUIRE(order.compare(n, m) == (0 <=> c));
      // M3: a*m >= m.
      REQUIRE(!order.less(m.times(a), m));
      if (c < 0) {
        ++m2_checked;
        REQUIRE(order.less(m.times(a), n.times(a)));
      } else if (c > 0) {
        ++m2_checked;
        REQUIRE(order.less(n.times(a), m.times(a)));
      }
    }
    CHECK(m2_checked >= triples * 9 / 10);
  }
}

TEST_CASE("divide in the three settings") {
  MonoidSpec full = MonoidSpec::full();
  auto q = divide(m2(2, 2), m2(2, 5), full);
  REQUIRE(q);
  CHECK(*q == m2(0, 3));
  CHECK(!divide(m2(1, 0, 1), m2(2, 0, 2), full));
  CHECK(divide(m2(1, 0, 2), m2(2, 3, 2), full) == m2(1, 3));
  CHECK(!divide(m2(2, 0), m2(1, 5), full));

  MonoidSpec deg2 = MonoidSpec::degree_truncated(2);
  CHECK(!divide(m2(2, 0), m2(3, 0), deg2));
  CHECK(divide(m2(2, 0), m2(3, 1), deg2) == m2(1, 1));
  CHECK(divide(m2(2, 0), m2(2, 0), deg2) == m2(0, 0));

  // divide(m, n) = a implies m <= n and a*m = n.
  ModuleOrder order(ScalarOrder::degrevlex(3));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Monomial m = random_monomial(rng, 3, 3, 0);
    Monomial n = random_monomial(rng, 3, 5, 0);
    if (auto a = divide(m, n, full)) {
      CHECK(!order.less(n, m));
      CHECK(m.times(*a) == n);
    }
  }
}

TEST_CASE("monoid membership") {
  CHECK(monoid_member(m2(7, 3), MonoidSpec::full()));
  MonoidSpec deg2 = MonoidSpec::degree_truncated(2);
  CHECK(!monoid_member(m2(1, 0), deg2));
  CHECK(!monoid_member(m2(0, 1), deg2));
  CHECK(monoid_member(m2(1, 1), deg2));
  CHECK(monoid_member(m2(0, 0), deg2));
  MonoidSpec gen = MonoidSpec::generated({m2(2, 0), m2(1, 1), m2(0, 2)});
  CHECK(monoid_member(m2(3, 1), gen));
  CHECK(!monoid_member(m2(3, 0), gen));
  CHECK(monoid_member(m2(0, 0), gen));
  CHECK(!monoid_member(m2(1, 0), gen));
}

TEST_CASE("degree-truncated exclusions must keep the monoid closed") {
  // Excluding x^2 alone is not closed: x^2 = x * x would need x, which is not a member.
  CHECK_NOTHROW(MonoidSpec::degree_truncated(2, {m2(2, 0)}));
  // With d = 1, excluding x^2 while x is a member breaks closure.
  CHECK_THROWS((void)MonoidSpec::degree_truncated(1, {m2(2, 0)}));
  MonoidSpec ok = MonoidSpec::degree_truncated(2, {m2(2, 0)});
  CHECK(!ok.contains(m2(2, 0)));
  CHECK(ok.contains(m2(4, 0)));
}

TEST_CASE("minimal common multiples in polynomial and module settings") {
  auto r = minimal_common_multiples(m2(2, 2), m2(0, 5), MonoidSpec::full());
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].first == m2(0, 3));
  CHECK(r.pairs[0].second == m2(2, 0));
  CHECK(r.complete);
  CHECK(minimal_common_multiples(m2(1, 0, 1), m2(0, 1, 2), MonoidSpec::full()).pairs.empty());
  auto same = minimal_common_multiples(m2(1, 0, 2), m2(0, 1, 2), MonoidSpec::full());
  REQUIRE(same.pairs.size() == 1);
  CHECK(same.pairs[0].first == m2(0, 1));
}

namespace {

// Solutions (a, b) with a*m = b*n, a, b in A, by brute force up to a degree.
std::vector<Monomial> brute_solutions(const Monomial& m, const Monomial& n, const MonoidSpec& spec,
                                      std::uint64_t max_degree) {
  std::vector<Monomial> out;
  for_each_monomial_up_to(m.width(), max_degree, [&](const Monomial& a) {
    if (!spec.contains(a))
      return;
    if (divide(n, m.times(a), spec))
      out.push_back(a);
  });
  return out;
}

bool above(const Monomial& a, const Monomial& c, const MonoidSpec& spec) { return divide(c, a, spec).has_value(); }

void check_against_brute_force(const Monomial& m, const Monomial& n, const MonoidSpec& spec) {
  auto r = minimal_common_multiples(m, n, spec);
  for (const auto& [a, b] : r.pairs) {
    CHECK(spec.contains(a));
    CHECK(spec.contains(b));
    CHECK(m.times(a) == n.times(b));
  }
  for (std::size_t i = 0; i < r.pairs.size(); ++i)
    for (std::size_t j = 0; j < r.pairs.size(); ++j)
      if (i != j)
        CHECK(!above(r.pairs[j].first, r.pairs[i].first, spec));
  auto solutions = brute_solutions(m, n, spec, m.degree() + n.degree() + 6);
  std::set<std::vector<Exponent>> minimal;
  for (const auto& a : solutions) {
    bool covered = false;
    for (const auto& [c, b] : r.pairs)
      covered = covered || above(a, c, spec);
    CHECK_MESSAGE(covered, "uncovered solution");
    bool is_min = true;
    for (const auto& c : solutions)
      if (!(c == a) && above(a, c, spec))
        is_min = false;
    if (is_min)
      minimal.insert({a.exponents().begin(), a.exponents().end()});
  }
  std::set<std::vector<Exponent>> got;
  for (const auto& [a, b] : r.pairs)
    got.insert({a.exponents().begin(), a.exponents().end()});
  CHECK(got == minimal);
}

} // namespace

TEST_CASE("minimal common multiples agree with brute force") {
  std::vector<MonoidSpec> specs = {MonoidSpec::full(), MonoidSpec::degree_truncated(2),
                                   MonoidSpec::degree_truncated(3),
                                   MonoidSpec::generated({m2(2, 0), m2(1, 1), m2(0, 2)}),
                                   MonoidSpec::generated({m2(1, 0), m2(0, 2)})};
  std::vector<std::pair<Monomial, Monomial>> pairs = {
      {m2(2, 0), m2(1, 1)}, {m2(2, 2), m2(0, 5)}, {m2(3, 0), m2(0, 3)}, {m2(1, 2), m2(2, 1)}, {m2(2, 0), m2(2, 0)}};
  for (std::size_t s = 0; s < specs.size(); ++s)
    for (const auto& [m, n] : pairs) {
      CAPTURE(s);
      check_against_brute_force(m, n, specs[s]);
    }
}

TEST_CASE("generated monoid from the worked monoid-algebra example") {
  // K[x^2, xy, y^2]: the minimal multipliers of x^2 against xy are xy and y^2.
  MonoidSpec gen = MonoidSpec::generated({m2(2, 0), m2(1, 1), m2(0, 2)});
  auto r = minimal_common_multiples(m2(2, 0), m2(1, 1), gen);
  std::set<std::vector<Exponent>> got;
  for (const auto& [a, b] : r.pairs)
    got.insert({a.exponents().begin(), a.exponents().end()});
  CHECK(got == std::set<std::vector<Exponent>>{{1, 1}, {0, 2}});
  CHECK(r.complete);
}
