#include "sigbasis/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "sigbasis/error.hpp"

namespace sigbasis {

std::string format_monomial(const Monomial& m, const Ring& ring) {
  if (m.is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += ring.variables.at(i);
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  if (m.has_index()) {
    if (!out.empty())
      out += '*';
    out += "e_" + std::to_string(m.index());
  }
  return out.empty() ? "1" : out;
}

std::string format_element(const Element& f) {
  if (f.is_zero())
    return "0";
  const Ring& ring = f.space()->ring();
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    Coefficient c = t.coefficient;
    bool neg = c.is_negative();
    if (neg)
      c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool bare = t.monomial.is_one() && !t.monomial.has_index();
    if (bare) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += format_monomial(t.monomial, ring);
    } else {
      out += c.to_string() + "*" + format_monomial(t.monomial, ring);
    }
  }
  return out;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Exponent exponent() {
    mpz_class v = integer();
    if (v > mpz_class(std::to_string(std::numeric_limits<Exponent>::max())))
      fail("exponent overflow");
    return static_cast<Exponent>(v.get_ui());
  }

  // One factor of a term: a number, variable power or module basis vector.
  // Updates the running coefficient, exponents and index.
  void factor(mpq_class& coeff, std::vector<Exponent>& exps, std::uint32_t& index, bool allow_number) {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!allow_number)
        fail("unexpected number");
      mpq_class v(integer());
      if (accept('/')) {
        mpz_class d = integer();
        if (d == 0)
          fail("zero denominator");
        v /= d;
      }
      coeff *= v;
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      fail(std::string("unexpected character '") + (c ? std::string(1, c) : "end of input") + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(ring_.variables.begin(), ring_.variables.end(), name);
    if (it == ring_.variables.end()) {
      if (name.size() > 2 && name.compare(0, 2, "e_") == 0 &&
          std::all_of(name.begin() + 2, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        if (index != 0) {
          pos_ = start;
          fail("two module indices in one term");
        }
        index = static_cast<std::uint32_t>(std::stoul(name.substr(2)));
        if (index == 0) {
          pos_ = start;
          fail("module indices start at 1");
        }
        return;
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    Exponent e = 1;
    if (accept('^'))
      e = exponent();
    std::size_t v = static_cast<std::size_t>(it - ring_.variables.begin());
    std::uint64_t sum = std::uint64_t(exps[v]) + e;
    if (sum > std::numeric_limits<Exponent>::max())
      fail("exponent overflow");
    exps[v] = static_cast<Exponent>(sum);
  }

  struct RawTerm {
    mpq_class coeff;
    std::vector<Exponent> exps;
    std::uint32_t index = 0;
  };

  RawTerm term(bool allow_number) {
    RawTerm t{mpq_class(1), std::vector<Exponent>(ring_.width(), 0), 0};
    factor(t.coeff, t.exps, t.index, allow_number);
    while (accept('*'))
      factor(t.coeff, t.exps, t.index, allow_number);
    return t;
  }

  std::size_t pos() const { return pos_; }

private:
  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

Monomial parse_raw_monomial(std::string_view text, const Ring& ring) {
  Parser p(text, ring);
  if (p.at_end())
    p.fail("empty monomial");
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed == "0")
    return Monomial::zero();
  auto t = p.term(true);
  if (!p.at_end())
    p.fail("trailing input after monomial");
  if (t.coeff != 1)
    p.fail("a monomial takes no coefficient");
  return Monomial(std::span<const Exponent>(t.exps), t.index);
}

} // namespace

Monomial parse_monomial(std::string_view text, const Space& space) {
  Monomial m = parse_raw_monomial(text, space.ring());
  try {
    space.order().check(m);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return m;
}

Monomial parse_multiplier(std::string_view text, const Ring& ring) {
  Monomial m = parse_raw_monomial(text, ring);
  if (m.has_index())
    throw ParseError("multiplier must not carry a module index", 1, 1);
  return m;
}

Element parse_element(std::string_view text, const SpacePtr& space) {
  const Space& s = *space;
  Parser p(text, s.ring());
  if (p.at_end())
    p.fail("empty polynomial");
  std::vector<Term> terms;
  bool first = true;
  while (!p.at_end()) {
    bool neg = false;
    if (p.accept('-'))
      neg = true;
    else if (!p.accept('+') && !first)
      p.fail("expected '+' or '-'");
    first = false;
    auto t = p.term(true);
    if (neg)
      t.coeff = -t.coeff;
    Monomial m(std::span<const Exponent>(t.exps), t.index);
    try {
      s.order().check(m);
    } catch (const StructuralError& e) {
      throw ParseError(e.what(), 1, p.pos());
    }
    terms.push_back({std::move(m), s.field().from_rational(t.coeff)});
  }
  return Element::from_terms(space, std::move(terms));
}

} // namespace sigbasis
