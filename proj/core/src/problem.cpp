#include "sigbasis/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sigbasis/error.hpp"
#include "sigbasis/text.hpp"

namespace sigbasis {

std::string to_string(SigInit s) {
  switch (s) {
  case SigInit::shifted:
    return "shifted";
  case SigInit::unshifted:
    return "unshifted";
  case SigInit::sum:
    return "sum";
  }
  return "?";
}

SigInit parse_sig_init(std::string_view s) {
  if (s == "shifted")
    return SigInit::shifted;
  if (s == "unshifted")
    return SigInit::unshifted;
  if (s == "sum")
    return SigInit::sum;
  throw ContractError("unknown signature initialisation '" + std::string(s) + "'");
}

std::string to_string(ModuleOrder::Kind k) { return k == ModuleOrder::Kind::pot ? "pot" : "top"; }

ModuleOrder::Kind parse_module_order(std::string_view s) {
  if (s == "pot" || s == "POT")
    return ModuleOrder::Kind::pot;
  if (s == "top" || s == "TOP")
    return ModuleOrder::Kind::top;
  throw ContractError("unknown module order '" + std::string(s) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w)
    out.push_back(w);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find(sep, start);
    std::string_view piece = trim(s.substr(start, k == std::string_view::npos ? s.npos : k - start));
    if (!piece.empty())
      out.emplace_back(piece);
    if (k == std::string_view::npos)
      break;
    start = k + 1;
  }
  return out;
}

bool valid_identifier(const std::string& v) {
  if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
    return false;
  if (v.size() > 2 && v.compare(0, 2, "e_") == 0)
    return false;
  return std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct LineParser {
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t col = 1) const { throw ParseError(msg, line, col); }

  void parse_order(std::string_view value, ProblemSpec& spec) {
    auto w = words(value);
    if (w.empty())
      fail("missing order");
    if (w[0] == "degrevlex" || w[0] == "grevlex")
      spec.order = ScalarOrder::Kind::degrevlex;
    else if (w[0] == "lex")
      spec.order = ScalarOrder::Kind::lex;
    else
      fail("unknown order '" + w[0] + "'");
    spec.ranking.clear();
    if (w.size() == 1)
      return;
    std::string chain;
    for (std::size_t i = 1; i < w.size(); ++i)
      chain += w[i];
    bool ascending = chain.find('<') != std::string::npos;
    bool descending = chain.find('>') != std::string::npos;
    if (ascending == descending)
      fail("variable ranking must use only '<' or only '>'");
    auto names = split(chain, ascending ? '<' : '>');
    if (!ascending)
      std::reverse(names.begin(), names.end());
    spec.ranking = names;
  }

  void parse_field(std::string_view value, ProblemSpec& spec) {
    auto w = words(value);
    if (w.size() == 1 && (w[0] == "Q" || w[0] == "QQ")) {
      spec.field = Field::rationals();
      return;
    }
    if (w.size() == 2 && (w[0] == "GF" || w[0] == "gf")) {
      try {
        spec.field = Field::prime(static_cast<std::uint32_t>(std::stoul(w[1])));
      } catch (const std::exception& e) {
        fail(std::string("bad prime field: ") + e.what());
      }
      return;
    }
    fail("field must be 'Q' or 'GF <prime>'");
  }

  void parse_setting(std::string_view value, ProblemSpec& spec) {
    auto w = words(value);
    if (w.empty())
      fail("missing setting");
    SettingSpec s;
    if (w[0] == "ring") {
      if (w.size() != 1)
        fail("ring setting takes no parameters");
    } else if (w[0] == "module" || w[0] == "monoid") {
      s.kind = w[0] == "module" ? SettingSpec::Kind::module : SettingSpec::Kind::monoid;
      for (std::size_t i = 1; i < w.size(); ++i) {
        auto eq = w[i].find('=');
        if (eq == std::string::npos)
          fail("expected key=value, got '" + w[i] + "'");
        std::string key = w[i].substr(0, eq), val = w[i].substr(eq + 1);
        try {
          if (s.kind == SettingSpec::Kind::module && key == "rank")
            s.rank = static_cast<std::uint32_t>(std::stoul(val));
          else if (s.kind == SettingSpec::Kind::module && key == "order")
            s.module_order = parse_module_order(val);
          else if (s.kind == SettingSpec::Kind::monoid && key == "degmin")
            s.min_degree = std::stoull(val);
          else if (s.kind == SettingSpec::Kind::monoid && key == "exclude")
            s.exclusions = split(val, ',');
          else if (s.kind == SettingSpec::Kind::monoid && key == "gens")
            s.generators = split(val, ',');
          else
            fail("unknown setting parameter '" + key + "'");
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          fail("bad value for '" + key + "': " + e.what());
        }
      }
      if (s.kind == SettingSpec::Kind::module && s.rank == 0)
        fail("module setting needs rank=N with N >= 1");
      if (s.kind == SettingSpec::Kind::monoid && (s.min_degree == 0) == s.generators.empty())
        fail("monoid setting needs exactly one of degmin= or gens=");
      if (s.kind == SettingSpec::Kind::monoid && !s.exclusions.empty() && s.min_degree == 0)
        fail("exclude= only applies to degmin= monoids");
    } else {
      fail("unknown setting '" + w[0] + "'");
    }
    spec.setting = s;
  }
};

} // namespace

ProblemSpec parse_problem(std::string_view text) {
  ProblemSpec spec;
  LineParser lp;
  bool have_vars = false, have_field = false, have_setting = false, have_order = false;
  std::vector<std::string>* section = nullptr;
  std::vector<std::size_t>* section_lines = nullptr;
  std::vector<std::size_t> lines1, lines2;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++lp.line;
    auto hash = raw.find('#');
    std::string_view content = trim(hash == raw.npos ? raw : raw.substr(0, hash));
    if (content.empty()) {
      if (end == text.size())
        break;
      continue;
    }
    auto colon = content.find(':');
    std::string key = colon == content.npos ? "" : std::string(trim(content.substr(0, colon)));
    static const std::vector<std::string> keys = {"name", "vars", "order", "field", "setting",
                                                  "sig_order", "sig_init", "gens", "gens2"};
    if (colon == content.npos || std::find(keys.begin(), keys.end(), key) == keys.end()) {
      if (!section)
        lp.fail("unexpected line outside a gens section");
      section->emplace_back(content);
      section_lines->push_back(lp.line);
      continue;
    }
    std::string_view value = trim(content.substr(colon + 1));
    section = nullptr;
    if (key == "name") {
      spec.name = std::string(value);
    } else if (key == "vars") {
      spec.variables = words(value);
      if (spec.variables.empty())
        lp.fail("no variables declared");
      for (const auto& v : spec.variables)
        if (!valid_identifier(v))
          lp.fail("invalid variable name '" + v + "'");
      auto sorted = spec.variables;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        lp.fail("duplicate variable name");
      have_vars = true;
    } else if (key == "order") {
      lp.parse_order(value, spec);
      have_order = true;
    } else if (key == "field") {
      lp.parse_field(value, spec);
      have_field = true;
    } else if (key == "setting") {
      lp.parse_setting(value, spec);
      have_setting = true;
    } else if (key == "sig_order") {
      try {
        spec.sig_order = parse_module_order(std::string(value));
      } catch (const ContractError& e) {
        lp.fail(e.what());
      }
    } else if (key == "sig_init") {
      try {
        spec.sig_init = parse_sig_init(std::string(value));
      } catch (const ContractError& e) {
        lp.fail(e.what());
      }
    } else if (key == "gens" || key == "gens2") {
      section = key == "gens" ? &spec.generators : &spec.generators2;
      section_lines = key == "gens" ? &lines1 : &lines2;
      if (!value.empty()) {
        section->emplace_back(value);
        section_lines->push_back(lp.line);
      }
    }
    if (end == text.size())
      break;
  }
  lp.line = 0;
  if (!have_vars)
    lp.fail("missing 'vars:' line");
  if (!have_order)
    lp.fail("missing 'order:' line");
  if (!have_field)
    lp.fail("missing 'field:' line");
  if (!have_setting)
    lp.fail("missing 'setting:' line");
  if (!spec.ranking.empty()) {
    auto a = spec.ranking, b = spec.variables;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      lp.fail("variable ranking must list every declared variable exactly once");
    if (spec.ranking == spec.variables)
      spec.ranking.clear();
  }

  // Generators are checked here so that diagnostics carry the file position.
  ProblemSpec shell = spec;
  shell.generators.clear();
  shell.generators2.clear();
  shell.sig_init = SigInit::shifted;
  Problem base;
  try {
    base = instantiate(shell);
  } catch (const ParseError& e) {
    lp.fail("setting: " + e.detail());
  } catch (const std::logic_error& e) {
    lp.fail(e.what());
  }
  auto check = [&](const std::vector<std::string>& texts, const std::vector<std::size_t>& at) {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        (void)parse_element(texts[i], base.part_space);
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), at[i], e.column());
      } catch (const std::logic_error& e) {
        throw ParseError(e.what(), at[i], 1);
      }
    }
  };
  check(spec.generators, lines1);
  check(spec.generators2, lines2);
  if (spec.sig_init == SigInit::sum && spec.generators2.empty() && !spec.generators.empty())
    lp.fail("sig_init: sum needs a gens2: section");
  return spec;
}

std::string render_problem(const ProblemSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty())
    out << "name: " << spec.name << "\n";
  out << "vars:";
  for (const auto& v : spec.variables)
    out << ' ' << v;
  out << "\norder: " << (spec.order == ScalarOrder::Kind::degrevlex ? "degrevlex" : "lex");
  if (!spec.ranking.empty()) {
    out << ' ';
    for (std::size_t i = 0; i < spec.ranking.size(); ++i)
      out << (i ? "<" : "") << spec.ranking[i];
  }
  out << "\nfield: " << spec.field.name() << "\nsetting: ";
  const SettingSpec& s = spec.setting;
  auto join = [](const std::vector<std::string>& xs) {
    std::string r;
    for (std::size_t i = 0; i < xs.size(); ++i)
      r += (i ? "," : "") + xs[i];
    return r;
  };
  switch (s.kind) {
  case SettingSpec::Kind::ring:
    out << "ring";
    break;
  case SettingSpec::Kind::module:
    out << "module rank=" << s.rank << " order=" << to_string(s.module_order);
    break;
  case SettingSpec::Kind::monoid:
    out << "monoid";
    if (s.min_degree)
      out << " degmin=" << s.min_degree;
    if (!s.exclusions.empty())
      out << " exclude=" << join(s.exclusions);
    if (!s.generators.empty())
      out << " gens=" << join(s.generators);
    break;
  }
  out << "\nsig_order: " << to_string(spec.sig_order) << "\nsig_init: " << to_string(spec.sig_init) << "\ngens:\n";
  for (const auto& g : spec.generators)
    out << g << "\n";
  if (!spec.generators2.empty()) {
    out << "gens2:\n";
    for (const auto& g : spec.generators2)
      out << g << "\n";
  }
  return out.str();
}

ProblemSpec katsura(unsigned n) {
  if (n < 3 || n > 8)
    throw ContractError("katsura builtin supports 3 <= N <= 8");
  ProblemSpec spec;
  spec.name = "katsura" + std::to_string(n);
  for (unsigned i = 0; i < n; ++i)
    spec.variables.push_back(std::string(1, static_cast<char>('a' + i)));
  spec.ranking.assign(spec.variables.rbegin(), spec.variables.rend());
  spec.order = ScalarOrder::Kind::degrevlex;

  Problem scratch = instantiate([&] {
    ProblemSpec s = spec;
    s.generators = {"1"};
    return s;
  }());
  const SpacePtr& space = scratch.part_space;
  const Field& q = space->field();
  std::size_t w = n;
  auto var = [&](unsigned i) {
    std::vector<Exponent> e(w, 0);
    e[i] = 1;
    return Monomial(std::span<const Exponent>(e));
  };
  auto one = Monomial::one(w);

  std::vector<Term> lin{{one, q.from_integer(-1)}, {var(0), q.one()}};
  for (unsigned i = 1; i < n; ++i)
    lin.push_back({var(i), q.from_integer(2)});
  spec.generators.push_back(format_element(Element::from_terms(space, lin)));

  // sum over l in (-n, n) of u_|l| u_|m-l|, minus u_m; halved when m is odd
  // so that the quadratic part has coefficients 1 like the even equations.
  for (unsigned m = n - 1; m-- > 0;) {
    std::vector<Term> t;
    for (int l = -static_cast<int>(n) + 1; l < static_cast<int>(n); ++l) {
      unsigned i = static_cast<unsigned>(std::abs(l));
      unsigned j = static_cast<unsigned>(std::abs(static_cast<int>(m) - l));
      if (i >= n || j >= n)
        continue;
      t.push_back({var(i).times(var(j)), q.one()});
    }
    t.push_back({var(m), q.from_integer(-1)});
    Element e = Element::from_terms(space, std::move(t));
    if (m % 2 == 1)
      e = e.scaled(q.from_rational(mpq_class(1, 2)));
    spec.generators.push_back(format_element(e));
  }
  return spec;
}

ProblemSpec builtin_problem(std::string_view name) {
  std::string n;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)))
      n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "mora") {
    // The variable ranking puts y below x, which is the ranking under which
    // the worked trace of this system pops x^2*y^5*e_2 before x^5*y^2*e_3.
    return parse_problem("name: mora\n"
                         "vars: x y\n"
                         "order: degrevlex y<x\n"
                         "field: Q\n"
                         "setting: ring\n"
                         "gens:\n"
                         "x^2*y^2 - 1\n"
                         "y^5 - x^2*y\n"
                         "x^5 - x*y^2\n");
  }
  if (n.rfind("katsura", 0) == 0 && n.size() > 7) {
    std::string digits = n.substr(7);
    if (!digits.empty() && digits[0] == ':')
      digits = digits.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
      return katsura(static_cast<unsigned>(std::stoul(digits)));
  }
  throw ContractError("unknown builtin '" + std::string(name) + "' (expected mora or katsuraN)");
}

Problem instantiate(const ProblemSpec& spec) {
  Problem p;
  p.spec = spec;
  auto ring = std::make_shared<Ring>();
  ring->variables = spec.variables;
  ring->field = spec.field;
  const SettingSpec& s = spec.setting;
  if (s.kind == SettingSpec::Kind::monoid) {
    if (s.min_degree) {
      std::vector<Monomial> excl;
      for (const auto& e : s.exclusions)
        excl.push_back(parse_multiplier(e, *ring));
      ring->monoid = MonoidSpec::degree_truncated(s.min_degree, std::move(excl));
    } else {
      std::vector<Monomial> gens;
      for (const auto& g : s.generators)
        gens.push_back(parse_multiplier(g, *ring));
      ring->monoid = MonoidSpec::generated(std::move(gens));
    }
  }
  p.ring = ring;

  std::vector<std::size_t> ascending;
  if (spec.ranking.empty()) {
    for (std::size_t i = 0; i < spec.variables.size(); ++i)
      ascending.push_back(i);
  } else {
    for (const auto& name : spec.ranking) {
      auto it = std::find(spec.variables.begin(), spec.variables.end(), name);
      if (it == spec.variables.end())
        throw ParseError("ranking names unknown variable '" + name + "'", 0, 0);
      ascending.push_back(static_cast<std::size_t>(it - spec.variables.begin()));
    }
  }
  ScalarOrder base(spec.order, ascending);
  std::uint32_t rank = s.kind == SettingSpec::Kind::module ? s.rank : 0;
  p.part_space = make_space(p.ring, ModuleOrder(base, rank, s.module_order));

  auto parse_list = [&](const std::vector<std::string>& texts, std::vector<Element>& out) {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        out.push_back(parse_element(texts[i], p.part_space));
      } catch (const ParseError& e) {
        throw ParseError(std::string("generator ") + std::to_string(i + 1) + ": " + e.what(), e.line(), e.column());
      }
    }
  };
  parse_list(spec.generators, p.generators);
  parse_list(spec.generators2, p.generators2);
  if (spec.sig_init == SigInit::sum && p.generators2.empty() && !p.generators.empty())
    throw ContractError("sum initialisation needs a gens2: section");
  return p;
}

SigSet Problem::prebasis() const {
  if (generators.empty())
    return SigSet(part_space, make_signature_space(*part_space, 1, spec.sig_order));
  switch (spec.sig_init) {
  case SigInit::shifted:
    return make_prebasis_shifted(generators, spec.sig_order);
  case SigInit::unshifted:
    return make_prebasis_unshifted(generators, spec.sig_order);
  case SigInit::sum:
    return make_prebasis_sum(generators, generators2, spec.sig_order);
  }
  throw ContractError("unknown signature initialisation");
}

} // namespace sigbasis
