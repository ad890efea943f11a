#ifndef SIGBASIS_TESTS_SUPPORT_HPP
#define SIGBASIS_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "sigbasis/engine.hpp"
#include "sigbasis/problem.hpp"
#include "sigbasis/text.hpp"

namespace testing {

using namespace sigbasis;

inline Problem load(const std::string& builtin, ModuleOrder::Kind order = ModuleOrder::Kind::top,
                    SigInit init = SigInit::shifted) {
  ProblemSpec spec = builtin_problem(builtin);
  spec.sig_order = order;
  spec.sig_init = init;
  return instantiate(spec);
}

/// A problem from header lines plus generators, e.g. ring("x", "x - 1").
inline Problem ring(const std::string& vars, const std::vector<std::string>& gens,
                    const std::string& setting = "ring", const std::string& order = "degrevlex") {
  std::string text = "vars: " + vars + "\norder: " + order + "\nfield: Q\nsetting: " + setting + "\ngens:\n";
  for (const auto& g : gens)
    text += g + "\n";
  return instantiate(parse_problem(text));
}

inline Monomial sig(const SigSet& g, const std::string& text) { return parse_monomial(text, *g.sig_space()); }
inline Monomial mono(const Problem& p, const std::string& text) { return parse_monomial(text, *p.part_space); }
inline Monomial mult(const Problem& p, const std::string& text) { return parse_multiplier(text, *p.ring); }
inline Element elem(const Problem& p, const std::string& text) { return parse_element(text, p.part_space); }

inline std::string fmt(const SigSet& g, const Monomial& m) { return format_monomial(m, g.part_space()->ring()); }

inline std::vector<std::string> fmt_all(const SigSet& g, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms)
    out.push_back(fmt(g, m));
  return out;
}

inline RunResult run_with(const SigSet& pre, Strategy s, bool invariants = true) {
  RunOptions o;
  o.strategy = s;
  o.check_invariants = invariants;
  return run(pre, o);
}

} // namespace testing

#endif
