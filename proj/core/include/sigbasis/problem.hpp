#ifndef SIGBASIS_PROBLEM_HPP
#define SIGBASIS_PROBLEM_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigbasis/sigpair.hpp"

namespace sigbasis {

enum class SigInit { shifted, unshifted, sum };

std::string to_string(SigInit s);
SigInit parse_sig_init(std::string_view s);
std::string to_string(ModuleOrder::Kind k);
ModuleOrder::Kind parse_module_order(std::string_view s);

struct SettingSpec {
  enum class Kind { ring, module, monoid };
  Kind kind = Kind::ring;
  std::uint32_t rank = 0;                             ///< module only
  ModuleOrder::Kind module_order = ModuleOrder::Kind::top;  ///< module only
  std::uint64_t min_degree = 0;                       ///< monoid: degmin=
  std::vector<std::string> exclusions;                ///< monoid: exclude=
  std::vector<std::string> generators;                ///< monoid: gens=

  bool operator==(const SettingSpec&) const = default;
};

/// Text-level description of an input system. The line format is
///
///     vars: x y
///     order: degrevlex            (optionally with a ranking such as `y<x`)
///     field: Q                    (or `GF 32003`)
///     setting: ring               (or `monoid degmin=2`, `module rank=2 order=pot`)
///     gens:
///     <one generator per line>
///
/// plus optional `name:`, `sig_order:`, `sig_init:` lines and a `gens2:`
/// section for the second summand of a sum prebasis. `#` starts a comment.
struct ProblemSpec {
  std::string name;
  std::vector<std::string> variables;
  ScalarOrder::Kind order = ScalarOrder::Kind::degrevlex;
  /// Variable names from smallest to largest; empty means declaration order.
  std::vector<std::string> ranking;
  Field field = Field::rationals();
  SettingSpec setting;
  std::vector<std::string> generators;
  std::vector<std::string> generators2;
  ModuleOrder::Kind sig_order = ModuleOrder::Kind::top;
  SigInit sig_init = SigInit::shifted;

  bool operator==(const ProblemSpec&) const = default;
};

ProblemSpec parse_problem(std::string_view text);
std::string render_problem(const ProblemSpec& spec);

/// "mora", or "katsuraN" / "katsura N" for 3 <= N <= 8.
ProblemSpec builtin_problem(std::string_view name);
/// Katsura-N over Q in variables a, b, ... with a the largest.
ProblemSpec katsura(unsigned n);

/// A parsed and validated problem ready to run.
struct Problem {
  ProblemSpec spec;
  RingPtr ring;
  SpacePtr part_space;
  std::vector<Element> generators;
  std::vector<Element> generators2;

  SigSet prebasis() const;
};

Problem instantiate(const ProblemSpec& spec);

} // namespace sigbasis

#endif
