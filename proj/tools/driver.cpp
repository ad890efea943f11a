#include "driver.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "sigbasis/error.hpp"
#include "sigbasis/problem.hpp"
#include "sigbasis/serialize.hpp"
#include "sigbasis/text.hpp"
#include "sigbasis/verify.hpp"

namespace sigbasis::cli {
namespace {

struct Input {
  std::string file;
  std::string builtin;
  std::string field;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("file", in.file, "Problem file");
  cmd->add_option("--builtin", in.builtin, "Builtin system: mora, katsuraN");
  cmd->add_option("--field", in.field, "Override the field: q or gf:P");
}

ProblemSpec load_spec(const Input& in) {
  if (in.file.empty() == in.builtin.empty())
    throw CLI::ValidationError("input", "give exactly one of FILE or --builtin");
  ProblemSpec spec;
  if (!in.builtin.empty()) {
    spec = builtin_problem(in.builtin);
  } else {
    std::ifstream f(in.file);
    if (!f)
      throw std::runtime_error("cannot open " + in.file);
    std::ostringstream s;
    s << f.rdbuf();
    try {
      spec = parse_problem(s.str());
    } catch (const ParseError& e) {
      throw ParseError(in.file + ": " + e.detail(), e.line(), e.column());
    }
  }
  if (!in.field.empty()) {
    if (in.field == "q" || in.field == "Q")
      spec.field = Field::rationals();
    else if (in.field.rfind("gf:", 0) == 0 || in.field.rfind("GF:", 0) == 0)
      spec.field = Field::prime(static_cast<std::uint32_t>(std::stoul(in.field.substr(3))));
    else
      throw CLI::ValidationError("--field", "expected q or gf:P");
    // Re-validate: coefficients such as 1/p have no image in GF(p).
    spec = parse_problem(render_problem(spec));
  }
  return spec;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write " + path);
  f << text;
}

struct RunArgs {
  Input input;
  std::string strategy = "in-order";
  std::size_t batch = 4;
  std::string sig_order;
  std::string sig_init;
  std::string emit_dot, emit_trace, emit_json, fixture;
  bool verify = false;
  std::uint64_t verify_deep = 0;
  bool check_invariants = false;
  std::size_t max_insertions = Limits{}.max_insertions;
  double max_seconds = Limits{}.max_seconds;
  bool quiet = false;
};

/// Returns the failures found; empty means every check passed.
std::vector<std::string> verify_result(const RunArgs& a, const Problem& problem, const SigSet& prebasis,
                                       const RunResult& r, std::ostream& out) {
  std::vector<std::string> failures;
  const Ring& ring = *problem.ring;

  auto cert = faugere_certificate(r.basis);
  out << "certificate: " << (cert.passed ? "pass" : "FAIL") << " (" << cert.checked << " critical signatures"
      << (cert.complete ? "" : ", search incomplete") << ")\n";
  if (!cert.passed) {
    std::string s = "certificate failed at";
    for (const auto& m : cert.failures)
      s += " " + format_monomial(m, ring);
    failures.push_back(s);
  }

  auto tree = validate_sigtree(r.tree, r.basis, r.strategy.kind != Strategy::Kind::f4);
  out << "sigtree: " << (tree.empty() ? "pass" : "FAIL") << "\n";
  for (const auto& v : tree)
    failures.push_back("sigtree " + v.rule + " at node " + std::to_string(v.node) + ": " + v.detail);

  std::vector<Monomial> reference;
  if (!a.fixture.empty()) {
    Fixture fx = load_fixture(a.fixture);
    for (const auto& t : fx.lm_set)
      reference.push_back(parse_monomial(t, *problem.part_space));
  } else {
    reference = leading_monomials(buchberger(problem.generators));
  }
  bool same = lm_ideal_equal(leading_monomials(r.basis), reference, ring.monoid);
  out << "oracle lm ideal: " << (same ? "equal" : "DIFFERENT") << (a.fixture.empty() ? " (live)" : " (fixture)")
      << "\n";
  if (!same)
    failures.push_back("leading monomial ideal differs from the oracle");

  if (a.verify_deep > 0) {
    auto b = bounded_signature_basis_check(r.basis, a.verify_deep);
    out << "bounded signature basis to degree " << a.verify_deep << ": " << (b.passed ? "pass" : "FAIL") << " ("
        << b.signatures_checked << " signatures)\n";
    for (const auto& m : b.violations)
      failures.push_back("bounded signature basis violated at " + format_monomial(m, ring));
    auto z = bounded_syzygy_check(prebasis, r.basis, a.verify_deep);
    out << "bounded syzygy check to degree " << a.verify_deep << ": " << (z.passed ? "pass" : "FAIL") << " ("
        << z.kernel_lms.size() << " kernel leading monomials)\n";
    for (const auto& m : z.uncovered)
      failures.push_back("kernel leading monomial not covered: " + format_monomial(m, ring));
  }
  return failures;
}

int do_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  ProblemSpec spec = load_spec(a.input);
  if (!a.sig_order.empty())
    spec.sig_order = parse_module_order(a.sig_order);
  if (!a.sig_init.empty())
    spec.sig_init = parse_sig_init(a.sig_init);
  Problem problem = instantiate(spec);
  SigSet prebasis = problem.prebasis();

  RunOptions opts;
  opts.strategy = parse_strategy(a.strategy, a.batch);
  opts.limits = {a.max_insertions, a.max_seconds};
  opts.check_invariants = a.check_invariants;
  std::unique_ptr<std::ofstream> trace_file;
  if (!a.emit_trace.empty()) {
    trace_file = std::make_unique<std::ofstream>(a.emit_trace, std::ios::binary);
    if (!*trace_file)
      throw std::runtime_error("cannot write " + a.emit_trace);
    opts.trace = [&f = *trace_file, ring = problem.ring](const TraceEvent& e) { f << trace_json(e, *ring) << '\n'; };
  }

  auto emit = [&](const RunResult& r) {
    if (!a.emit_dot.empty())
      write_file(a.emit_dot, export_dot(r.tree, r.basis, minimal_leading_monomials(r.basis)));
    if (!a.emit_json.empty())
      write_file(a.emit_json, result_json(r));
  };

  auto start = std::chrono::steady_clock::now();
  std::optional<RunResult> result;
  try {
    result.emplace(run(prebasis, opts));
  } catch (const LimitExceeded& e) {
    emit(e.partial());
    err << "limit exceeded: " << e.what() << "\n";
    return limit_breach;
  }
  const RunResult& r = *result;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(r);

  if (!a.quiet) {
    out << "system: " << (spec.name.empty() ? a.input.file : spec.name) << "\n"
        << "strategy: " << r.strategy.name() << ", sig order " << to_string(spec.sig_order) << ", init "
        << to_string(spec.sig_init) << ", field " << spec.field.name() << "\n"
        << "basis: " << r.basis.size() << " sigpairs, " << r.syzygies.size() << " syzygy signatures\n"
        << "stats: " << r.stats.iterations << " iterations, " << r.stats.insertions << " insertions, "
        << r.stats.zero_reductions << " zero reductions, " << r.stats.reduction_steps << " reduction steps\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "time: " << secs << " s\n";
    out.unsetf(std::ios::fixed);
    if (!r.critical_search_complete)
      out << "warning: a monoid critical-multiple search could not certify completeness\n";
  }

  if (!a.verify && a.verify_deep == 0)
    return ok;
  auto failures = verify_result(a, problem, prebasis, r, out);
  for (const auto& f : failures)
    err << "verification: " << f << "\n";
  return failures.empty() ? ok : verification_failed;
}

int do_oracle(const Input& in, const std::string& out_path, std::ostream& out) {
  ProblemSpec spec = load_spec(in);
  Problem problem = instantiate(spec);
  auto basis = buchberger(problem.generators);
  Fixture fx;
  fx.system = spec.name.empty() ? in.file : spec.name;
  std::string order = render_problem(spec);
  fx.order = order.substr(order.find("order: ") + 7);
  fx.order = fx.order.substr(0, fx.order.find('\n'));
  fx.field = spec.field.name();
  for (const auto& e : basis) {
    fx.reduced_basis.push_back(format_element(e));
    fx.lm_set.push_back(format_monomial(e.lm(), *problem.ring));
  }
  if (out_path.empty())
    out << fixture_json(fx);
  else
    save_fixture(out_path, fx);
  return ok;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature Groebner basis computation"};
  app.name("sigbasis");
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Compute a signature basis");
  add_input(run_cmd, ra.input);
  run_cmd->add_option("--strategy", ra.strategy, "in-order, min-lm, f5, f5-pruned or f4")
      ->check(CLI::IsMember({"in-order", "min-lm", "f5", "f5-pruned", "f4", "in_order", "min_lm", "f5_pruned"}));
  run_cmd->add_option("--batch", ra.batch, "Batch size for f4")->check(CLI::PositiveNumber);
  run_cmd->add_option("--sig-order", ra.sig_order, "pot or top")->check(CLI::IsMember({"pot", "top"}));
  run_cmd->add_option("--sig-init", ra.sig_init, "shifted, unshifted or sum")
      ->check(CLI::IsMember({"shifted", "unshifted", "sum"}));
  run_cmd->add_option("--emit-dot", ra.emit_dot, "Write the sigtree as Graphviz");
  run_cmd->add_option("--emit-trace", ra.emit_trace, "Write JSON-lines trace events");
  run_cmd->add_option("--emit-json", ra.emit_json, "Write the result as JSON");
  run_cmd->add_flag("--verify", ra.verify, "Certificate, oracle comparison and sigtree validation");
  run_cmd->add_option("--verify-deep", ra.verify_deep, "Also run the bounded checks to this degree");
  run_cmd->add_option("--fixture", ra.fixture, "Compare against a fixture instead of a live oracle run");
  run_cmd->add_flag("--check-invariants", ra.check_invariants, "Assert the queue invariant at every loop head");
  run_cmd->add_option("--max-insertions", ra.max_insertions, "Insertion limit");
  run_cmd->add_option("--max-seconds", ra.max_seconds, "Wall-clock limit");
  run_cmd->add_flag("--quiet", ra.quiet, "Only print verification results");

  Input oracle_in;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Reduced Groebner basis by plain Buchberger, as a fixture");
  add_input(oracle_cmd, oracle_in);
  oracle_cmd->add_option("-o,--output", oracle_out, "Fixture path (default stdout)");

  Input render_in;
  auto* render_cmd = app.add_subcommand("render", "Print the normalised problem text");
  add_input(render_cmd, render_in);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    if (*run_cmd)
      return do_run(ra, out, err);
    if (*oracle_cmd)
      return do_oracle(oracle_in, oracle_out, out);
    if (*render_cmd) {
      out << render_problem(load_spec(render_in));
      return ok;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

} // namespace sigbasis::cli
