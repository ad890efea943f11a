#include "sigbasis/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sigbasis/error.hpp"
#include "sigbasis/text.hpp"

namespace sigbasis {

using ordered_json = nlohmann::ordered_json;

std::string trace_json(const TraceEvent& e, const Ring& ring) {
  ordered_json j;
  j["event"] = to_string(e.kind);
  j["signature"] = format_monomial(e.signature, ring);
  if (e.node)
    j["node"] = *e.node;
  if (e.parent)
    j["parent"] = *e.parent;
  if (e.multiplier)
    j["multiplier"] = format_monomial(*e.multiplier, ring);
  if (e.lm)
    j["lm"] = format_monomial(*e.lm, ring);
  if (e.steps)
    j["steps"] = *e.steps;
  if (e.source_pair_ids)
    j["source_pair_ids"] = {e.source_pair_ids->first, e.source_pair_ids->second};
  return j.dump();
}

std::string result_json(const RunResult& r) {
  const Ring& ring = r.basis.part_space()->ring();
  ordered_json j;
  j["strategy"] = r.strategy.name();
  ordered_json basis = ordered_json::array();
  for (const SigPair& p : r.basis)
    basis.push_back(format_sigpair(p, r.basis));
  j["basis"] = std::move(basis);
  ordered_json syz = ordered_json::array();
  for (const Monomial& s : r.syzygies)
    syz.push_back(format_monomial(s, ring));
  j["syzygies"] = std::move(syz);
  j["stats"] = {{"iterations", r.stats.iterations},
                {"insertions", r.stats.insertions},
                {"zero_reductions", r.stats.zero_reductions},
                {"reduction_steps", r.stats.reduction_steps},
                {"peak_queue", r.stats.peak_queue}};
  j["critical_search_complete"] = r.critical_search_complete;
  return j.dump(2) + "\n";
}

std::string fixture_json(const Fixture& f) {
  ordered_json j;
  j["system"] = f.system;
  j["order"] = f.order;
  j["field"] = f.field;
  j["reduced_basis"] = f.reduced_basis;
  j["lm_set"] = f.lm_set;
  return j.dump(2) + "\n";
}

Fixture parse_fixture(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    Fixture f;
    f.system = j.at("system").get<std::string>();
    f.order = j.at("order").get<std::string>();
    f.field = j.at("field").get<std::string>();
    f.reduced_basis = j.at("reduced_basis").get<std::vector<std::string>>();
    f.lm_set = j.at("lm_set").get<std::vector<std::string>>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture: ") + e.what(), 0, 0);
  }
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return parse_fixture(s.str());
}

void save_fixture(const std::filesystem::path& path, const Fixture& f) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << fixture_json(f);
}

} // namespace sigbasis
