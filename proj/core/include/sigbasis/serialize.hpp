#ifndef SIGBASIS_SERIALIZE_HPP
#define SIGBASIS_SERIALIZE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "sigbasis/engine.hpp"
#include "sigbasis/trace.hpp"

namespace sigbasis {

/// One JSON object per line, keys in a fixed order so output is byte-stable.
std::string trace_json(const TraceEvent& e, const Ring& ring);

/// {"strategy", "basis": ["part @ sig", ...], "syzygies": [...], "stats": {...}}
std::string result_json(const RunResult& r);

/// Reduced Groebner basis of a system as produced by the reference oracle.
struct Fixture {
  std::string system;
  std::string order;
  std::string field;
  std::vector<std::string> reduced_basis;
  std::vector<std::string> lm_set;

  bool operator==(const Fixture&) const = default;
};

std::string fixture_json(const Fixture& f);
Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::filesystem::path& path);
void save_fixture(const std::filesystem::path& path, const Fixture& f);

} // namespace sigbasis

#endif
