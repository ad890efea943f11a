#ifndef SIGBASIS_TRACE_HPP
#define SIGBASIS_TRACE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "sigbasis/monomial.hpp"

namespace sigbasis {

enum class TraceKind { queue_add, queue_prune, pop, select, reduce, insert, skip };

const char* to_string(TraceKind k);

/// One line of the run trace. Optional fields are omitted when not meaningful for the kind.
struct TraceEvent {
  TraceKind kind = TraceKind::pop;
  Monomial signature;
  std::optional<std::size_t> node;
  std::optional<std::size_t> parent;
  std::optional<Monomial> multiplier;
  std::optional<Monomial> lm;
  std::optional<std::size_t> steps;
  std::optional<std::pair<std::size_t, std::size_t>> source_pair_ids;
};

using TraceSink = std::function<void(const TraceEvent&)>;

} // namespace sigbasis

#endif
