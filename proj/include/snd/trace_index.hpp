#pragma once

#include <map>
#include <utility>
#include <vector>

#include "snd/event.hpp"

namespace snd {

/// Events of a trace bucketed by (kind, actor), each bucket sorted by start.
/// Holds pointers into the trace, which must outlive the index.
class TraceIndex {
 public:
  explicit TraceIndex(const Trace& trace);

  const std::vector<const Event*>& of(EventKind kind, const NodeId& actor) const;
  /// Events of (kind, actor) whose start lies within `tolerance` of `time`.
  std::vector<const Event*> at(EventKind kind, const NodeId& actor, const Scalar& time,
                               const Scalar& tolerance = Scalar(0)) const;

 private:
  std::map<std::pair<EventKind, NodeId>, std::vector<const Event*>> buckets_;
};

/// Time-equality used by the checkers: exact, or within epsilon in approximate mode.
inline bool same_time(const Scalar& a, const Scalar& b, const Scalar& tolerance) {
  return tolerance.is_zero() ? a == b : (a - b).abs() <= tolerance;
}

/// a >= b, relaxed by the tolerance.
inline bool at_least(const Scalar& a, const Scalar& b, const Scalar& tolerance) { return a >= b - tolerance; }

}  // namespace snd
