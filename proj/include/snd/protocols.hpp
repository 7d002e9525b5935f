#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "snd/local_view.hpp"
#include "snd/message.hpp"
#include "snd/setting.hpp"
#include "snd/verdict.hpp"

namespace snd {

struct EpsilonAction {
  friend auto operator<=>(const EpsilonAction&, const EpsilonAction&) = default;
};

struct BcastAction {
  Message msg;
  friend auto operator<=>(const BcastAction&, const BcastAction&) = default;
};

struct NeighborAction {
  NodeId node;
  Scalar declared_time;
  friend auto operator<=>(const NeighborAction&, const NeighborAction&) = default;
};

using Action = std::variant<EpsilonAction, BcastAction, NeighborAction>;
using ActionSet = std::set<Action>;

enum class ProtocolKind { naive, pt, pgt, pgt_approx };

/// "naive" | "pt" | "pgt" | "pgt-approx". Throws ParseError.
ProtocolKind parse_protocol_kind(std::string_view name);
std::string_view to_string(ProtocolKind kind);
ViewFlavor flavor_of(ProtocolKind kind);

/// Realized measurement error of one node: its clock offset d and range
/// offset s, both in time units.
struct MeasurementError {
  Scalar clock{0};
  Scalar range{0};

  friend bool operator==(const MeasurementError&, const MeasurementError&) = default;
};

/// Bounds on time (delta) and location (tau, in time units) inaccuracy plus
/// the per-node errors actually realized in a run.
struct InaccuracyParams {
  Scalar delta{0};
  Scalar tau{0};
  std::map<NodeId, MeasurementError> errors;

  /// Throws InvalidArgument on negative bounds or errors outside them.
  void validate() const;
  /// Zero for nodes without a recorded error.
  MeasurementError error_of(const NodeId& node) const;
  Scalar tolerance() const { return delta + tau; }

  friend bool operator==(const InaccuracyParams&, const InaccuracyParams&) = default;
};

/// A protocol: a deterministic map from a local view of its flavor to the
/// finite, non-empty set of actions it permits.
struct ProtocolModel {
  std::string name;
  ViewFlavor flavor = ViewFlavor::t;
  std::function<ActionSet(const LocalView&)> decide;
};

// Leash predicates shared by the deciders and the trace checkers.
bool pt_fresh(const Scalar& reception_start, const BeaconT& beacon, const SystemParams& params);
bool tl_estimates_agree(const Point& receiver, const Scalar& reception_start, const BeaconTL& beacon,
                        const SystemParams& params, const Scalar& tolerance, const MeasurementError& error = {});

/// Identity beacon of the naive protocol: opaque token "hello:<id>".
Message identity_beacon(const NodeId& node, const SystemParams& params);
/// Node a message claims to come from, judged by content only.
std::optional<NodeId> attributed_node(const Message& msg);

ActionSet pt_decide(const LocalView& view, const SystemParams& params);
ActionSet pgt_decide(const LocalView& view, const SystemParams& params);
ActionSet pgt_approx_decide(const LocalView& view, const SystemParams& params, const InaccuracyParams& inacc);
ActionSet naive_decide(const LocalView& view, const SystemParams& params);

/// A protocol choice as read from a scenario: its kind plus, for pgt-approx,
/// the inaccuracy bounds and realized errors.
struct ProtocolChoice {
  ProtocolKind kind = ProtocolKind::pt;
  std::optional<InaccuracyParams> inacc;
};

/// Builds the named protocol. pgt-approx requires `inacc` (InvalidArgument otherwise).
ProtocolModel make_protocol(ProtocolKind kind, const SystemParams& params,
                            const std::optional<InaccuracyParams>& inacc = std::nullopt);
inline ProtocolModel make_protocol(const ProtocolChoice& choice, const SystemParams& params) {
  return make_protocol(choice.kind, params, choice.inacc);
}

/// Runs the leash checker matching the choice (pt or pgt/pgt-approx); naive
/// has none and yields an ok verdict.
Verdict check_leash_feasible(const Trace& trace, const Setting& setting, const SystemParams& params,
                             const ProtocolChoice& choice);

/// Which instants are probed when checking that a node may stay idle.
struct SamplingPolicy {
  bool midpoints = true;
  bool tail = true;
};

/// 0, every start/end time of the node's events, midpoints between consecutive
/// boundaries and one point past the last, minus the start times of the node's
/// own Bcast and Neighbor events.
std::vector<Scalar> idle_sample_times(const Trace& trace, const NodeId& node, const SamplingPolicy& policy = {});

/// Every correct node's Bcast and Neighbor events must be permitted by the
/// protocol at their start time, and the idle action must be permitted at all
/// sampled idle instants.
Verdict check_protocol_feasible(const Trace& trace, const Setting& setting, const ProtocolModel& protocol,
                                const SystemParams& params, const SamplingPolicy& policy = {});

/// Temporal leash rules: correct nodes only beacon auth_self(now), and only
/// declare a neighbor after fully receiving one of its fresh beacons.
Verdict check_pt_feasible(const Trace& trace, const Setting& setting, const SystemParams& params);

/// Temporal + geographical leash rules. With `inacc`, estimate agreement is
/// relaxed to within delta + tau using each receiver's realized errors.
Verdict check_pgt_feasible(const Trace& trace, const Setting& setting, const SystemParams& params,
                           const InaccuracyParams* inacc = nullptr);

}  // namespace snd
