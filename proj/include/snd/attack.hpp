#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snd/adversary.hpp"
#include "snd/event.hpp"
#include "snd/protocols.hpp"
#include "snd/setting.hpp"
#include "snd/verdict.hpp"

namespace snd {

enum class AttackVariant { single_relay, wormhole };

/// "single" | "wormhole". Throws ParseError.
AttackVariant parse_attack_variant(std::string_view name);
std::string_view to_string(AttackVariant v);

/// Node ids used by the synthesized settings.
inline const NodeId kNodeA{"A"};
inline const NodeId kNodeB{"B"};
inline const NodeId kNodeC{"C"};
inline const NodeId kNodeD{"D"};

/// Attack-setting coordinates. A sits at the origin; `d` is the second
/// adversarial node of the wormhole variant (near B).
struct Placement {
  Point b;
  Point c;
  std::optional<Point> d;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Collinear placement on the x axis with B at (dist, 0): C at the midpoint for
/// a single relay; C and D one millionth of dist away from A and B for a wormhole.
Placement canonical_placement(AttackVariant variant, const Scalar& dist);

/// One inequality of an attack plan, in the form lhs <= rhs.
struct Inequality {
  std::string name;
  Scalar lhs;
  Scalar rhs;

  bool holds() const { return lhs <= rhs; }
  Scalar margin() const { return rhs - lhs; }
};

/// Honest reference setting S^a and the attack setting (S^b or S^c).
struct AttackSettings {
  Setting honest;
  Setting attack;
  std::vector<Inequality> inequalities;
};

/// Builds S^a (A, B correct at distance d_ab, link always up) and the attack
/// setting (A-B link down, relays linked to A and B, constant links). `slack`
/// (time units) relaxes the placement inequality for receivers that tolerate
/// late arrivals. Throws PlacementInfeasible when an inequality fails or the
/// nodes do not have distinct locations.
AttackSettings build_attack_settings(const Scalar& d_ab, AttackVariant variant, const Placement& placement,
                                       const SystemParams& params, const Scalar& slack = Scalar(0),
                                       const Arithmetic& arithmetic = {});

/// The message a protocol's node broadcasts at `t` from `loc`.
Message protocol_beacon(const ProtocolChoice& choice, const NodeId& node, const Scalar& t, const Point& loc,
                        const SystemParams& params);

/// Canonical honest run on a two-node setting: B beacons at 0, A receives at
/// dist/v and declares B one time unit after the reception ends.
/// Throws NoWitness if the protocol does not accept the beacon.
Trace synth_base_trace(const Setting& honest, const ProtocolChoice& choice, const SystemParams& params);

/// The relay trace theta' on the attack setting: every A/B broadcast of
/// `base` is relayed to the other correct node. For T protocols the arrival
/// times of `base` are kept, so correct nodes' local views are unchanged. For
/// TL protocols the arrival is the earliest instant the receiver still accepts.
/// Throws PlacementInfeasible if a relay gap or the acceptance window fails.
Trace synth_relay_trace(const Trace& base, const Setting& honest, const Setting& attack, AttackVariant variant,
                        const ProtocolChoice& choice, const SystemParams& params);

/// theta' with every adversarial Dcast replaced by a Bcast and all receptions recomputed.
Trace bcast_form(const Trace& relay_trace, const Setting& attack, const SystemParams& params);

struct AttackDeltas {
  Scalar big_delta;  // dist^a(A,B)/v
  Scalar d1, d2, d3, d4;
  std::optional<Scalar> channel_delay;  // dist(C,D)/v_adv for the wormhole
};

struct AttackRequest {
  ProtocolChoice protocol;
  AttackVariant variant = AttackVariant::single_relay;
  Scalar d_ab;
  Placement placement;
  Arithmetic arithmetic;
};

struct AttackPlan {
  AttackVariant variant = AttackVariant::single_relay;
  ProtocolChoice protocol;
  Setting setting_a;
  Setting setting_attack;
  Trace base_trace;
  Trace relay_trace;
  Trace relay_trace_bcast;
  AttackDeltas deltas;
  std::vector<Inequality> inequalities;
};

/// Default request: canonical placement at `dist`. For T protocols d_ab = R
/// (relays gain the most slack); TL protocols keep B in place, so d_ab = dist.
/// pgt-approx gets the adversary-favourable errors at A (clock -delta, range +tau).
AttackRequest default_attack_request(const ProtocolChoice& protocol, AttackVariant variant, const Scalar& dist,
                                     const SystemParams& params);

/// Builds settings, theta and theta', then re-checks theta' against the setting,
/// protocol, leash, adversary and ND1 checkers. Throws PlacementInfeasible when
/// no attack exists for this request.
AttackPlan plan_attack(const AttackRequest& request, const SystemParams& params);

/// ND1: each Neighbor(A; t; B, t') with A, B correct needs the link B -> A up at t'.
Verdict detect_nd1_violation(const Trace& trace, const Setting& setting);

struct Witness {
  Setting setting;
  Trace trace;
};

/// Two correct nodes at distance d with links always up and a run in which A
/// declares B. Throws OutOfRange unless 0 < d <= R.
Witness nd2_witness(const ProtocolChoice& choice, const Scalar& d, const SystemParams& params);

/// True iff the complete local traces of every listed node agree.
bool check_local_views_equal(const Trace& a, const Trace& b, const std::vector<NodeId>& nodes);

}  // namespace snd
