#include <map>

#include "snd/attack.hpp"
#include "snd/errors.hpp"
#include "snd/setting_feasibility.hpp"

namespace snd {

namespace {

const NodeId& other_end(const NodeId& x) { return x == kNodeA ? kNodeB : kNodeA; }

const NodeId& relay_near(const NodeId& x, AttackVariant variant) {
  return variant == AttackVariant::wormhole && x == kNodeB ? kNodeD : kNodeC;
}

/// Half-plane with an octant-aligned edge that reaches `victim` and none of the
/// relay's other link partners.
Angle aim(const Setting& s, const NodeId& relay, const NodeId& victim) {
  const Angle half = Angle::width(Scalar(1));
  for (int k = 0; k < 8; ++k) {
    const Angle dir = Angle::direction(Scalar(k, 4));
    if (!inrange(s, relay, dir, half, victim)) continue;
    bool clean = true;
    for (const auto& [pair, sched] : s.links()) {
      if (pair.first != relay || pair.second == victim || sched.empty()) continue;
      if (inrange(s, relay, dir, half, pair.second)) clean = false;
    }
    if (clean) return dir;
  }
  throw PlacementInfeasible("no half-plane from " + relay.str() + " isolates " + victim.str());
}

Scalar flight(const Setting& s, const SystemParams& p, const NodeId& x, const NodeId& y) {
  return s.dist(x, y) / p.v;
}

}  // namespace

Trace synth_base_trace(const Setting& honest, const ProtocolChoice& choice, const SystemParams& params) {
  const Message m = protocol_beacon(choice, kNodeB, Scalar(0), honest.loc(kNodeB), params);
  const Scalar arrival = flight(honest, params, kNodeB, kNodeA);
  Trace trace = with_receptions(Trace({Bcast{kNodeB, Scalar(0), m}}), honest, params);
  const Scalar t0 = arrival + m.duration() + Scalar(1);
  const ProtocolModel model = make_protocol(choice, params);
  const ActionSet acts =
      model.decide(project_local(trace, kNodeA, t0, model.flavor, &honest));
  if (!acts.contains(Action{NeighborAction{kNodeB, arrival}}))
    throw NoWitness(model.name + " does not accept B's beacon at distance " + honest.dist(kNodeA, kNodeB).str());
  trace.insert(Neighbor{kNodeA, t0, kNodeB, arrival});
  return trace;
}

Trace synth_relay_trace(const Trace& base, const Setting& honest, const Setting& attack, AttackVariant variant,
                        const ProtocolChoice& choice, const SystemParams& params) {
  const bool tl = flavor_of(choice.kind) == ViewFlavor::tl;
  const InaccuracyParams inacc = choice.inacc.value_or(InaccuracyParams{});
  const Scalar tol = choice.kind == ProtocolKind::pgt_approx ? inacc.tolerance() : Scalar(0);
  std::vector<Event> out;
  std::map<std::pair<NodeId, Scalar>, Scalar> moved;  // (receiver, honest arrival) -> relayed arrival

  for (const Event& e : base) {
    if (e.kind() == EventKind::receive || e.kind() == EventKind::neighbor) continue;
    out.push_back(e);
    const auto* b = e.get<Bcast>();
    if (!b || (b->actor != kNodeA && b->actor != kNodeB)) continue;
    const NodeId& x = b->actor;
    const NodeId& y = other_end(x);
    const NodeId& in = relay_near(x, variant);
    const NodeId& exit = relay_near(y, variant);

    Scalar earliest = b->start + flight(attack, params, x, in) + params.delta_relay + flight(attack, params, exit, y);
    if (in != exit) earliest += attack.dist(in, exit) / params.v_adv;
    const Scalar honest_arrival = b->start + flight(honest, params, x, y);

    Scalar arrival = honest_arrival;
    if (tl) {
      const BeaconTL* beacon = b->msg.beacon_tl();
      if (!beacon) throw InvalidArgument("TL protocol run with a non-beacon message");
      const MeasurementError err = inacc.error_of(y);
      // Reception instant at which y's time estimate equals its location estimate.
      Scalar center = beacon->time + flight(attack, params, x, y) - err.clock + err.range;
      arrival = max(earliest, center);
      if (arrival > center + tol)
        throw PlacementInfeasible("acceptance window: relayed arrival " + arrival.str() + " > " +
                                  (center + tol).str());
    } else if (arrival < earliest) {
      throw PlacementInfeasible("relay gap: honest arrival " + arrival.str() + " < earliest relayed arrival " +
                                earliest.str());
    }
    moved[{y, honest_arrival}] = arrival;
    out.emplace_back(Dcast{exit, arrival - flight(attack, params, exit, y), aim(attack, exit, y),
                           Angle::width(Scalar(1)), b->msg});
  }
  for (const Event& e : base) {
    const auto* n = e.get<Neighbor>();
    if (!n) continue;
    auto it = moved.find({n->actor, n->declared_time});
    if (it == moved.end()) {
      out.push_back(e);
    } else {
      const Scalar shift = it->second - n->declared_time;
      out.emplace_back(Neighbor{n->actor, n->start + shift, n->declared, it->second});
    }
  }
  return with_receptions(Trace(std::move(out)), attack, params);
}

Trace bcast_form(const Trace& relay_trace, const Setting& attack, const SystemParams& params) {
  std::vector<Event> sends;
  for (const Event& e : relay_trace) {
    if (const auto* d = e.get<Dcast>())
      sends.emplace_back(Bcast{d->actor, d->start, d->msg});
    else if (e.kind() != EventKind::receive)
      sends.push_back(e);
  }
  return with_receptions(Trace(std::move(sends)), attack, params);
}

AttackPlan plan_attack(const AttackRequest& request, const SystemParams& params) {
  params.validate();
  const ProtocolChoice& choice = request.protocol;
  if (choice.inacc) choice.inacc->validate();
  const bool tl = flavor_of(choice.kind) == ViewFlavor::tl;

  Scalar slack(0);
  if (choice.kind == ProtocolKind::pgt_approx) {
    if (!choice.inacc) throw InvalidArgument("pgt-approx needs delta and tau");
    const MeasurementError err = choice.inacc->error_of(kNodeA);
    slack = choice.inacc->tolerance() + err.range - err.clock;
  }
  AttackSettings built =
      build_attack_settings(request.d_ab, request.variant, request.placement, params, slack, request.arithmetic);
  if (tl && built.honest.loc(kNodeB) != built.attack.loc(kNodeB))
    throw PlacementInfeasible("TL attacks keep B in place: d_ab must equal dist(A,B) of the placement");

  AttackPlan plan;
  plan.variant = request.variant;
  plan.protocol = choice;
  plan.base_trace = synth_base_trace(built.honest, choice, params);
  plan.relay_trace = synth_relay_trace(plan.base_trace, built.honest, built.attack, request.variant, choice, params);
  plan.relay_trace_bcast = bcast_form(plan.relay_trace, built.attack, params);

  const Setting& s = built.attack;
  const NodeId& in_a = relay_near(kNodeA, request.variant);
  const NodeId& in_b = relay_near(kNodeB, request.variant);
  AttackDeltas& d = plan.deltas;
  d.big_delta = request.d_ab / params.v;
  d.d1 = s.dist(kNodeA, in_a) / params.v;
  d.d2 = d.big_delta - s.dist(in_b, kNodeB) / params.v;
  d.d3 = s.dist(kNodeB, in_b) / params.v;
  d.d4 = d.big_delta - s.dist(in_a, kNodeA) / params.v;
  for (const Event& e : plan.relay_trace)
    if (e.kind() == EventKind::dcast && e.actor() == in_a) d.d4 = e.start();
  Scalar need = params.delta_relay;
  if (request.variant == AttackVariant::wormhole) {
    d.channel_delay = s.dist(kNodeC, kNodeD) / params.v_adv;
    need += *d.channel_delay;
  }
  plan.inequalities = built.inequalities;
  plan.inequalities.push_back({"relay-gap", need, d.d4 - d.d3});

  // The synthesized run must pass the full checker stack to count as an attack.
  auto fail = [](const std::string& what, const Verdict& v) {
    throw PlacementInfeasible("synthesized trace fails " + what + ": " + v.violations().front().rule + " " +
                              v.violations().front().detail);
  };
  if (Verdict v = check_setting_feasible(plan.relay_trace, s, params); !v.ok()) fail("setting feasibility", v);
  if (Verdict v = check_protocol_feasible(plan.relay_trace, s, make_protocol(choice, params), params); !v.ok())
    fail("protocol feasibility", v);
  if (Verdict v = check_leash_feasible(plan.relay_trace, s, params, choice); !v.ok()) fail("leash feasibility", v);
  if (Verdict v = check_adversary_feasible(plan.relay_trace, s, params, {AdversaryKind::relay, params.delta_relay});
      !v.ok())
    fail("relay adversary", v);
  if (detect_nd1_violation(plan.relay_trace, s).ok())
    throw PlacementInfeasible("synthesized trace does not violate ND1");

  plan.setting_a = std::move(built.honest);
  plan.setting_attack = std::move(built.attack);
  return plan;
}

}  // namespace snd
