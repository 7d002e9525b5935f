// Attack settings, base and relay traces, ND properties.

#include "builders.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "snd/attack.hpp"
#include "snd/errors.hpp"
#include "snd/setting_feasibility.hpp"

using namespace snd;
using snd::testgen::make_params;

namespace {

const ProtocolChoice kPt{ProtocolKind::pt, std::nullopt};
const ProtocolChoice kPgt{ProtocolKind::pgt, std::nullopt};
const ProtocolChoice kNaive{ProtocolKind::naive, std::nullopt};

Placement line(long b, long c) { return {{Scalar(b), Scalar(0)}, {Scalar(c), Scalar(0)}, std::nullopt}; }

ProtocolChoice approx(Scalar delta, Scalar tau) {
  InaccuracyParams in;
  in.delta = std::move(delta);
  in.tau = std::move(tau);
  return {ProtocolKind::pgt_approx, in};
}

bool attack_exists(const AttackRequest& r, const SystemParams& p) {
  try {
    plan_attack(r, p);
    return true;
  } catch (const PlacementInfeasible&) {
    return false;
  }
}

std::size_t count_kind(const Trace& t, EventKind k) {
  return static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [&](const Event& e) { return e.kind() == k; }));
}

}  // namespace

TEST_CASE("caption inequality") {
  const auto ok = build_attack_settings(10, AttackVariant::single_relay, line(8, 4), make_params(1, 10, 1));
  REQUIRE(ok.inequalities.size() == 2);
  CHECK(ok.inequalities[0].lhs == Scalar(9));
  CHECK(ok.inequalities[0].margin() == Scalar(1));
  CHECK(ok.honest.dist(kNodeA, kNodeB) == Scalar(10));
  CHECK_FALSE(ok.attack.link_up(kNodeA, kNodeB, 0, 1000));
  CHECK_FALSE(ok.attack.link_up(kNodeB, kNodeA, 0, 1000));
  CHECK(ok.attack.link_up(kNodeC, kNodeB, 0, 1000));
  CHECK(ok.attack.link_up(kNodeA, kNodeC, 0, 1000));
  CHECK(ok.honest.link_up(kNodeB, kNodeA, 0, 1000));

  // 4 + 4 + 3 > 10.
  CHECK_THROWS_AS(build_attack_settings(10, AttackVariant::single_relay, line(8, 4), make_params(1, 10, 3)),
                  PlacementInfeasible);
  CHECK_THROWS_AS(build_attack_settings(11, AttackVariant::single_relay, line(8, 4), make_params(1, 10, 1)),
                  PlacementInfeasible);
  CHECK_THROWS_AS(build_attack_settings(10, AttackVariant::wormhole, line(8, 4), make_params(1, 10, 1)),
                  PlacementInfeasible);
  // Relays may not share a location with a correct node.
  CHECK_THROWS_AS(build_attack_settings(10, AttackVariant::single_relay, line(8, 0), make_params(1, 10, 1)),
                  PlacementInfeasible);
}

TEST_CASE("wormhole caption inequality") {
  const SystemParams p = make_params(1, 100, 10, 1, Scalar(4));
  Placement pl = line(120, 10);
  pl.d = Point{Scalar(110), Scalar(0)};
  // 10 + 10 + (1/4) * 100 + 10 = 55 <= 100
  const auto built = build_attack_settings(100, AttackVariant::wormhole, pl, p);
  CHECK(built.inequalities[0].lhs == Scalar(55));
  CHECK(built.attack.link_up(kNodeC, kNodeD, 0, 5) == false);  // the channel is not a radio link
  CHECK(built.attack.link_up(kNodeD, kNodeB, 0, 5));
  CHECK_FALSE(built.attack.link_up(kNodeC, kNodeB, 0, 5));
}

TEST_CASE("canonical placements") {
  const Placement s = canonical_placement(AttackVariant::single_relay, 8);
  CHECK(s.c == Point{Scalar(4), Scalar(0)});
  CHECK(s.b == Point{Scalar(8), Scalar(0)});
  const Placement w = canonical_placement(AttackVariant::wormhole, 1000000);
  CHECK(w.c == Point{Scalar(1), Scalar(0)});
  CHECK(*w.d == Point{Scalar(999999), Scalar(0)});
}

TEST_CASE("base traces") {
  const SystemParams p = make_params(1, 10);
  const Witness pt = nd2_witness(kPt, 8, p);
  const Message b0 = Message::beacon_t(kNodeB, 0, 1);
  CHECK(pt.trace.contains(Receive{kNodeA, 8, kNodeB, b0}));
  CHECK(pt.trace.contains(Neighbor{kNodeA, 10, kNodeB, 8}));
  CHECK(check_setting_feasible(pt.trace, pt.setting, p).ok());
  CHECK(check_protocol_feasible(pt.trace, pt.setting, make_protocol(kPt, p), p).ok());

  const Witness pgt = nd2_witness(kPgt, 8, p);
  const Message bl = Message::beacon_tl(kNodeB, 0, {Scalar(8), Scalar(0)}, 1);
  CHECK(pgt.trace.contains(Bcast{kNodeB, 0, bl}));
  CHECK(pgt.trace.contains(Neighbor{kNodeA, 10, kNodeB, 8}));

  const Witness naive = nd2_witness(kNaive, 10, p);
  CHECK(count_kind(naive.trace, EventKind::neighbor) == 1);

  const Witness edge = nd2_witness(kPt, 10, p);
  CHECK(edge.trace.contains(Neighbor{kNodeA, 12, kNodeB, 10}));
  const Witness half = nd2_witness(kPgt, Scalar(3, 2), p);
  CHECK(check_pgt_feasible(half.trace, half.setting, p).ok());

  CHECK_THROWS_AS(nd2_witness(kPt, 0, p), OutOfRange);
  CHECK_THROWS_AS(nd2_witness(kPt, 11, p), OutOfRange);
  CHECK_THROWS_AS(nd2_witness(kPt, -1, p), OutOfRange);
}

TEST_CASE("P^T refuses a stale beacon") {
  const SystemParams p = make_params(1, 10);
  const auto built = build_attack_settings(10, AttackVariant::single_relay, line(8, 4), p);
  const SystemParams shorter = make_params(1, 9);
  CHECK_THROWS_AS(synth_base_trace(built.honest, kPt, shorter), NoWitness);
  CHECK_NOTHROW(synth_base_trace(built.honest, kNaive, shorter));
}

TEST_CASE("single relay trace") {
  const SystemParams p = make_params(1, 10, 1);
  const auto built = build_attack_settings(10, AttackVariant::single_relay, line(8, 4), p);
  const Trace base = synth_base_trace(built.honest, kPt, p);
  const Trace relay = synth_relay_trace(base, built.honest, built.attack, AttackVariant::single_relay, kPt, p);
  const Message b0 = Message::beacon_t(kNodeB, 0, 1);
  CHECK(relay.contains(Receive{kNodeC, 4, kNodeB, b0}));
  CHECK(relay.contains(Receive{kNodeA, 10, kNodeC, b0}));
  CHECK(count_kind(relay, EventKind::dcast) == 1);
  for (const Event& e : relay)
    if (const auto* d = e.get<Dcast>()) CHECK(d->start == Scalar(6));
  CHECK(check_local_views_equal(base, relay, {kNodeA, kNodeB}));
  CHECK(check_setting_feasible(relay, built.attack, p).ok());
  CHECK(check_pt_feasible(relay, built.attack, p).ok());
  const ProtocolModel pt = make_protocol(kPt, p);
  CHECK(check_protocol_feasible(relay, built.attack, pt, p) == check_protocol_feasible(base, built.honest, pt, p));
  CHECK(check_adversary_feasible(relay, built.attack, p, {AdversaryKind::relay, p.delta_relay}).ok());
  CHECK(check_adversary_feasible(relay, built.attack, p, {AdversaryKind::relay_no_channel, p.delta_relay}).ok());
  const Verdict nd1 = detect_nd1_violation(relay, built.attack);
  CHECK(nd1.count("nd1") == 1);
  CHECK(detect_nd1_violation(base, built.honest).ok());

  const Trace bc = bcast_form(relay, built.attack, p);
  CHECK(count_kind(bc, EventKind::dcast) == 0);
  CHECK(check_setting_feasible(bc, built.attack, p).ok());
  CHECK(check_adversary_feasible(bc, built.attack, p, {AdversaryKind::relay_bcast_only, p.delta_relay}).ok());
  CHECK(check_adversary_feasible(rename_bcast_to_dcast(bc, built.attack), built.attack, p,
                                 {AdversaryKind::relay, p.delta_relay})
            .ok());
}

TEST_CASE("plan deltas") {
  const SystemParams p = make_params(1, 10, 1);
  AttackRequest r{kPt, AttackVariant::single_relay, 10, line(8, 4), {}};
  const AttackPlan plan = plan_attack(r, p);
  CHECK(plan.deltas.big_delta == Scalar(10));
  CHECK(plan.deltas.d1 == Scalar(4));
  CHECK(plan.deltas.d2 == Scalar(6));
  CHECK(plan.deltas.d3 == Scalar(4));
  CHECK(plan.deltas.d2 - plan.deltas.d1 >= p.delta_relay);
  CHECK(plan.deltas.d2 - plan.deltas.d1 == plan.deltas.d4 - plan.deltas.d3);
  CHECK_FALSE(plan.deltas.channel_delay.has_value());
  for (const Inequality& q : plan.inequalities) CHECK(q.holds());
}

TEST_CASE("headline numbers") {
  const SystemParams p = testgen::headline_params();
  const AttackPlan plan =
      plan_attack(default_attack_request(kPt, AttackVariant::single_relay, Scalar(50), p), p);
  CHECK(plan.deltas.big_delta == Scalar(1, 3000000));
  CHECK(plan.deltas.d1 == Scalar(1, 12000000));
  CHECK(plan.deltas.d2 - plan.deltas.d1 == Scalar(1, 3000000) - Scalar(1, 6000000));

  SystemParams at = p;
  at.delta_relay = p.nd_range / p.v;
  CHECK_FALSE(attack_exists(default_attack_request(kPt, AttackVariant::single_relay, Scalar(50), at), at));
  SystemParams pgt = p;
  pgt.delta_relay = Scalar(1, 1000000000);
  CHECK_FALSE(attack_exists(default_attack_request(kPgt, AttackVariant::single_relay, Scalar(50), pgt), pgt));
  pgt.delta_relay = 0;
  CHECK(attack_exists(default_attack_request(kPgt, AttackVariant::single_relay, Scalar(50), pgt), pgt));
}

TEST_CASE("wormhole plan") {
  const SystemParams p = make_params(1, 100, 10, 1, Scalar(4));
  const AttackPlan plan = plan_attack(default_attack_request(kPt, AttackVariant::wormhole, 200, p), p);
  REQUIRE(plan.deltas.channel_delay.has_value());
  CHECK(*plan.deltas.channel_delay == (Scalar(200) - Scalar(2, 5000)) / Scalar(4));
  CHECK(check_local_views_equal(plan.base_trace, plan.relay_trace, {kNodeA, kNodeB}));
  CHECK(detect_nd1_violation(plan.relay_trace, plan.setting_attack).count("nd1") == 1);
  // (v_adv / v) (R - v delta_relay) = 360
  CHECK(attack_exists(default_attack_request(kPt, AttackVariant::wormhole, 359, p), p));
  CHECK_FALSE(attack_exists(default_attack_request(kPt, AttackVariant::wormhole, 361, p), p));
}

TEST_CASE("approximate P^GT acceptance window") {
  const SystemParams base = make_params(1, 100, 0, 1);
  for (long delta_relay : {1L, 2L, 3L}) {
    SystemParams p = base;
    p.delta_relay = delta_relay;
    const ProtocolChoice c = approx(Scalar(1, 2), Scalar(1, 2));  // 2(delta + tau) = 2
    const bool ok = attack_exists(default_attack_request(c, AttackVariant::single_relay, 50, p), p);
    CHECK(ok == (delta_relay <= 2));
  }
}

TEST_CASE("no placement at the P^T threshold") {
  const SystemParams p = make_params(1, 20, 20);  // delta_relay = R/v
  int tried = 0;
  for (long b = 1; b <= 20; ++b)
    for (long c = 1; c < b; ++c) {
      AttackRequest r{kPt, AttackVariant::single_relay, 20, line(b, c), {}};
      CHECK_FALSE(attack_exists(r, p));
      ++tried;
    }
  CHECK(tried == 190);
}

TEST_CASE("impossibility below the threshold") {
  testgen::Rng rng(41);
  const SystemParams base = make_params(1, 60);
  for (int i = 0; i < 60; ++i) {
    SystemParams p = base;
    p.delta_relay = Scalar(rng.uniform(0, 59));
    const Scalar d_ab = p.delta_relay * p.v + Scalar(rng.uniform(1, static_cast<int>(60 - p.delta_relay.to_double())));
    const Scalar dist = (d_ab - p.v * p.delta_relay) * Scalar(rng.uniform(1, 4), 4);
    AttackRequest r{kPt, AttackVariant::single_relay, d_ab, canonical_placement(AttackVariant::single_relay, dist), {}};
    const AttackPlan plan = plan_attack(r, p);
    CHECK(check_local_views_equal(plan.base_trace, plan.relay_trace, {kNodeA, kNodeB}));
    CHECK(check_setting_feasible(plan.relay_trace, plan.setting_attack, p).ok());
    CHECK(detect_nd1_violation(plan.relay_trace, plan.setting_attack).count("nd1") == 1);
  }
}

TEST_CASE("ND1 ignores adversarial and self declarations") {
  const SystemParams p = make_params(1, 10, 1);
  const auto built = build_attack_settings(10, AttackVariant::single_relay, line(8, 4), p);
  const Trace t({Neighbor{kNodeA, 5, kNodeC, 1}, Neighbor{kNodeA, 5, kNodeA, 1}, Neighbor{kNodeC, 5, kNodeB, 1}});
  CHECK(detect_nd1_violation(t, built.attack).ok());
  CHECK(detect_nd1_violation(Trace({Neighbor{kNodeA, 5, kNodeB, 1}}), built.attack).count("nd1") == 1);
}

TEST_CASE("local view equality") {
  const SystemParams p = make_params(1, 10);
  const Witness w = nd2_witness(kPt, 8, p);
  CHECK(check_local_views_equal(w.trace, w.trace, {kNodeA, kNodeB}));
  Trace fewer = w.trace;
  fewer.erase(Receive{kNodeA, 8, kNodeB, Message::beacon_t(kNodeB, 0, 1)});
  CHECK_FALSE(check_local_views_equal(w.trace, fewer, {kNodeA}));
  CHECK(check_local_views_equal(w.trace, fewer, {kNodeB}));
  CHECK(check_local_views_equal(w.trace, Trace{}, {}));
  // Senders are invisible: the same reception from another node looks identical.
  Trace other = fewer;
  other.insert(Receive{kNodeA, 8, kNodeC, Message::beacon_t(kNodeB, 0, 1)});
  CHECK(check_local_views_equal(w.trace, other, {kNodeA, kNodeB}));
}
