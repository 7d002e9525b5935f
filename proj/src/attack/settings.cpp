#include "snd/attack.hpp"
#include "snd/errors.hpp"

namespace snd {

AttackVariant parse_attack_variant(std::string_view name) {
  if (name == "single") return AttackVariant::single_relay;
  if (name == "wormhole") return AttackVariant::wormhole;
  throw ParseError("unknown attack variant '" + std::string(name) + "' (expected single or wormhole)");
}

std::string_view to_string(AttackVariant v) { return v == AttackVariant::single_relay ? "single" : "wormhole"; }

Placement canonical_placement(AttackVariant variant, const Scalar& dist) {
  if (dist.sign() <= 0) throw InvalidArgument("placement distance must be > 0");
  const Point b{dist, Scalar(0)};
  if (variant == AttackVariant::single_relay) return {b, Point{dist / Scalar(2), Scalar(0)}, std::nullopt};
  const Scalar offset = dist / Scalar(1000000);
  return {b, Point{offset, Scalar(0)}, Point{dist - offset, Scalar(0)}};
}

namespace {

Setting make_setting(std::vector<NodeSpec> nodes, const std::vector<std::pair<NodeId, NodeId>>& up_pairs,
                     const Arithmetic& arithmetic) {
  LinkMap links;
  for (const auto& [x, y] : up_pairs) {
    links[{x, y}] = LinkSchedule::always();
    links[{y, x}] = LinkSchedule::always();
  }
  try {
    return Setting(std::move(nodes), std::move(links), arithmetic);
  } catch (const InvalidArgument& e) {
    throw PlacementInfeasible(e.what());
  }
}

}  // namespace

AttackSettings build_attack_settings(const Scalar& d_ab, AttackVariant variant, const Placement& placement,
                                       const SystemParams& params, const Scalar& slack, const Arithmetic& arithmetic) {
  params.validate();
  if (d_ab.sign() <= 0) throw PlacementInfeasible("dist^a(A,B) must be > 0");
  const Point origin{Scalar(0), Scalar(0)};
  const bool worm = variant == AttackVariant::wormhole;
  if (worm && !placement.d) throw PlacementInfeasible("wormhole placement needs a location for D");

  std::vector<NodeSpec> nodes{{kNodeA, origin, NodeType::correct},
                              {kNodeB, placement.b, NodeType::correct},
                              {kNodeC, placement.c, NodeType::adversarial}};
  std::vector<std::pair<NodeId, NodeId>> up{{kNodeA, kNodeC}};
  if (worm) {
    nodes.push_back({kNodeD, *placement.d, NodeType::adversarial});
    up.emplace_back(kNodeD, kNodeB);
  } else {
    up.emplace_back(kNodeC, kNodeB);
  }
  Setting attack = make_setting(std::move(nodes), up, arithmetic);

  const Scalar norm_b = attack.dist(kNodeA, kNodeB);
  Setting honest = make_setting({{kNodeA, origin, NodeType::correct},
                                 {kNodeB, placement.b * (d_ab / norm_b), NodeType::correct}},
                                {{kNodeA, kNodeB}}, arithmetic);

  Scalar path = attack.dist(kNodeA, kNodeC) + params.v * params.delta_relay;
  if (worm)
    path += attack.dist(kNodeD, kNodeB) + params.v / params.v_adv * attack.dist(kNodeC, kNodeD);
  else
    path += attack.dist(kNodeC, kNodeB);

  std::vector<Inequality> ineqs{{"placement", path, d_ab + params.v * slack}, {"range", d_ab, params.nd_range}};
  for (const Inequality& q : ineqs)
    if (!q.holds())
      throw PlacementInfeasible(q.name + " inequality fails: " + q.lhs.str() + " > " + q.rhs.str());
  return {std::move(honest), std::move(attack), std::move(ineqs)};
}

Message protocol_beacon(const ProtocolChoice& choice, const NodeId& node, const Scalar& t, const Point& loc,
                        const SystemParams& params) {
  switch (choice.kind) {
    case ProtocolKind::naive:
      return identity_beacon(node, params);
    case ProtocolKind::pt:
      return Message::beacon_t(node, t, params.msg_duration_default);
    case ProtocolKind::pgt:
    case ProtocolKind::pgt_approx:
      return Message::beacon_tl(node, t, loc, params.msg_duration_default);
  }
  throw InvalidArgument("unknown protocol");
}

AttackRequest default_attack_request(const ProtocolChoice& protocol, AttackVariant variant, const Scalar& dist,
                                     const SystemParams& params) {
  AttackRequest req;
  req.protocol = protocol;
  req.variant = variant;
  req.placement = canonical_placement(variant, dist);
  req.d_ab = flavor_of(protocol.kind) == ViewFlavor::tl ? dist : params.nd_range;
  if (protocol.kind == ProtocolKind::pgt_approx) {
    if (!protocol.inacc) throw InvalidArgument("pgt-approx needs delta and tau");
    InaccuracyParams inacc = *protocol.inacc;
    inacc.errors[kNodeA] = MeasurementError{-inacc.delta, inacc.tau};
    req.protocol.inacc = inacc;
  }
  return req;
}

}  // namespace snd
