#include "snd/errors.hpp"
#include "snd/protocols.hpp"

namespace snd {

namespace {

constexpr std::string_view kHelloPrefix = "hello:";

void require_flavor(const LocalView& view, ViewFlavor flavor) {
  if (view.flavor != flavor)
    throw FlavorMismatch("protocol expects a " + std::string(to_string(flavor)) + " view, got " +
                         std::string(to_string(view.flavor)));
  if (flavor == ViewFlavor::tl && !view.owner_loc) throw FlavorMismatch("TL view without owner location");
}

template <typename Accept>
ActionSet decide_with(const LocalView& view, std::optional<Message> beacon, Accept accept) {
  ActionSet out{EpsilonAction{}};
  if (beacon) out.insert(BcastAction{*beacon});
  for (const LocalEvent& le : view.events) {
    const auto* r = std::get_if<LocalReceive>(&le);
    if (!r) continue;
    if (auto node = accept(*r)) out.insert(NeighborAction{*node, r->start});
  }
  return out;
}

}  // namespace

bool pt_fresh(const Scalar& reception_start, const BeaconT& beacon, const SystemParams& params) {
  return reception_start - beacon.time <= params.nd_range / params.v;
}

bool tl_estimates_agree(const Point& receiver, const Scalar& reception_start, const BeaconTL& beacon,
                        const SystemParams& params, const Scalar& tolerance, const MeasurementError& error) {
  // |time_est - loc_est| <= tol, where time_est = t1 + d - t and loc_est = dist/v + s.
  const Scalar target = reception_start + error.clock - beacon.time - error.range;
  if (tolerance.is_zero()) return compare_travel_time(receiver, beacon.loc, params.v, target) == 0;
  return compare_travel_time(receiver, beacon.loc, params.v, target - tolerance) >= 0 &&
         compare_travel_time(receiver, beacon.loc, params.v, target + tolerance) <= 0;
}

Message identity_beacon(const NodeId& node, const SystemParams& params) {
  return Message::opaque(std::string(kHelloPrefix) + node.str(), params.msg_duration_default);
}

std::optional<NodeId> attributed_node(const Message& msg) {
  if (auto c = msg.creator()) return c;
  const std::string& tok = msg.opaque_body()->token;
  if (tok.size() > kHelloPrefix.size() && tok.starts_with(kHelloPrefix)) {
    const std::string name = tok.substr(kHelloPrefix.size());
    if (valid_identifier(name)) return NodeId(name);
  }
  return std::nullopt;
}

ActionSet pt_decide(const LocalView& view, const SystemParams& params) {
  require_flavor(view, ViewFlavor::t);
  std::optional<Message> beacon;
  if (view.as_of) beacon = Message::beacon_t(view.owner, *view.as_of, params.msg_duration_default);
  return decide_with(view, beacon, [&](const LocalReceive& r) -> std::optional<NodeId> {
    const BeaconT* b = r.msg.beacon_t();
    if (b && pt_fresh(r.start, *b, params)) return b->creator;
    return std::nullopt;
  });
}

namespace {

ActionSet tl_decide(const LocalView& view, const SystemParams& params, const Scalar& tolerance,
                    const MeasurementError& error) {
  require_flavor(view, ViewFlavor::tl);
  std::optional<Message> beacon;
  if (view.as_of) beacon = Message::beacon_tl(view.owner, *view.as_of, *view.owner_loc, params.msg_duration_default);
  return decide_with(view, beacon, [&](const LocalReceive& r) -> std::optional<NodeId> {
    const BeaconTL* b = r.msg.beacon_tl();
    if (b && tl_estimates_agree(*view.owner_loc, r.start, *b, params, tolerance, error)) return b->creator;
    return std::nullopt;
  });
}

}  // namespace

ActionSet pgt_decide(const LocalView& view, const SystemParams& params) {
  return tl_decide(view, params, Scalar(0), {});
}

ActionSet pgt_approx_decide(const LocalView& view, const SystemParams& params, const InaccuracyParams& inacc) {
  return tl_decide(view, params, inacc.tolerance(), inacc.error_of(view.owner));
}

ActionSet naive_decide(const LocalView& view, const SystemParams& params) {
  require_flavor(view, ViewFlavor::t);
  return decide_with(view, identity_beacon(view.owner, params),
                     [](const LocalReceive& r) { return attributed_node(r.msg); });
}

}  // namespace snd
