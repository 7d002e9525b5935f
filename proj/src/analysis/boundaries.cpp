#include "snd/analysis.hpp"

namespace snd {

BoundaryReport compute_boundaries(const SystemParams& params, const InaccuracyParams& inacc) {
  params.validate();
  BoundaryReport r;
  r.pt_threshold = params.nd_range / params.v;
  r.single_relay_max_dist = max(Scalar(0), params.nd_range - params.v * params.delta_relay);
  r.wormhole_max_dist = params.v_adv / params.v * r.single_relay_max_dist;
  r.pt_effective_range = params.nd_range + params.v * inacc.delta;
  r.pgt_vulnerable = params.delta_relay < Scalar(2) * (inacc.delta + inacc.tau);
  return r;
}

bool closed_form_vulnerable(const SystemParams& params, const ProtocolChoice& protocol, AttackVariant variant,
                            const Scalar& distance) {
  const BoundaryReport r = compute_boundaries(params, protocol.inacc.value_or(InaccuracyParams{}));
  if (flavor_of(protocol.kind) == ViewFlavor::t) {
    const Scalar& limit = variant == AttackVariant::wormhole ? r.wormhole_max_dist : r.single_relay_max_dist;
    return distance <= limit && limit.sign() > 0;
  }
  if (distance > params.nd_range) return false;
  const InaccuracyParams inacc =
      protocol.kind == ProtocolKind::pgt_approx ? protocol.inacc.value_or(InaccuracyParams{}) : InaccuracyParams{};
  // The faster adversary channel saves (1 - v/v_adv) * distance / v on the wormhole path.
  Scalar budget = Scalar(2) * (inacc.delta + inacc.tau);
  if (variant == AttackVariant::wormhole) budget += (Scalar(1) - params.v / params.v_adv) * distance / params.v;
  return params.delta_relay < budget || (params.delta_relay.is_zero() && budget.is_zero());
}

}  // namespace snd
