#include <algorithm>

#include "snd/errors.hpp"
#include "snd/protocols.hpp"

namespace snd {

ProtocolKind parse_protocol_kind(std::string_view name) {
  if (name == "naive") return ProtocolKind::naive;
  if (name == "pt") return ProtocolKind::pt;
  if (name == "pgt") return ProtocolKind::pgt;
  if (name == "pgt-approx") return ProtocolKind::pgt_approx;
  throw ParseError("unknown protocol '" + std::string(name) + "' (expected naive, pt, pgt or pgt-approx)");
}

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::naive:
      return "naive";
    case ProtocolKind::pt:
      return "pt";
    case ProtocolKind::pgt:
      return "pgt";
    case ProtocolKind::pgt_approx:
      return "pgt-approx";
  }
  return "?";
}

ViewFlavor flavor_of(ProtocolKind kind) {
  return kind == ProtocolKind::pgt || kind == ProtocolKind::pgt_approx ? ViewFlavor::tl : ViewFlavor::t;
}

void InaccuracyParams::validate() const {
  if (delta.sign() < 0) throw InvalidArgument("delta must be >= 0");
  if (tau.sign() < 0) throw InvalidArgument("tau must be >= 0");
  for (const auto& [node, err] : errors) {
    if (err.clock.abs() > delta) throw InvalidArgument("clock error of " + node.str() + " exceeds delta");
    if (err.range.abs() > tau) throw InvalidArgument("range error of " + node.str() + " exceeds tau");
  }
}

MeasurementError InaccuracyParams::error_of(const NodeId& node) const {
  auto it = errors.find(node);
  return it == errors.end() ? MeasurementError{} : it->second;
}

ProtocolModel make_protocol(ProtocolKind kind, const SystemParams& params,
                            const std::optional<InaccuracyParams>& inacc) {
  ProtocolModel p;
  p.name = std::string(to_string(kind));
  p.flavor = flavor_of(kind);
  switch (kind) {
    case ProtocolKind::naive:
      p.decide = [params](const LocalView& v) { return naive_decide(v, params); };
      break;
    case ProtocolKind::pt:
      p.decide = [params](const LocalView& v) { return pt_decide(v, params); };
      break;
    case ProtocolKind::pgt:
      p.decide = [params](const LocalView& v) { return pgt_decide(v, params); };
      break;
    case ProtocolKind::pgt_approx: {
      if (!inacc) throw InvalidArgument("pgt-approx needs delta and tau");
      inacc->validate();
      p.decide = [params, i = *inacc](const LocalView& v) { return pgt_approx_decide(v, params, i); };
      break;
    }
  }
  return p;
}

std::vector<Scalar> idle_sample_times(const Trace& trace, const NodeId& node, const SamplingPolicy& policy) {
  std::vector<Scalar> bounds{Scalar(0)};
  std::vector<Scalar> acting;
  for (const Event& e : trace) {
    if (e.actor() != node) continue;
    bounds.push_back(e.start());
    bounds.push_back(e.end());
    if (e.kind() == EventKind::bcast || e.kind() == EventKind::neighbor) acting.push_back(e.start());
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<Scalar> samples = bounds;
  if (policy.midpoints) {
    for (std::size_t i = 1; i < bounds.size(); ++i) samples.push_back((bounds[i - 1] + bounds[i]) / Scalar(2));
  }
  if (policy.tail) samples.push_back(bounds.back() + Scalar(1));
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  std::sort(acting.begin(), acting.end());
  std::erase_if(samples, [&](const Scalar& t) { return std::binary_search(acting.begin(), acting.end(), t); });
  return samples;
}

Verdict check_protocol_feasible(const Trace& trace, const Setting& setting, const ProtocolModel& protocol,
                                const SystemParams& params, const SamplingPolicy& policy) {
  (void)params;
  Verdict verdict;
  const Setting* s = &setting;
  for (const NodeId& a : setting.correct_nodes()) {
    for (const Event& e : trace) {
      if (e.actor() != a) continue;
      if (const auto* b = e.get<Bcast>()) {
        const ActionSet acts = protocol.decide(project_local(trace, a, e.start(), protocol.flavor, s));
        if (!acts.contains(Action{BcastAction{b->msg}}))
          verdict.add("protocol.bcast-not-permitted", {e}, protocol.name + " does not permit " + a.str() +
                                                               " to send " + b->msg.str() + " at " + e.start().str());
      } else if (const auto* n = e.get<Neighbor>()) {
        const ActionSet acts = protocol.decide(project_local(trace, a, e.start(), protocol.flavor, s));
        if (!acts.contains(Action{NeighborAction{n->declared, n->declared_time}}))
          verdict.add("protocol.neighbor-not-permitted", {e},
                      protocol.name + " does not permit " + a.str() + " to declare " + n->declared.str() + " at " +
                          e.start().str());
      }
    }
    for (const Scalar& t : idle_sample_times(trace, a, policy)) {
      const ActionSet acts = protocol.decide(project_local(trace, a, t, protocol.flavor, s));
      if (!acts.contains(Action{EpsilonAction{}}))
        verdict.add("protocol.idle-not-permitted", {}, a.str() + " must act at " + t.str());
    }
  }
  return verdict;
}

}  // namespace snd
