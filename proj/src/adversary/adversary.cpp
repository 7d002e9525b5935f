#include <map>

#include "snd/adversary.hpp"
#include "snd/errors.hpp"
#include "snd/setting_feasibility.hpp"
#include "snd/trace_index.hpp"

namespace snd {

AdversaryKind parse_adversary_kind(std::string_view name) {
  if (name == "relay") return AdversaryKind::relay;
  if (name == "relay-bcast") return AdversaryKind::relay_bcast_only;
  if (name == "relay-local") return AdversaryKind::relay_no_channel;
  if (name == "dy-t") return AdversaryKind::dolev_yao_t;
  if (name == "dy-gt") return AdversaryKind::dolev_yao_gt;
  throw ParseError("unknown adversary '" + std::string(name) +
                   "' (expected relay, relay-bcast, relay-local, dy-t or dy-gt)");
}

std::string_view to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::relay:
      return "relay";
    case AdversaryKind::relay_bcast_only:
      return "relay-bcast";
    case AdversaryKind::relay_no_channel:
      return "relay-local";
    case AdversaryKind::dolev_yao_t:
      return "dy-t";
    case AdversaryKind::dolev_yao_gt:
      return "dy-gt";
  }
  return "?";
}

namespace {

class RelayJustifier {
 public:
  RelayJustifier(const Trace& trace, const Setting& setting, const SystemParams& params, const Scalar& delta_relay)
      : setting_(setting), params_(params), delta_relay_(delta_relay), tol_(time_tolerance(setting)) {
    for (const Event& e : trace)
      if (const auto* r = e.get<Receive>(); r && setting.is_adversarial(r->actor)) heard_[r->msg].push_back(&e);
  }

  /// Whether the send of `msg` by `sender` at `t` relays an earlier reception.
  bool justified(const NodeId& sender, const Scalar& t, const Message& msg, bool same_node_only) const {
    auto it = heard_.find(msg);
    if (it == heard_.end()) return false;
    for (const Event* r : it->second) {
      if (same_node_only && r->actor() != sender) continue;
      Scalar need = delta_relay_;
      if (r->actor() != sender) need += setting_.dist(r->actor(), sender) / params_.v_adv;
      if (at_least(t - r->start(), need, tol_)) return true;
    }
    return false;
  }

 private:
  const Setting& setting_;
  const SystemParams& params_;
  Scalar delta_relay_;
  Scalar tol_;
  std::map<Message, std::vector<const Event*>> heard_;
};

}  // namespace

Verdict check_adversary_feasible(const Trace& trace, const Setting& setting, const SystemParams& params,
                                 const AdversaryModel& model) {
  if (model.delta_relay.sign() < 0) throw InvalidArgument("delta_relay must be >= 0");
  Verdict verdict;
  const RelayJustifier relays(trace, setting, params, model.delta_relay);
  const bool bcast_sends = model.kind == AdversaryKind::relay_bcast_only;
  const bool dolev_yao = model.kind == AdversaryKind::dolev_yao_t || model.kind == AdversaryKind::dolev_yao_gt;
  const bool local_only = model.kind == AdversaryKind::relay_no_channel;

  for (const Event& e : trace) {
    if (!setting.is_adversarial(e.actor())) continue;
    const EventKind k = e.kind();
    if (k != EventKind::bcast && k != EventKind::dcast) continue;
    const bool allowed_primitive = bcast_sends ? k == EventKind::bcast : k == EventKind::dcast;
    if (!allowed_primitive) {
      verdict.add(std::string("adversary.") + (k == EventKind::bcast ? "bcast" : "dcast") + "-forbidden", {e},
                  std::string(to_string(model.kind)) + " adversaries do not use " + std::string(to_string(k)));
      continue;
    }
    const Message& m = *e.message();
    if (dolev_yao) {
      if (!m.is_beacon())
        throw ModelMessageMismatch(std::string(to_string(model.kind)) + " covers authenticated beacons only, got " +
                                   m.str() + " from " + e.actor().str());
      if (setting.is_adversarial(*m.creator())) continue;
    }
    if (!relays.justified(e.actor(), e.start(), m, local_only))
      verdict.add("adversary.unjustified-send", {e},
                  e.actor().str() + " sends " + m.str() + " at " + e.start().str() +
                      " without an early enough adversarial reception");
  }
  return verdict;
}

}  // namespace snd
