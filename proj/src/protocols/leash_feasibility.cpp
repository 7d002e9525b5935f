#include "snd/protocols.hpp"
#include "snd/setting_feasibility.hpp"
#include "snd/trace_index.hpp"

namespace snd {

namespace {

/// Shared shape of the two leash checkers: `beacon_ok` vets a correct node's
/// own broadcast, `justifies` decides whether a reception backs a declaration.
template <typename BeaconOk, typename Justifies>
Verdict check_leash(const Trace& trace, const Setting& setting, std::string_view prefix, BeaconOk beacon_ok,
                    Justifies justifies) {
  Verdict verdict;
  const Scalar tol = time_tolerance(setting);
  const TraceIndex index(trace);
  const std::string p(prefix);
  for (const Event& e : trace) {
    if (!setting.is_correct(e.actor())) continue;
    if (const auto* b = e.get<Bcast>()) {
      if (auto problem = beacon_ok(*b)) verdict.add(p + "." + *problem, {e}, e.actor().str() + " sent " + b->msg.str());
    } else if (const auto* n = e.get<Neighbor>()) {
      bool found = false;
      for (const Event* r : index.at(EventKind::receive, n->actor, n->declared_time, tol)) {
        const Receive& rec = *r->get<Receive>();
        if (rec.msg.creator() != n->declared) continue;
        if (n->start <= r->end()) continue;
        if (justifies(rec)) {
          found = true;
          break;
        }
      }
      if (!found)
        verdict.add(p + ".neighbor-unjustified", {e},
                    "no accepted beacon of " + n->declared.str() + " received by " + n->actor.str() + " at " +
                        n->declared_time.str() + " ending before " + n->start.str());
    }
  }
  return verdict;
}

}  // namespace

Verdict check_pt_feasible(const Trace& trace, const Setting& setting, const SystemParams& params) {
  return check_leash(
      trace, setting, "pt",
      [](const Bcast& b) -> std::optional<std::string> {
        const BeaconT* m = b.msg.beacon_t();
        if (!m) return "non-beacon";
        if (m->creator != b.actor) return "beacon-creator";
        if (m->time != b.start) return "beacon-time";
        return std::nullopt;
      },
      [&](const Receive& r) {
        const BeaconT* m = r.msg.beacon_t();
        return m && pt_fresh(r.start, *m, params);
      });
}

Verdict check_pgt_feasible(const Trace& trace, const Setting& setting, const SystemParams& params,
                           const InaccuracyParams* inacc) {
  const Scalar tol = inacc ? inacc->tolerance() : Scalar(0);
  return check_leash(
      trace, setting, "pgt",
      [&](const Bcast& b) -> std::optional<std::string> {
        const BeaconTL* m = b.msg.beacon_tl();
        if (!m) return "non-beacon";
        if (m->creator != b.actor) return "beacon-creator";
        if (m->time != b.start) return "beacon-time";
        if (m->loc != setting.loc(b.actor)) return "beacon-location";
        return std::nullopt;
      },
      [&](const Receive& r) {
        const BeaconTL* m = r.msg.beacon_tl();
        if (!m) return false;
        const MeasurementError err = inacc ? inacc->error_of(r.actor) : MeasurementError{};
        return tl_estimates_agree(setting.loc(r.actor), r.start, *m, params, tol, err);
      });
}

Verdict check_leash_feasible(const Trace& trace, const Setting& setting, const SystemParams& params,
                             const ProtocolChoice& choice) {
  switch (choice.kind) {
    case ProtocolKind::naive:
      return {};
    case ProtocolKind::pt:
      return check_pt_feasible(trace, setting, params);
    case ProtocolKind::pgt:
      return check_pgt_feasible(trace, setting, params);
    case ProtocolKind::pgt_approx:
      return check_pgt_feasible(trace, setting, params, choice.inacc ? &*choice.inacc : nullptr);
  }
  return {};
}

}  // namespace snd
