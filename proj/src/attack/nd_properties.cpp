#include "snd/attack.hpp"
#include "snd/errors.hpp"
#include "snd/local_view.hpp"

namespace snd {

Verdict detect_nd1_violation(const Trace& trace, const Setting& setting) {
  Verdict verdict;
  for (const Event& e : trace) {
    const auto* n = e.get<Neighbor>();
    if (!n || !setting.is_correct(n->actor) || !setting.is_correct(n->declared)) continue;
    if (!setting.link_up(n->declared, n->actor, n->declared_time, n->declared_time))
      verdict.add("nd1", {e},
                  n->actor.str() + " declared " + n->declared.str() + " a neighbor at " + n->declared_time.str() +
                      " but the link " + n->declared.str() + " -> " + n->actor.str() + " is down");
  }
  return verdict;
}

Witness nd2_witness(const ProtocolChoice& choice, const Scalar& d, const SystemParams& params) {
  params.validate();
  if (d.sign() <= 0 || d > params.nd_range)
    throw OutOfRange("witness distance " + d.str() + " outside (0, " + params.nd_range.str() + "]");
  LinkMap links{{{kNodeA, kNodeB}, LinkSchedule::always()}, {{kNodeB, kNodeA}, LinkSchedule::always()}};
  Setting setting({{kNodeA, {Scalar(0), Scalar(0)}, NodeType::correct}, {kNodeB, {d, Scalar(0)}, NodeType::correct}},
                  std::move(links));
  Trace trace = synth_base_trace(setting, choice, params);
  return {std::move(setting), std::move(trace)};
}

bool check_local_views_equal(const Trace& a, const Trace& b, const std::vector<NodeId>& nodes) {
  auto events = [](const Trace& t, const NodeId& n) {
    try {
      return project_local(t, n, kForever, ViewFlavor::t).events;
    } catch (const UnknownNode&) {
      return std::vector<LocalEvent>{};
    }
  };
  for (const NodeId& n : nodes)
    if (events(a, n) != events(b, n)) return false;
  return true;
}

}  // namespace snd
