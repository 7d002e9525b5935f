#include "snd/adversary.hpp"
#include "snd/errors.hpp"

namespace snd {

Trace rename_bcast_to_dcast(const Trace& trace, const Setting& setting) {
  std::vector<Event> out;
  out.reserve(trace.size());
  for (const Event& e : trace) {
    const auto* b = e.get<Bcast>();
    if (b && setting.is_adversarial(b->actor))
      out.emplace_back(Dcast{b->actor, b->start, Angle::direction(Scalar(0)), Angle::width(Scalar(2)), b->msg});
    else
      out.push_back(e);
  }
  return Trace(std::move(out));
}

OrderReport weaker_on_corpus(AdversaryKind weaker, AdversaryKind stronger, const std::vector<CorpusEntry>& corpus,
                             bool use_renaming) {
  OrderReport report;
  for (const CorpusEntry& entry : corpus) {
    ++report.total;
    const Scalar& d = entry.params.delta_relay;
    const Trace renamed = use_renaming ? rename_bcast_to_dcast(entry.trace, entry.setting) : entry.trace;
    bool premise = false;
    bool conclusion = false;
    try {
      premise = check_adversary_feasible(entry.trace, entry.setting, entry.params, {weaker, d}).ok();
      if (premise) conclusion = check_adversary_feasible(renamed, entry.setting, entry.params, {stronger, d}).ok();
    } catch (const ModelMessageMismatch&) {
      ++report.outside_message_space;
      continue;
    }
    if (!premise) continue;
    ++report.premise;
    if (!conclusion) report.counterexamples.push_back(entry.name);
  }
  return report;
}

}  // namespace snd
