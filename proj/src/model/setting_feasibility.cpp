#include "snd/setting_feasibility.hpp"

#include <algorithm>

#include "snd/trace_index.hpp"

namespace snd {

TraceIndex::TraceIndex(const Trace& trace) {
  for (const Event& e : trace) buckets_[{e.kind(), e.actor()}].push_back(&e);
}

const std::vector<const Event*>& TraceIndex::of(EventKind kind, const NodeId& actor) const {
  static const std::vector<const Event*> kEmpty;
  auto it = buckets_.find({kind, actor});
  return it == buckets_.end() ? kEmpty : it->second;
}

std::vector<const Event*> TraceIndex::at(EventKind kind, const NodeId& actor, const Scalar& time,
                                         const Scalar& tolerance) const {
  const auto& bucket = of(kind, actor);
  const Scalar lo = time - tolerance;
  const Scalar hi = time + tolerance;
  auto it = std::lower_bound(bucket.begin(), bucket.end(), lo,
                             [](const Event* e, const Scalar& t) { return e->start() < t; });
  std::vector<const Event*> out;
  for (; it != bucket.end() && (*it)->start() <= hi; ++it) out.push_back(*it);
  return out;
}

Scalar time_tolerance(const Setting& setting) { return setting.arithmetic().epsilon.value_or(Scalar(0)); }

namespace {

bool has_reception(const TraceIndex& index, const NodeId& receiver, const Scalar& time, const NodeId& sender,
                   const Message& msg, const Scalar& tol) {
  for (const Event* e : index.at(EventKind::receive, receiver, time, tol)) {
    const auto* r = e->get<Receive>();
    if (r->sender == sender && r->msg == msg) return true;
  }
  return false;
}

void check_receive(const Event& e, const Receive& r, const Setting& setting, const SystemParams& params,
                   const TraceIndex& index, const Scalar& tol, Verdict& verdict) {
  if (!setting.contains(r.actor) || !setting.contains(r.sender)) {
    verdict.add("setting.unknown-node", {e}, "receiver or sender is not a node of the setting");
    return;
  }
  const Scalar end = e.end();
  if (!setting.link_up(r.sender, r.actor, r.start, end)) {
    verdict.add("setting.receive.link-down", {e},
                "link " + r.sender.str() + " -> " + r.actor.str() + " is not up over [" + r.start.str() + ", " +
                    end.str() + "]");
  }
  const Scalar sent = r.start - time_of_flight(setting, params, r.actor, r.sender);
  std::vector<Event> sources;
  bool from_bcast = false;
  bool from_dcast = false;
  for (const Event* s : index.at(EventKind::bcast, r.sender, sent, tol)) {
    if (s->get<Bcast>()->msg == r.msg) {
      from_bcast = true;
      sources.push_back(*s);
    }
  }
  for (const Event* s : index.at(EventKind::dcast, r.sender, sent, tol)) {
    const auto* d = s->get<Dcast>();
    if (d->msg == r.msg && inrange(setting, r.sender, d->direction, d->width, r.actor)) {
      from_dcast = true;
      sources.push_back(*s);
    }
  }
  if (!from_bcast && !from_dcast) {
    verdict.add("setting.receive.no-source", {e},
                "no Bcast or in-range Dcast by " + r.sender.str() + " at " + sent.str() + " sends this message");
  } else if (from_bcast && from_dcast) {
    sources.insert(sources.begin(), e);
    verdict.add("setting.receive.ambiguous-source", std::move(sources),
                "reception is explained by both a Bcast and a Dcast");
  }
}

void check_send(const Event& e, const Setting& setting, const SystemParams& params, const TraceIndex& index,
                const Scalar& tol, Verdict& verdict) {
  if (!setting.contains(e.actor())) {
    verdict.add("setting.unknown-node", {e}, "sender is not a node of the setting");
    return;
  }
  const auto* d = e.get<Dcast>();
  if (d != nullptr && !setting.is_adversarial(d->actor)) {
    verdict.add("setting.dcast.correct-sender", {e}, "only adversarial nodes may use directional transmission");
  }
  const Message& msg = *e.message();
  for (const auto& node : setting.nodes()) {
    if (d != nullptr && !inrange(setting, d->actor, d->direction, d->width, node.id)) continue;
    const Scalar arrival = e.start() + time_of_flight(setting, params, e.actor(), node.id);
    if (!setting.link_up(e.actor(), node.id, arrival, arrival + msg.duration())) continue;
    if (!has_reception(index, node.id, arrival, e.actor(), msg, tol)) {
      verdict.add(d != nullptr ? "setting.dcast.missing-receive" : "setting.bcast.missing-receive", {e},
                  node.id.str() + " should receive this message at " + arrival.str());
    }
  }
}

}  // namespace

Verdict check_setting_feasible(const Trace& trace, const Setting& setting, const SystemParams& params) {
  const Scalar tol = time_tolerance(setting);
  const TraceIndex index(trace);
  Verdict verdict;
  for (const Event& e : trace) {
    switch (e.kind()) {
      case EventKind::receive:
        check_receive(e, *e.get<Receive>(), setting, params, index, tol, verdict);
        break;
      case EventKind::bcast:
      case EventKind::dcast:
        check_send(e, setting, params, index, tol, verdict);
        break;
      case EventKind::neighbor:
        if (!setting.contains(e.actor())) verdict.add("setting.unknown-node", {e}, "actor is not a node of the setting");
        break;
    }
  }
  return verdict;
}

std::vector<Event> induced_receptions(const Event& send, const Setting& setting, const SystemParams& params) {
  std::vector<Event> out;
  const Message* msg = send.message();
  if (msg == nullptr || send.kind() == EventKind::receive) return out;
  const auto* d = send.get<Dcast>();
  for (const auto& node : setting.nodes()) {
    if (d != nullptr && !inrange(setting, d->actor, d->direction, d->width, node.id)) continue;
    const Scalar arrival = send.start() + time_of_flight(setting, params, send.actor(), node.id);
    if (!setting.link_up(send.actor(), node.id, arrival, arrival + msg->duration())) continue;
    out.emplace_back(Receive{node.id, arrival, send.actor(), *msg});
  }
  return out;
}

Trace with_receptions(const Trace& trace, const Setting& setting, const SystemParams& params) {
  std::vector<Event> events(trace.begin(), trace.end());
  for (const Event& e : trace) {
    auto rx = induced_receptions(e, setting, params);
    events.insert(events.end(), rx.begin(), rx.end());
  }
  return Trace(std::move(events));
}

}  // namespace snd
