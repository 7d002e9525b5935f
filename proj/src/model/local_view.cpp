#include "snd/local_view.hpp"

#include <algorithm>

#include "snd/errors.hpp"

namespace snd {

std::string_view to_string(ViewFlavor f) { return f == ViewFlavor::t ? "T" : "TL"; }

const Scalar& start_of(const LocalEvent& e) {
  return std::visit([](const auto& x) -> const Scalar& { return x.start; }, e);
}

std::strong_ordering compare_local(const LocalEvent& a, const LocalEvent& b) {
  if (auto c = start_of(a) <=> start_of(b); c != 0) return c;
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  if (const auto* x = std::get_if<LocalBcast>(&a)) return x->msg <=> std::get<LocalBcast>(b).msg;
  if (const auto* x = std::get_if<LocalReceive>(&a)) return x->msg <=> std::get<LocalReceive>(b).msg;
  const auto& x = std::get<LocalNeighbor>(a);
  const auto& y = std::get<LocalNeighbor>(b);
  if (auto c = x.declared <=> y.declared; c != 0) return c;
  return x.declared_time <=> y.declared_time;
}

namespace {

bool mentioned(const Trace& trace, const NodeId& node) {
  return std::any_of(trace.begin(), trace.end(), [&](const Event& e) {
    if (e.actor() == node) return true;
    if (const auto* r = e.get<Receive>()) return r->sender == node;
    if (const auto* n = e.get<Neighbor>()) return n->declared == node;
    return false;
  });
}

bool before(const Scalar& t, const std::optional<Scalar>& as_of) { return !as_of || t < *as_of; }

}  // namespace

LocalView project_local(const Trace& trace, const NodeId& node, const std::optional<Scalar>& as_of, ViewFlavor flavor,
                        const Setting* setting) {
  if (flavor == ViewFlavor::tl && setting == nullptr) {
    throw FlavorMismatch("a TL local view needs a setting to locate '" + node.str() + "'");
  }
  if (!(setting != nullptr && setting->contains(node)) && !mentioned(trace, node)) {
    throw UnknownNode("node '" + node.str() + "' is not part of the trace or setting");
  }
  LocalView view;
  view.flavor = flavor;
  view.owner = node;
  view.as_of = as_of;
  if (flavor == ViewFlavor::tl) view.owner_loc = setting->loc(node);

  for (const Event& e : trace) {
    if (as_of && !(e.start() < *as_of)) break;  // events are sorted by start
    if (e.actor() != node) continue;
    if (const auto* b = e.get<Bcast>()) {
      view.events.emplace_back(LocalBcast{b->start, b->msg});
    } else if (const auto* r = e.get<Receive>()) {
      if (before(e.end(), as_of)) view.events.emplace_back(LocalReceive{r->start, r->msg});
    } else if (const auto* n = e.get<Neighbor>()) {
      view.events.emplace_back(LocalNeighbor{n->start, n->declared, n->declared_time});
    }
  }
  std::sort(view.events.begin(), view.events.end(),
            [](const LocalEvent& a, const LocalEvent& b) { return compare_local(a, b) < 0; });
  view.events.erase(std::unique(view.events.begin(), view.events.end()), view.events.end());
  return view;
}

}  // namespace snd
