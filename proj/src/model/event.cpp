#include "snd/event.hpp"

#include <algorithm>

#include "snd/errors.hpp"

namespace snd {

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::bcast:
      return "bcast";
    case EventKind::dcast:
      return "dcast";
    case EventKind::receive:
      return "receive";
    case EventKind::neighbor:
      return "neighbor";
  }
  return "?";
}

namespace {

void require_nonnegative(const Scalar& t, const char* what) {
  if (t < Scalar(0)) throw InvalidArgument(std::string(what) + " must be >= 0, got " + t.str());
}

}  // namespace

Event::Event(Bcast e) : body_(std::move(e)) { require_nonnegative(start(), "event start"); }
Event::Event(Dcast e) : body_(std::move(e)) { require_nonnegative(start(), "event start"); }
Event::Event(Receive e) : body_(std::move(e)) { require_nonnegative(start(), "event start"); }
Event::Event(Neighbor e) : body_(std::move(e)) {
  require_nonnegative(start(), "event start");
  require_nonnegative(std::get<Neighbor>(body_).declared_time, "declared time");
}

const NodeId& Event::actor() const {
  return std::visit([](const auto& e) -> const NodeId& { return e.actor; }, body_);
}

const Scalar& Event::start() const {
  return std::visit([](const auto& e) -> const Scalar& { return e.start; }, body_);
}

Scalar Event::end() const {
  if (const Message* m = message()) return start() + m->duration();
  return start();
}

const Message* Event::message() const {
  return std::visit(
      [](const auto& e) -> const Message* {
        if constexpr (requires { e.msg; }) {
          return &e.msg;
        } else {
          return nullptr;
        }
      },
      body_);
}

std::string Event::str() const {
  const std::string head = actor().str() + "; " + start().str();
  if (const auto* e = get<Bcast>()) return "Bcast(" + head + "; " + e->msg.str() + ")";
  if (const auto* e = get<Dcast>()) {
    return "Dcast(" + head + "; " + e->direction.str() + ", " + e->width.str() + ", " + e->msg.str() + ")";
  }
  if (const auto* e = get<Receive>()) return "Receive(" + head + "; " + e->sender.str() + ", " + e->msg.str() + ")";
  const auto& n = std::get<Neighbor>(body_);
  return "Neighbor(" + head + "; " + n.declared.str() + ", " + n.declared_time.str() + ")";
}

std::strong_ordering operator<=>(const Event& a, const Event& b) {
  if (auto c = a.start() <=> b.start(); c != 0) return c;
  if (auto c = a.actor() <=> b.actor(); c != 0) return c;
  if (auto c = a.body_.index() <=> b.body_.index(); c != 0) return c;
  if (const auto* x = a.get<Bcast>()) return x->msg <=> b.get<Bcast>()->msg;
  if (const auto* x = a.get<Dcast>()) {
    const auto* y = b.get<Dcast>();
    if (auto c = x->direction <=> y->direction; c != 0) return c;
    if (auto c = x->width <=> y->width; c != 0) return c;
    return x->msg <=> y->msg;
  }
  if (const auto* x = a.get<Receive>()) {
    const auto* y = b.get<Receive>();
    if (auto c = x->sender <=> y->sender; c != 0) return c;
    return x->msg <=> y->msg;
  }
  const auto* x = a.get<Neighbor>();
  const auto* y = b.get<Neighbor>();
  if (auto c = x->declared <=> y->declared; c != 0) return c;
  return x->declared_time <=> y->declared_time;
}

Trace::Trace(std::vector<Event> events) : events_(std::move(events)) {
  std::sort(events_.begin(), events_.end());
  events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
}

void Trace::insert(Event e) {
  auto it = std::lower_bound(events_.begin(), events_.end(), e);
  if (it != events_.end() && *it == e) return;
  events_.insert(it, std::move(e));
}

void Trace::insert(const Trace& other) {
  std::vector<Event> merged;
  merged.reserve(events_.size() + other.events_.size());
  std::set_union(events_.begin(), events_.end(), other.events_.begin(), other.events_.end(),
                 std::back_inserter(merged));
  events_ = std::move(merged);
}

bool Trace::erase(const Event& e) {
  auto it = std::lower_bound(events_.begin(), events_.end(), e);
  if (it == events_.end() || *it != e) return false;
  events_.erase(it);
  return true;
}

bool Trace::contains(const Event& e) const { return std::binary_search(events_.begin(), events_.end(), e); }

Scalar Trace::last_end() const {
  Scalar out(0);
  for (const auto& e : events_) out = max(out, e.end());
  return out;
}

}  // namespace snd
