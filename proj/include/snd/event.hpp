#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "snd/geometry.hpp"
#include "snd/message.hpp"
#include "snd/scalar.hpp"
#include "snd/setting.hpp"

namespace snd {

struct Bcast {
  NodeId actor;
  Scalar start;
  Message msg;
};

struct Dcast {
  NodeId actor;
  Scalar start;
  Angle direction;
  Angle width;
  Message msg;
};

struct Receive {
  NodeId actor;
  Scalar start;
  NodeId sender;
  Message msg;
};

struct Neighbor {
  NodeId actor;
  Scalar start;
  NodeId declared;
  Scalar declared_time;
};

enum class EventKind { bcast = 0, dcast = 1, receive = 2, neighbor = 3 };

std::string_view to_string(EventKind k);

class Event {
 public:
  using Body = std::variant<Bcast, Dcast, Receive, Neighbor>;

  Event(Bcast e);     // NOLINT(google-explicit-constructor)
  Event(Dcast e);     // NOLINT(google-explicit-constructor)
  Event(Receive e);   // NOLINT(google-explicit-constructor)
  Event(Neighbor e);  // NOLINT(google-explicit-constructor)

  EventKind kind() const { return static_cast<EventKind>(body_.index()); }
  const NodeId& actor() const;
  const Scalar& start() const;
  /// start + |m| for message events, start for Neighbor.
  Scalar end() const;
  /// nullptr for Neighbor events.
  const Message* message() const;

  const Body& body() const { return body_; }
  template <typename T>
  const T* get() const {
    return std::get_if<T>(&body_);
  }

  /// Human-readable one-line rendering, e.g. "Receive(B; 10; C, auth(B,0))".
  std::string str() const;

  friend bool operator==(const Event& a, const Event& b) { return (a <=> b) == 0; }
  /// Canonical order: start, actor, kind, then the remaining fields.
  friend std::strong_ordering operator<=>(const Event& a, const Event& b);

 private:
  Body body_;
};

/// A finite set of events kept in canonical order without duplicates.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<Event> events);

  void insert(Event e);
  void insert(const Trace& other);
  bool erase(const Event& e);
  bool contains(const Event& e) const;

  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  auto begin() const { return events_.begin(); }
  auto end() const { return events_.end(); }

  /// Largest end time over all events, 0 for the empty trace.
  Scalar last_end() const;

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<Event> events_;
};

}  // namespace snd
