#pragma once

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "snd/event.hpp"
#include "snd/setting.hpp"

namespace snd {

enum class ViewFlavor { t, tl };

std::string_view to_string(ViewFlavor f);

struct LocalBcast {
  Scalar start;
  Message msg;

  friend bool operator==(const LocalBcast&, const LocalBcast&) = default;
};

/// A completed reception. It carries no sender: a node cannot tell who
/// physically transmitted what it heard.
struct LocalReceive {
  Scalar start;
  Message msg;

  friend bool operator==(const LocalReceive&, const LocalReceive&) = default;
};

struct LocalNeighbor {
  Scalar start;
  NodeId declared;
  Scalar declared_time;

  friend bool operator==(const LocalNeighbor&, const LocalNeighbor&) = default;
};

using LocalEvent = std::variant<LocalBcast, LocalReceive, LocalNeighbor>;

const Scalar& start_of(const LocalEvent& e);
std::strong_ordering compare_local(const LocalEvent& a, const LocalEvent& b);

/// Represents the unbounded projection time t = infinity.
inline constexpr std::nullopt_t kForever = std::nullopt;

struct LocalView {
  ViewFlavor flavor = ViewFlavor::t;
  NodeId owner;
  std::optional<Scalar> as_of;     // nullopt: complete local trace
  std::optional<Point> owner_loc;  // present iff flavor == tl
  std::vector<LocalEvent> events;  // canonical order

  friend bool operator==(const LocalView&, const LocalView&) = default;
};

/// What `node` has observed strictly before `as_of`: its own Bcasts and
/// Neighbor declarations that started before `as_of`, and receptions that
/// completed before it, with the sender erased.
///
/// The TL flavor needs `setting` for the owner's location (FlavorMismatch
/// otherwise). Throws UnknownNode if `node` is neither in the setting nor
/// mentioned by any event.
LocalView project_local(const Trace& trace, const NodeId& node, const std::optional<Scalar>& as_of, ViewFlavor flavor,
                        const Setting* setting = nullptr);

}  // namespace snd
