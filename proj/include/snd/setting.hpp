#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snd/geometry.hpp"
#include "snd/scalar.hpp"

namespace snd {

class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string name);

  const std::string& str() const { return name_; }

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;

 private:
  std::string name_;
};

inline NodeId operator""_node(const char* s, std::size_t n) { return NodeId(std::string(s, n)); }

/// Node identifiers and opaque tokens are restricted to this alphabet so the
/// text formats stay unambiguous.
bool valid_identifier(std::string_view s);

enum class NodeType { correct, adversarial };

std::string_view to_string(NodeType t);

struct SystemParams {
  Scalar v{1};
  Scalar v_adv{1};
  Scalar nd_range{1};
  Scalar delta_relay{0};
  Scalar msg_duration_default{1};

  /// Throws InvalidArgument when an invariant fails.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Half-open time interval [start, end); an absent end means "forever".
struct Interval {
  Scalar start;
  std::optional<Scalar> end;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Up-intervals of one directed link, kept sorted, disjoint and with touching
/// intervals merged.
class LinkSchedule {
 public:
  LinkSchedule() = default;
  explicit LinkSchedule(std::vector<Interval> intervals);

  static LinkSchedule always() { return LinkSchedule({Interval{Scalar(0), std::nullopt}}); }

  /// True iff the link is up at every point of the closed interval [t1, t2].
  bool covers(const Scalar& t1, const Scalar& t2) const;
  bool up_at(const Scalar& t) const { return covers(t, t); }
  bool empty() const { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const { return intervals_; }

  friend bool operator==(const LinkSchedule&, const LinkSchedule&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Exact mode demands rational pairwise distances; approximate mode stores
/// rational approximations and matches times up to `epsilon`.
struct Arithmetic {
  std::optional<Scalar> epsilon;

  bool exact() const { return !epsilon.has_value(); }
  static Arithmetic exact_mode() { return {}; }
  static Arithmetic approximate(Scalar eps) { return {std::move(eps)}; }

  friend bool operator==(const Arithmetic&, const Arithmetic&) = default;
};

struct NodeSpec {
  NodeId id;
  Point loc;
  NodeType type = NodeType::correct;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

using LinkMap = std::map<std::pair<NodeId, NodeId>, LinkSchedule>;

/// The static world: node locations and types plus the link-state schedule.
class Setting {
 public:
  Setting() = default;
  /// Validates injectivity, link endpoints and (in exact mode) distance rationality.
  /// Self-links are implicit and always up; entries for them are ignored.
  Setting(std::vector<NodeSpec> nodes, LinkMap links, Arithmetic arithmetic = {});

  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const LinkMap& links() const { return links_; }
  const Arithmetic& arithmetic() const { return arithmetic_; }

  bool contains(const NodeId& id) const { return index_.contains(id); }
  const NodeSpec& node(const NodeId& id) const;
  const Point& loc(const NodeId& id) const { return node(id).loc; }
  NodeType type(const NodeId& id) const { return node(id).type; }
  bool is_correct(const NodeId& id) const { return contains(id) && type(id) == NodeType::correct; }
  bool is_adversarial(const NodeId& id) const { return contains(id) && type(id) == NodeType::adversarial; }
  std::vector<NodeId> correct_nodes() const;
  std::vector<NodeId> adversarial_nodes() const;

  const Scalar& dist(const NodeId& a, const NodeId& b) const;
  bool link_up(const NodeId& from, const NodeId& to, const Scalar& t1, const Scalar& t2) const;

  friend bool operator==(const Setting& a, const Setting& b) {
    return a.nodes_ == b.nodes_ && a.links_ == b.links_ && a.arithmetic_ == b.arithmetic_;
  }

 private:
  std::size_t index_of(const NodeId& id) const;

  std::vector<NodeSpec> nodes_;
  LinkMap links_;
  Arithmetic arithmetic_;
  std::map<NodeId, std::size_t> index_;
  std::vector<Scalar> distances_;  // row-major |V| x |V|
};

Scalar dist(const Setting& setting, const NodeId& a, const NodeId& b);
Scalar time_of_flight(const Setting& setting, const SystemParams& params, const NodeId& a, const NodeId& b);
bool link_up(const Setting& setting, const NodeId& a, const NodeId& b, const Scalar& t1, const Scalar& t2);
bool inrange(const Setting& setting, const NodeId& a, const Angle& direction, const Angle& width, const NodeId& b);

}  // namespace snd
