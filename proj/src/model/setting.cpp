#include "snd/setting.hpp"

#include <algorithm>
#include <cctype>

#include "snd/errors.hpp"

namespace snd {

NodeId::NodeId(std::string name) : name_(std::move(name)) {
  if (!valid_identifier(name_)) throw InvalidArgument("invalid node identifier '" + name_ + "'");
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':';
  });
}

std::string_view to_string(NodeType t) { return t == NodeType::correct ? "correct" : "adversarial"; }

void SystemParams::validate() const {
  if (v <= Scalar(0)) throw InvalidArgument("v must be > 0");
  if (v_adv < v) throw InvalidArgument("v_adv must be >= v");
  if (nd_range <= Scalar(0)) throw InvalidArgument("nd_range must be > 0");
  if (delta_relay < Scalar(0)) throw InvalidArgument("delta_relay must be >= 0");
  if (msg_duration_default <= Scalar(0)) throw InvalidArgument("msg_duration_default must be > 0");
}

LinkSchedule::LinkSchedule(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.start < Scalar(0)) throw InvalidArgument("link interval starts before 0");
    if (iv.end && *iv.end < iv.start) throw InvalidArgument("link interval ends before it starts");
  }
  std::erase_if(intervals, [](const Interval& iv) { return iv.end && *iv.end == iv.start; });
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.start < b.start; });
  for (auto& iv : intervals) {
    if (!intervals_.empty()) {
      Interval& last = intervals_.back();
      if (!last.end || iv.start < *last.end) {
        throw InvalidArgument("overlapping link intervals");
      }
      if (iv.start == *last.end) {
        last.end = iv.end;
        continue;
      }
    }
    intervals_.push_back(std::move(iv));
  }
}

bool LinkSchedule::covers(const Scalar& t1, const Scalar& t2) const {
  for (const auto& iv : intervals_) {
    if (iv.start <= t1) {
      if (!iv.end || t2 < *iv.end) return true;
    } else {
      break;
    }
  }
  return false;
}

Setting::Setting(std::vector<NodeSpec> nodes, LinkMap links, Arithmetic arithmetic)
    : nodes_(std::move(nodes)), arithmetic_(std::move(arithmetic)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].id, i).second) {
      throw InvalidArgument("duplicate node '" + nodes_[i].id.str() + "'");
    }
  }
  for (auto& [pair, schedule] : links) {
    if (!contains(pair.first) || !contains(pair.second)) {
      throw InvalidArgument("link " + pair.first.str() + " -> " + pair.second.str() + " names an undeclared node");
    }
    if (pair.first == pair.second || schedule.empty()) continue;
    links_.emplace(pair, std::move(schedule));
  }
  const std::size_t n = nodes_.size();
  distances_.assign(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar sq = squared_distance(nodes_[i].loc, nodes_[j].loc);
      if (sq.is_zero()) {
        throw InvalidArgument("nodes '" + nodes_[i].id.str() + "' and '" + nodes_[j].id.str() + "' share a location");
      }
      Scalar d;
      if (auto root = sq.exact_sqrt()) {
        d = *root;
      } else if (arithmetic_.exact()) {
        throw IrrationalDistance("distance between '" + nodes_[i].id.str() + "' and '" + nodes_[j].id.str() +
                                 "' is irrational (squared distance " + sq.str() + ")");
      } else {
        d = sq.approx_sqrt();
      }
      distances_[i * n + j] = d;
      distances_[j * n + i] = d;
    }
  }
}

std::size_t Setting::index_of(const NodeId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownNode("unknown node '" + id.str() + "'");
  return it->second;
}

const NodeSpec& Setting::node(const NodeId& id) const { return nodes_[index_of(id)]; }

std::vector<NodeId> Setting::correct_nodes() const {
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (n.type == NodeType::correct) out.push_back(n.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Setting::adversarial_nodes() const {
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (n.type == NodeType::adversarial) out.push_back(n.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Scalar& Setting::dist(const NodeId& a, const NodeId& b) const {
  return distances_[index_of(a) * nodes_.size() + index_of(b)];
}

bool Setting::link_up(const NodeId& from, const NodeId& to, const Scalar& t1, const Scalar& t2) const {
  if (from == to) return true;
  auto it = links_.find({from, to});
  return it != links_.end() && it->second.covers(t1, t2);
}

Scalar dist(const Setting& setting, const NodeId& a, const NodeId& b) { return setting.dist(a, b); }

Scalar time_of_flight(const Setting& setting, const SystemParams& params, const NodeId& a, const NodeId& b) {
  return setting.dist(a, b) / params.v;
}

bool link_up(const Setting& setting, const NodeId& a, const NodeId& b, const Scalar& t1, const Scalar& t2) {
  return setting.link_up(a, b, t1, t2);
}

bool inrange(const Setting& setting, const NodeId& a, const Angle& direction, const Angle& width, const NodeId& b) {
  return in_sector(setting.loc(a), direction, width, setting.loc(b));
}

}  // namespace snd
