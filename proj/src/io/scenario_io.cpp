#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "snd/errors.hpp"
#include "snd/io.hpp"
#include "text_util.hpp"

namespace snd {

namespace {

const std::set<std::string_view> kSections{"params", "protocol", "adversary", "inaccuracy",
                                           "nodes",  "links",    "sim",       "attack"};

/// "[a,b) [c,inf)" -> intervals; "never" -> none.
std::vector<Interval> parse_intervals(std::string_view s, int no) {
  std::vector<Interval> out;
  s = text::trim(s);
  if (s == "never") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    if (s[i] != '[') throw ParseError(no, "link interval must look like [start,end)");
    const auto close = s.find(')', i);
    if (close == std::string_view::npos) throw ParseError(no, "unterminated link interval");
    const auto parts = text::split(s.substr(i + 1, close - i - 1), ',');
    if (parts.size() != 2) throw ParseError(no, "link interval must have two bounds");
    Interval iv{text::scalar(parts[0], no), std::nullopt};
    if (text::trim(parts[1]) != "inf") iv.end = text::scalar(parts[1], no);
    out.push_back(iv);
    i = close + 1;
  }
  if (out.empty()) throw ParseError(no, "empty link schedule (write 'never' for a link that is always down)");
  return out;
}

std::string format_intervals(const LinkSchedule& sched) {
  if (sched.empty()) return "never";
  std::string out;
  for (const Interval& iv : sched.intervals()) {
    if (!out.empty()) out += ' ';
    out += "[" + iv.start.str() + "," + (iv.end ? iv.end->str() : "inf") + ")";
  }
  return out;
}

struct KeyValue {
  int no;
  std::string_view key;
  std::string_view value;
};

}  // namespace

Scenario parse_scenario(std::string_view input, const Arithmetic& arithmetic) {
  std::map<std::string_view, std::vector<KeyValue>> sections;
  std::map<std::string_view, int> section_line;
  std::string_view current;
  for (const auto& l : text::lines(input)) {
    if (l.body.front() == '[') {
      if (l.body.back() != ']') throw ParseError(l.no, "malformed section header");
      current = text::trim(l.body.substr(1, l.body.size() - 2));
      if (!kSections.contains(current)) throw ParseError(l.no, "unknown section [" + std::string(current) + "]");
      if (!section_line.emplace(current, l.no).second)
        throw ParseError(l.no, "duplicate section [" + std::string(current) + "]");
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError(l.no, "key outside of any section");
    const auto eq = l.body.find('=');
    if (eq == std::string_view::npos) throw ParseError(l.no, "expected 'key = value'");
    sections[current].push_back({l.no, text::trim(l.body.substr(0, eq)), text::trim(l.body.substr(eq + 1))});
  }

  // Simple sections: unique keys from a fixed set.
  auto simple = [&](std::string_view name, std::set<std::string_view> allowed) {
    std::map<std::string_view, KeyValue> out;
    for (const KeyValue& kv : sections[name]) {
      if (!allowed.contains(kv.key) && !(name == "inaccuracy" && kv.key.starts_with("error.")))
        throw ParseError(kv.no, "unknown key '" + std::string(kv.key) + "' in [" + std::string(name) + "]");
      if (!out.emplace(kv.key, kv).second) throw ParseError(kv.no, "duplicate key '" + std::string(kv.key) + "'");
    }
    return out;
  };

  Scenario sc;
  const auto params = simple("params", {"v", "v_adv", "nd_range", "delta_relay", "msg_duration_default"});
  auto get = [](const std::map<std::string_view, KeyValue>& m, std::string_view key) -> std::optional<Scalar> {
    auto it = m.find(key);
    if (it == m.end()) return std::nullopt;
    return text::scalar(it->second.value, it->second.no);
  };
  sc.params.v = get(params, "v").value_or(Scalar(1));
  sc.params.v_adv = get(params, "v_adv").value_or(sc.params.v);
  sc.params.nd_range = get(params, "nd_range").value_or(Scalar(1));
  sc.params.msg_duration_default = get(params, "msg_duration_default").value_or(Scalar(1));
  const auto dr_params = get(params, "delta_relay");

  const auto adversary = simple("adversary", {"name", "delta_relay"});
  const auto dr_adv = get(adversary, "delta_relay");
  if (dr_params && dr_adv && *dr_params != *dr_adv)
    throw ParseError(adversary.at("delta_relay").no, "delta_relay differs from the [params] value");
  sc.params.delta_relay = dr_params.value_or(dr_adv.value_or(Scalar(0)));
  try {
    sc.params.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(section_line.contains("params") ? section_line["params"] : 0, e.what());
  }
  if (auto it = adversary.find("name"); it != adversary.end()) {
    try {
      sc.adversary.kind = parse_adversary_kind(it->second.value);
    } catch (const ParseError& e) {
      throw ParseError(it->second.no, e.what());
    }
  }
  sc.adversary.delta_relay = sc.params.delta_relay;

  if (sections.contains("inaccuracy")) {
    const auto inacc = simple("inaccuracy", {"delta", "tau"});
    InaccuracyParams ip;
    ip.delta = get(inacc, "delta").value_or(Scalar(0));
    ip.tau = get(inacc, "tau").value_or(Scalar(0));
    for (const auto& [key, kv] : inacc) {
      if (!key.starts_with("error.")) continue;
      const auto vals = text::split_ws(kv.value);
      if (vals.size() != 2) throw ParseError(kv.no, "error entries need '<clock> <range>'");
      ip.errors[text::node(key.substr(6), kv.no)] = {text::scalar(vals[0], kv.no), text::scalar(vals[1], kv.no)};
    }
    try {
      ip.validate();
    } catch (const InvalidArgument& e) {
      throw ParseError(section_line["inaccuracy"], e.what());
    }
    sc.inaccuracy = ip;
  }

  const auto protocol = simple("protocol", {"name"});
  if (auto it = protocol.find("name"); it != protocol.end()) {
    try {
      sc.protocol.kind = parse_protocol_kind(it->second.value);
    } catch (const ParseError& e) {
      throw ParseError(it->second.no, e.what());
    }
  }
  if (sc.protocol.kind == ProtocolKind::pgt_approx) {
    if (!sc.inaccuracy)
      throw ParseError(section_line.contains("protocol") ? section_line["protocol"] : 0,
                       "pgt-approx needs an [inaccuracy] section with delta and tau");
    sc.protocol.inacc = sc.inaccuracy;
  }

  std::vector<NodeSpec> nodes;
  std::set<NodeId> declared;
  for (const KeyValue& kv : sections["nodes"]) {
    const NodeId id = text::node(kv.key, kv.no);
    const auto vals = text::split_ws(kv.value);
    if (vals.size() != 3) throw ParseError(kv.no, "node entries need '<correct|adversarial> <x> <y>'");
    NodeType type;
    if (vals[0] == "correct")
      type = NodeType::correct;
    else if (vals[0] == "adversarial")
      type = NodeType::adversarial;
    else
      throw ParseError(kv.no, "node type must be correct or adversarial");
    if (!declared.insert(id).second) throw ParseError(kv.no, "duplicate node " + id.str());
    nodes.push_back({id, {text::scalar(vals[1], kv.no), text::scalar(vals[2], kv.no)}, type});
  }

  LinkMap links;
  for (const KeyValue& kv : sections["links"]) {
    const auto ends = text::split_ws(kv.key);
    if (ends.size() != 3 || (ends[1] != "->" && ends[1] != "<->"))
      throw ParseError(kv.no, "link entries look like 'A -> B = ...' or 'A <-> B = ...'");
    const NodeId from = text::node(ends[0], kv.no);
    const NodeId to = text::node(ends[2], kv.no);
    for (const NodeId& n : {from, to})
      if (!declared.contains(n)) throw ParseError(kv.no, "link mentions undeclared node " + n.str());
    LinkSchedule sched;
    try {
      sched = LinkSchedule(parse_intervals(kv.value, kv.no));
    } catch (const InvalidArgument& e) {
      throw ParseError(kv.no, e.what());
    }
    std::vector<std::pair<NodeId, NodeId>> pairs{{from, to}};
    if (ends[1] == "<->") pairs.emplace_back(to, from);
    for (const auto& p : pairs)
      if (!links.emplace(p, sched).second)
        throw ParseError(kv.no, "link " + p.first.str() + " -> " + p.second.str() + " given twice");
  }
  try {
    sc.setting = Setting(std::move(nodes), std::move(links), arithmetic);
  } catch (const Error& e) {
    throw ParseError(section_line.contains("nodes") ? section_line["nodes"] : 0, e.what());
  }

  const auto sim = simple("sim", {"horizon"});
  sc.horizon = get(sim, "horizon");
  if (sc.horizon && sc.horizon->sign() <= 0) throw ParseError(sim.at("horizon").no, "horizon must be > 0");

  const auto attack = simple("attack", {"d_ab", "distance", "variant"});
  sc.attack.d_ab = get(attack, "d_ab");
  sc.attack.distance = get(attack, "distance");
  if (auto it = attack.find("variant"); it != attack.end()) {
    try {
      sc.attack.variant = parse_attack_variant(it->second.value);
    } catch (const ParseError& e) {
      throw ParseError(it->second.no, e.what());
    }
  }
  return sc;
}

std::string write_scenario(const Scenario& sc) {
  std::ostringstream os;
  const SystemParams& p = sc.params;
  os << "[params]\n"
     << "v = " << p.v << "\nv_adv = " << p.v_adv << "\nnd_range = " << p.nd_range << "\ndelta_relay = "
     << p.delta_relay << "\nmsg_duration_default = " << p.msg_duration_default << "\n\n";
  os << "[protocol]\nname = " << to_string(sc.protocol.kind) << "\n\n";
  os << "[adversary]\nname = " << to_string(sc.adversary.kind) << "\n\n";
  if (sc.inaccuracy) {
    os << "[inaccuracy]\ndelta = " << sc.inaccuracy->delta << "\ntau = " << sc.inaccuracy->tau << '\n';
    for (const auto& [node, err] : sc.inaccuracy->errors)
      os << "error." << node.str() << " = " << err.clock << ' ' << err.range << '\n';
    os << '\n';
  }
  os << "[nodes]\n";
  for (const NodeSpec& n : sc.setting.nodes())
    os << n.id.str() << " = " << to_string(n.type) << ' ' << n.loc.x << ' ' << n.loc.y << '\n';
  os << "\n[links]\n";
  for (const auto& [pair, sched] : sc.setting.links())
    os << pair.first.str() << " -> " << pair.second.str() << " = " << format_intervals(sched) << '\n';
  if (sc.horizon) os << "\n[sim]\nhorizon = " << *sc.horizon << '\n';
  if (!sc.attack.empty()) {
    os << "\n[attack]\n";
    if (sc.attack.d_ab) os << "d_ab = " << *sc.attack.d_ab << '\n';
    if (sc.attack.distance) os << "distance = " << *sc.attack.distance << '\n';
    if (sc.attack.variant) os << "variant = " << to_string(*sc.attack.variant) << '\n';
  }
  return os.str();
}

}  // namespace snd
