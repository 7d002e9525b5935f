#include "report.hpp"

#include <sstream>

#include "snd/io.hpp"

namespace snd::cli {

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["ok"] = v.ok();
  ordered_json list = ordered_json::array();
  for (const Violation& x : v.violations()) {
    ordered_json events = ordered_json::array();
    for (const Event& e : x.events) events.push_back(format_event(e));
    list.push_back({{"rule", x.rule}, {"detail", x.detail}, {"events", events}});
  }
  j["violations"] = list;
  return j;
}

ordered_json to_json(const Inequality& q) {
  return {{"name", q.name}, {"lhs", q.lhs.str()}, {"rhs", q.rhs.str()}, {"margin", q.margin().str()},
          {"holds", q.holds()}};
}

ordered_json to_json(const AttackDeltas& d) {
  ordered_json j{{"Delta", d.big_delta.str()}, {"delta1", d.d1.str()}, {"delta2", d.d2.str()},
                 {"delta3", d.d3.str()},       {"delta4", d.d4.str()}};
  if (d.channel_delay) j["channel_delay"] = d.channel_delay->str();
  return j;
}

namespace {

void emit(std::ostringstream& os, const ordered_json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  auto scalar = [](const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        emit(os, v, depth + 1);
      } else {
        os << pad << k << ": " << (v.is_structured() ? (v.is_array() ? "none" : "{}") : scalar(v)) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        emit(os, v, depth + 1);
      } else {
        os << pad << "- " << scalar(v) << '\n';
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  emit(os, report, 0);
  return os.str();
}

std::string render(const ordered_json& report, bool structured) {
  return structured ? report.dump(2) + "\n" : render_text(report);
}

}  // namespace snd::cli
