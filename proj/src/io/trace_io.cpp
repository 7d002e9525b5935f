#include <map>
#include <sstream>

#include "snd/errors.hpp"
#include "snd/io.hpp"
#include "text_util.hpp"

namespace snd {

namespace {

constexpr std::string_view kTraceHeader = "# sndcheck trace v1";

std::string msg_fields(const Message& m) { return "msg=" + format_message(m) + " len=" + m.duration().str(); }

}  // namespace

std::string format_event(const Event& e) {
  std::ostringstream os;
  os << to_string(e.kind()) << ' ' << e.actor().str() << " @" << e.start().str();
  if (const auto* d = e.get<Dcast>())
    os << " alpha=" << d->direction.str() << " beta=" << d->width.str();
  else if (const auto* r = e.get<Receive>())
    os << " from=" << r->sender.str();
  else if (const auto* n = e.get<Neighbor>())
    os << " node=" << n->declared.str() << " at=" << n->declared_time.str();
  if (const Message* m = e.message()) os << ' ' << msg_fields(*m);
  return os.str();
}

Event parse_event(std::string_view line, int no) {
  const auto words = text::split_ws(line);
  if (words.size() < 3) throw ParseError(no, "expected '<kind> <actor> @<time> ...'");
  const std::string_view kind = words[0];
  const NodeId actor = text::node(words[1], no);
  if (!words[2].starts_with("@")) throw ParseError(no, "start time must be written as @<time>");
  const Scalar start = text::scalar(words[2].substr(1), no);

  std::map<std::string_view, std::string_view> kv;
  for (std::size_t i = 3; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string_view::npos) throw ParseError(no, "expected key=value, got '" + std::string(words[i]) + "'");
    if (!kv.emplace(words[i].substr(0, eq), words[i].substr(eq + 1)).second)
      throw ParseError(no, "duplicate field '" + std::string(words[i].substr(0, eq)) + "'");
  }
  auto take = [&](std::string_view key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(no, "missing field '" + std::string(key) + "'");
    const std::string_view v = it->second;
    kv.erase(it);
    return v;
  };
  auto message = [&] {
    const std::string_view m = take("msg");
    const Scalar len = text::scalar(take("len"), no);
    try {
      return parse_message(m, len);
    } catch (const ParseError& e) {
      throw ParseError(no, e.what());
    }
  };

  std::optional<Event> ev;
  try {
    if (kind == "bcast") {
      ev = Event(Bcast{actor, start, message()});
    } else if (kind == "dcast") {
      const Angle a = text::angle(take("alpha"), false, no);
      const Angle b = text::angle(take("beta"), true, no);
      ev = Event(Dcast{actor, start, a, b, message()});
    } else if (kind == "receive") {
      const NodeId from = text::node(take("from"), no);
      ev = Event(Receive{actor, start, from, message()});
    } else if (kind == "neighbor") {
      const NodeId node = text::node(take("node"), no);
      ev = Event(Neighbor{actor, start, node, text::scalar(take("at"), no)});
    } else {
      throw ParseError(no, "unknown event kind '" + std::string(kind) + "'");
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(no, e.what());
  }
  if (!kv.empty()) throw ParseError(no, "unexpected field '" + std::string(kv.begin()->first) + "'");
  return *ev;
}

Trace parse_trace(std::string_view text) {
  std::vector<Event> events;
  for (const auto& l : text::lines(text)) events.push_back(parse_event(l.body, l.no));
  return Trace(std::move(events));
}

std::string write_trace(const Trace& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const Event& e : trace) {
    out += format_event(e);
    out += '\n';
  }
  return out;
}

}  // namespace snd
