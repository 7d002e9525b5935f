#include <fstream>
#include <sstream>

#include "snd/errors.hpp"
#include "snd/io.hpp"
#include "text_util.hpp"

namespace snd {

namespace text {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto k = s.find(sep, pos);
    out.push_back(s.substr(pos, k == std::string_view::npos ? k : k - pos));
    if (k == std::string_view::npos) return out;
    pos = k + 1;
  }
}

std::vector<Line> lines(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++no;
    const auto hash = raw.find('#');
    std::string_view body = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (!body.empty()) out.push_back({no, body});
  }
  return out;
}

Scalar scalar(std::string_view s, int line) {
  try {
    return Scalar::parse(trim(s));
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

Angle angle(std::string_view s, bool width, int line) {
  s = trim(s);
  if (!s.ends_with("pi")) throw ParseError(line, "angle must be written as <rational>pi: '" + std::string(s) + "'");
  const Scalar q = scalar(s.substr(0, s.size() - 2), line);
  try {
    return width ? Angle::width(q) : Angle::direction(q);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
}

NodeId node(std::string_view s, int line) {
  s = trim(s);
  if (!valid_identifier(s)) throw ParseError(line, "invalid node id '" + std::string(s) + "'");
  return NodeId(std::string(s));
}

}  // namespace text

std::string format_message(const Message& m) { return m.str(); }

Message parse_message(std::string_view s, const Scalar& duration) {
  s = text::trim(s);
  const auto open = s.find('(');
  if (open == std::string_view::npos || !s.ends_with(")")) throw ParseError("malformed message '" + std::string(s) + "'");
  const std::string_view head = s.substr(0, open);
  const std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  try {
    if (head == "opaque") return Message::opaque(std::string(inner), duration);
    if (head == "auth") {
      const auto args = text::split(inner, ',');
      if (args.size() == 2) return Message::beacon_t(text::node(args[0], 0), text::scalar(args[1], 0), duration);
      if (args.size() == 4)
        return Message::beacon_tl(text::node(args[0], 0), text::scalar(args[1], 0),
                                  Point{text::scalar(args[2], 0), text::scalar(args[3], 0)}, duration);
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("malformed message '" + std::string(s) + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace snd
