#pragma once

#include <string_view>
#include <vector>

#include "snd/geometry.hpp"
#include "snd/scalar.hpp"
#include "snd/setting.hpp"

namespace snd::text {

struct Line {
  int no;
  std::string_view body;  // comment stripped and trimmed
};

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
/// Non-empty lines with comments removed.
std::vector<Line> lines(std::string_view text);

Scalar scalar(std::string_view s, int line);
Angle angle(std::string_view s, bool width, int line);
NodeId node(std::string_view s, int line);

}  // namespace snd::text
