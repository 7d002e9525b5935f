#pragma once

#include <json.hpp>
#include <string>

#include "snd/attack.hpp"
#include "snd/verdict.hpp"

namespace snd::cli {

using nlohmann::ordered_json;

ordered_json to_json(const Verdict& v);
ordered_json to_json(const Inequality& q);
ordered_json to_json(const AttackDeltas& d);

/// Human-readable rendering of a report: one "key: value" per line, nested
/// objects indented, array items prefixed with "- ".
std::string render_text(const ordered_json& report);
/// Rendering selected by --format.
std::string render(const ordered_json& report, bool structured);

}  // namespace snd::cli
