#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "snd/adversary.hpp"
#include "snd/attack.hpp"
#include "snd/event.hpp"
#include "snd/protocols.hpp"
#include "snd/setting.hpp"

namespace snd {

/// Optional [attack] section: inputs for attack synthesis.
struct AttackSection {
  std::optional<Scalar> d_ab;
  std::optional<Scalar> distance;
  std::optional<AttackVariant> variant;

  bool empty() const { return !d_ab && !distance && !variant; }
  friend bool operator==(const AttackSection&, const AttackSection&) = default;
};

struct Scenario {
  SystemParams params;
  ProtocolChoice protocol;
  AdversaryModel adversary;
  std::optional<InaccuracyParams> inaccuracy;
  Setting setting;
  std::optional<Scalar> horizon;
  AttackSection attack;

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.params == b.params && a.protocol.kind == b.protocol.kind && a.protocol.inacc == b.protocol.inacc &&
           a.adversary.kind == b.adversary.kind && a.adversary.delta_relay == b.adversary.delta_relay &&
           a.inaccuracy == b.inaccuracy && a.setting == b.setting && a.horizon == b.horizon && a.attack == b.attack;
  }
};

/// Parses the sectioned key-value scenario format. Throws ParseError (with the
/// offending line), or the model's validation errors for inconsistent content.
Scenario parse_scenario(std::string_view text, const Arithmetic& arithmetic = {});
/// Canonical rendering; parse_scenario(write_scenario(s)) == s.
std::string write_scenario(const Scenario& scenario);

/// One event per line after a header comment; blank lines and '#' comments are ignored.
Trace parse_trace(std::string_view text);
std::string write_trace(const Trace& trace);

std::string format_event(const Event& e);
Event parse_event(std::string_view line, int line_no = 0);
std::string format_message(const Message& m);
/// Parses "auth(B,0)", "auth(B,0,x,y)" or "opaque(tok)" with the given duration.
Message parse_message(std::string_view text, const Scalar& duration);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace snd
