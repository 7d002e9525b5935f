#pragma once

#include <string>
#include <vector>

#include "snd/event.hpp"

namespace snd {

struct Violation {
  std::string rule;
  std::vector<Event> events;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a feasibility or property check. ok() holds exactly when no
/// violation was recorded.
class Verdict {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string rule, std::vector<Event> events, std::string detail);
  void merge(const Verdict& other);
  /// Number of violations carrying `rule`.
  std::size_t count(std::string_view rule) const;

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  std::vector<Violation> violations_;
};

}  // namespace snd
