#include "snd/verdict.hpp"

#include <algorithm>

namespace snd {

void Verdict::add(std::string rule, std::vector<Event> events, std::string detail) {
  violations_.push_back({std::move(rule), std::move(events), std::move(detail)});
}

void Verdict::merge(const Verdict& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

std::size_t Verdict::count(std::string_view rule) const {
  return static_cast<std::size_t>(
      std::count_if(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.rule == rule; }));
}

}  // namespace snd
