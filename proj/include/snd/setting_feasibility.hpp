#pragma once

#include <vector>

#include "snd/event.hpp"
#include "snd/setting.hpp"
#include "snd/verdict.hpp"

namespace snd {

/// Checks that sends and receptions in `trace` are consistent with the physics
/// of `setting`: every reception has exactly one matching transmission over an
/// up link, and every transmission is received by everyone it can reach.
/// Deterministic and independent of event storage order.
Verdict check_setting_feasible(const Trace& trace, const Setting& setting, const SystemParams& params);

/// The Receive events a single Bcast or Dcast induces in `setting`, including
/// the sender's own reception. Empty for Receive and Neighbor events.
std::vector<Event> induced_receptions(const Event& send, const Setting& setting, const SystemParams& params);

/// `trace` plus every reception its transmissions induce.
Trace with_receptions(const Trace& trace, const Setting& setting, const SystemParams& params);

/// Tolerance used for time matching in `setting`: 0 in exact mode.
Scalar time_tolerance(const Setting& setting);

}  // namespace snd
