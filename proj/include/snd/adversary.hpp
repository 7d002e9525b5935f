#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snd/event.hpp"
#include "snd/setting.hpp"
#include "snd/verdict.hpp"

namespace snd {

enum class AdversaryKind {
  relay,             // relays only, with directional sends
  relay_bcast_only,  // relays only, with broadcasts
  relay_no_channel,  // relays only what the same node heard
  dolev_yao_t,       // relays plus beacons authored by adversarial identities
  dolev_yao_gt,
};

/// "relay" | "relay-bcast" | "relay-local" | "dy-t" | "dy-gt". Throws ParseError.
AdversaryKind parse_adversary_kind(std::string_view name);
std::string_view to_string(AdversaryKind kind);

struct AdversaryModel {
  AdversaryKind kind = AdversaryKind::relay;
  Scalar delta_relay{0};
};

/// Checks the capabilities of adversarial nodes in `trace`. A relayed send of m
/// at t needs some adversarial Receive of m at t - d with d >= delta_relay plus
/// the adversary-channel delay between the two nodes (zero when it is the same node).
///
/// Throws ModelMessageMismatch when a Dolev-Yao model sees an adversarial
/// send of a non-beacon message.
Verdict check_adversary_feasible(const Trace& trace, const Setting& setting, const SystemParams& params,
                                 const AdversaryModel& model);

/// Replaces every adversarial Bcast by the equivalent omnidirectional Dcast
/// (direction 0, width 2pi). Other events are kept as they are.
Trace rename_bcast_to_dcast(const Trace& trace, const Setting& setting);

struct CorpusEntry {
  std::string name;
  Setting setting;
  SystemParams params;
  Trace trace;
};

struct OrderReport {
  std::size_t total = 0;
  /// Entries feasible under the weaker model (the inclusion premise).
  std::size_t premise = 0;
  /// Entries skipped because a Dolev-Yao model does not cover their messages.
  std::size_t outside_message_space = 0;
  std::vector<std::string> counterexamples;

  bool holds() const { return counterexamples.empty(); }
};

/// Tests trace-set inclusion of `weaker` in `stronger` on a corpus, using each
/// entry's own delta_relay. With `use_renaming`, traces are renamed before the
/// check under `stronger`.
OrderReport weaker_on_corpus(AdversaryKind weaker, AdversaryKind stronger, const std::vector<CorpusEntry>& corpus,
                             bool use_renaming);

}  // namespace snd
