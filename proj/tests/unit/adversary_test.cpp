// Adversary capability checkers, the renaming and corpus ordering.

#include "builders.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "snd/adversary.hpp"
#include "snd/errors.hpp"
#include "snd/setting_feasibility.hpp"

using namespace snd;
using snd::testgen::connected;
using snd::testgen::make_params;

namespace {

const std::vector<AdversaryKind> kRelayKinds{AdversaryKind::relay, AdversaryKind::relay_bcast_only,
                                             AdversaryKind::relay_no_channel};
const std::vector<AdversaryKind> kAllKinds{AdversaryKind::relay, AdversaryKind::relay_bcast_only,
                                           AdversaryKind::relay_no_channel, AdversaryKind::dolev_yao_t,
                                           AdversaryKind::dolev_yao_gt};

Verdict check(const Trace& t, const Setting& s, const SystemParams& p, AdversaryKind k) {
  return check_adversary_feasible(t, s, p, {k, p.delta_relay});
}

// A at 0, C at 4 and D at 6 (both adversarial), B at 10; v = 1, v_adv = 2.
struct Line {
  SystemParams p = make_params(1, 20, 1, 1, Scalar(2));
  Setting s = connected({{"A", 0, 0}, {"C", 4, 0, true}, {"D", 6, 0, true}, {"B", 10, 0}});
  Message m = Message::beacon_t("B"_node, 0, 1);
  Angle west = Angle::direction(Scalar(1, 2));
  Angle half = Angle::width(1);

  Trace heard() const { return with_receptions(Trace({Bcast{"B"_node, 0, m}}), s, p); }
  Trace with(Event e) const {
    Trace t = heard();
    t.insert(with_receptions(Trace({std::move(e)}), s, p));
    return t;
  }
};

}  // namespace

TEST_CASE("parse adversary names") {
  CHECK(parse_adversary_kind("relay-local") == AdversaryKind::relay_no_channel);
  CHECK(to_string(AdversaryKind::dolev_yao_gt) == "dy-gt");
  for (AdversaryKind k : kAllKinds) CHECK(parse_adversary_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_adversary_kind("mitm"), ParseError);
}

TEST_CASE("silent adversaries are feasible under every model") {
  const Line l;
  for (AdversaryKind k : kAllKinds) CHECK(check(l.heard(), l.s, l.p, k).ok());
}

TEST_CASE("relay timing bound") {
  const Line l;
  // D hears B's beacon at 4; C hears it at 6.
  // Same-node relay from D: needs start >= 4 + 1.
  CHECK(check(l.with(Dcast{"D"_node, 5, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay).ok());
  CHECK(check(l.with(Dcast{"D"_node, 5, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay_no_channel).ok());
  CHECK_FALSE(check(l.with(Dcast{"D"_node, Scalar(49, 10), l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay).ok());
  // Via the channel from D to C: 4 + 1 + 2/2 = 6, though C hears the original at 6 too.
  CHECK(check(l.with(Dcast{"C"_node, 6, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay).ok());
  CHECK_FALSE(check(l.with(Dcast{"C"_node, 6, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay_no_channel).ok());
  CHECK(check(l.with(Dcast{"C"_node, 7, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay_no_channel).ok());
  CHECK_FALSE(
      check(l.with(Dcast{"C"_node, Scalar(59, 10), l.west, l.half, l.m}), l.s, l.p, AdversaryKind::relay).ok());
}

TEST_CASE("send primitive restrictions") {
  const Line l;
  const Trace bcast = l.with(Bcast{"D"_node, 5, l.m});
  CHECK(check(bcast, l.s, l.p, AdversaryKind::relay).count("adversary.bcast-forbidden") == 1);
  CHECK(check(bcast, l.s, l.p, AdversaryKind::relay_bcast_only).ok());
  const Trace dcast = l.with(Dcast{"D"_node, 5, l.west, l.half, l.m});
  CHECK(check(dcast, l.s, l.p, AdversaryKind::relay_bcast_only).count("adversary.dcast-forbidden") == 1);
  CHECK(check(bcast, l.s, l.p, AdversaryKind::dolev_yao_t).count("adversary.bcast-forbidden") == 1);
}

TEST_CASE("nothing to relay") {
  const Line l;
  const Message never = Message::opaque("never", 1);
  const Trace t = l.with(Dcast{"C"_node, 3, l.west, l.half, never});
  for (AdversaryKind k : {AdversaryKind::relay, AdversaryKind::relay_no_channel})
    CHECK(check(t, l.s, l.p, k).count("adversary.unjustified-send") == 1);
  CHECK(check(l.with(Bcast{"C"_node, 3, never}), l.s, l.p, AdversaryKind::relay_bcast_only)
            .count("adversary.unjustified-send") == 1);
  CHECK_THROWS_AS(check(t, l.s, l.p, AdversaryKind::dolev_yao_t), ModelMessageMismatch);
}

TEST_CASE("Dolev-Yao authorship") {
  const Line l;
  const Trace own = l.with(Dcast{"C"_node, 1, l.west, l.half, Message::beacon_t("D"_node, 7, 1)});
  CHECK(check(own, l.s, l.p, AdversaryKind::dolev_yao_t).ok());
  CHECK_FALSE(check(own, l.s, l.p, AdversaryKind::relay).ok());
  const Trace forged = l.with(Dcast{"C"_node, 1, l.west, l.half, Message::beacon_t("A"_node, 1, 1)});
  CHECK(check(forged, l.s, l.p, AdversaryKind::dolev_yao_t).count("adversary.unjustified-send") == 1);
  // Relaying a correct node's beacon follows the relay bound.
  CHECK(check(l.with(Dcast{"D"_node, 5, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::dolev_yao_t).ok());
  CHECK_FALSE(check(l.with(Dcast{"D"_node, 4, l.west, l.half, l.m}), l.s, l.p, AdversaryKind::dolev_yao_t).ok());
  const Message tl = Message::beacon_tl("C"_node, 0, {Scalar(1), Scalar(0)}, 1);
  CHECK(check(l.with(Dcast{"C"_node, 1, l.west, l.half, tl}), l.s, l.p, AdversaryKind::dolev_yao_gt).ok());
}

TEST_CASE("renaming") {
  const Line l;
  const Trace bcast = l.with(Bcast{"D"_node, 5, l.m});
  const Trace renamed = rename_bcast_to_dcast(bcast, l.s);
  CHECK(renamed.contains(Dcast{"D"_node, 5, Angle::direction(0), Angle::width(2), l.m}));
  CHECK_FALSE(renamed.contains(Bcast{"D"_node, 5, l.m}));
  CHECK(renamed.contains(Bcast{"B"_node, 0, l.m}));  // correct nodes untouched
  CHECK(rename_bcast_to_dcast(l.heard(), l.s) == l.heard());
  CHECK(check_setting_feasible(renamed, l.s, l.p) == check_setting_feasible(bcast, l.s, l.p));
  CHECK(check(renamed, l.s, l.p, AdversaryKind::relay).ok());
}

TEST_CASE("renaming preserves setting verdicts and correct views on generated runs") {
  testgen::Rng rng(31);
  const SystemParams p = make_params(1, 10, 2);
  for (int i = 0; i < 80; ++i) {
    const Setting s = testgen::random_setting(rng, p);
    testgen::RunConfig cfg;
    cfg.bcast_relays = true;
    const Trace t = testgen::random_run(rng, s, p, cfg);
    const Trace r = rename_bcast_to_dcast(t, s);
    CHECK(check_setting_feasible(r, s, p) == check_setting_feasible(t, s, p));
    for (const NodeId& a : s.correct_nodes())
      CHECK(project_local(r, a, kForever, ViewFlavor::t, &s) == project_local(t, a, kForever, ViewFlavor::t, &s));
  }
}

TEST_CASE("feasibility is monotone in delta_relay") {
  testgen::Rng rng(32);
  SystemParams p = make_params(1, 10, 3, 1, Scalar(2));
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    const Setting s = testgen::random_setting(rng, p);
    const Trace t = testgen::random_run(rng, s, p, {ProtocolKind::pt, 0.2, 2});
    for (AdversaryKind k : kAllKinds) {
      if (!check(t, s, p, k).ok()) continue;
      ++checked;
      for (long smaller : {0L, 1L, 2L}) CHECK(check_adversary_feasible(t, s, p, {k, Scalar(smaller)}).ok());
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("ordering on a generated corpus") {
  const auto corpus = testgen::to_entries(testgen::golden_corpus());
  REQUIRE(corpus.size() >= 30);
  const OrderReport local = weaker_on_corpus(AdversaryKind::relay_no_channel, AdversaryKind::relay, corpus, false);
  CHECK(local.holds());
  CHECK(local.premise >= 5);
  const OrderReport dy = weaker_on_corpus(AdversaryKind::relay, AdversaryKind::dolev_yao_t, corpus, false);
  CHECK(dy.holds());
  const OrderReport bc = weaker_on_corpus(AdversaryKind::relay_bcast_only, AdversaryKind::relay, corpus, true);
  CHECK(bc.holds());
  CHECK(bc.premise >= 5);
  const OrderReport raw = weaker_on_corpus(AdversaryKind::relay_bcast_only, AdversaryKind::relay, corpus, false);
  CHECK_FALSE(raw.holds());
  const OrderReport back = weaker_on_corpus(AdversaryKind::dolev_yao_t, AdversaryKind::relay_no_channel, corpus, false);
  CHECK(std::find(back.counterexamples.begin(), back.counterexamples.end(), testgen::kSelfAuthoredEntry) !=
        back.counterexamples.end());
}
