// Closed-form boundaries and sweeps against the synthesizer.

#include <sstream>

#include "builders.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "snd/analysis.hpp"
#include "snd/errors.hpp"

using namespace snd;
using snd::testgen::make_params;

namespace {

const ProtocolChoice kPt{ProtocolKind::pt, std::nullopt};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("boundaries at the headline parameters") {
  const BoundaryReport r = compute_boundaries(testgen::headline_params());
  CHECK(r.pt_threshold == Scalar(1, 3000000));
  CHECK(r.pt_threshold.to_double() == doctest::Approx(333.33e-9));
  CHECK(r.single_relay_max_dist == Scalar(88));
  CHECK(r.wormhole_max_dist == Scalar(88));
  CHECK(r.pt_effective_range == Scalar(100));
  CHECK_FALSE(r.pgt_vulnerable);

  SystemParams city = testgen::headline_params();
  city.nd_range = 50000;
  CHECK(compute_boundaries(city).pt_threshold.to_double() == doctest::Approx(166.67e-6).epsilon(0.001));

  SystemParams edge = testgen::headline_params(Scalar(1, 3000000));
  CHECK(compute_boundaries(edge).single_relay_max_dist == Scalar(0));
  edge.delta_relay = Scalar(1, 1000000);
  CHECK(compute_boundaries(edge).single_relay_max_dist == Scalar(0));  // clamped

  InaccuracyParams in;
  in.delta = Scalar(1, 100000000);
  in.tau = Scalar(1, 100000000);
  const BoundaryReport approx = compute_boundaries(testgen::headline_params(Scalar(3, 100000000)), in);
  CHECK(approx.pt_effective_range == Scalar(103));
  CHECK(approx.pgt_vulnerable);
  CHECK_FALSE(compute_boundaries(testgen::headline_params(Scalar(4, 100000000)), in).pgt_vulnerable);
}

TEST_CASE("boundary monotonicity and amplification") {
  testgen::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const Scalar r(rng.uniform(1, 500));
    const Scalar d1(rng.uniform(0, 600), rng.uniform(1, 5));
    const Scalar d2 = d1 + Scalar(rng.uniform(0, 50), 3);
    const Scalar ratio(rng.uniform(1, 12));
    const SystemParams a = make_params(1, r, d1, 1, ratio);
    const SystemParams b = make_params(1, r, d2, 1, ratio);
    const SystemParams wider = make_params(1, r + Scalar(7), d1, 1, ratio);
    const BoundaryReport ra = compute_boundaries(a), rb = compute_boundaries(b);
    CHECK(rb.single_relay_max_dist <= ra.single_relay_max_dist);
    CHECK(compute_boundaries(wider).single_relay_max_dist >= ra.single_relay_max_dist);
    CHECK(ra.wormhole_max_dist >= ra.single_relay_max_dist);
    CHECK(ra.single_relay_max_dist.sign() >= 0);
    if (ra.single_relay_max_dist.sign() > 0) CHECK(ra.wormhole_max_dist / ra.single_relay_max_dist == ratio);
  }
}

TEST_CASE("ranges") {
  CHECK(Range::parse("0:1:1/4").values().size() == 5);
  CHECK(Range::parse("3/2").values() == std::vector<Scalar>{Scalar(3, 2)});
  CHECK(Range::parse("0:1:2/3").values().back() == Scalar(2, 3));
  CHECK_THROWS_AS(Range::parse("1:0:1").values(), InvalidArgument);
  CHECK_THROWS_AS(Range::parse("0:1:0").values(), InvalidArgument);
  CHECK_THROWS_AS(Range::parse("0:1"), ParseError);
  CHECK_THROWS_AS(Range::parse("a:b:c"), ParseError);
}

TEST_CASE("delta_relay sweep flips at R/v") {
  SweepSpec spec;
  spec.base = testgen::headline_params(0);
  spec.protocol = kPt;
  const Scalar step(1, 100000000);  // 10 ns
  spec.delta_relay = Range{Scalar(0), Scalar(40) * step, step}.values();
  const auto rows = sweep(spec);
  REQUIRE(rows.size() == 41);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool below = rows[i].delta_relay < Scalar(1, 3000000);
    CHECK(rows[i].attack == below);
    CHECK(rows[i].closed_form_vulnerable == rows[i].attack);
    if (i > 0) CHECK(rows[i].report.single_relay_max_dist <= rows[i - 1].report.single_relay_max_dist);
  }
  CHECK(rows[33].attack);
  CHECK_FALSE(rows[34].attack);
  // Linear decrease: equal differences while positive.
  CHECK(rows[0].report.single_relay_max_dist - rows[1].report.single_relay_max_dist ==
        rows[10].report.single_relay_max_dist - rows[11].report.single_relay_max_dist);
  const auto table = lines(render_sweep_table(rows));
  CHECK(table.size() == 42);
  CHECK(table[0].rfind("delta_relay\tdelta_relay_dec\t", 0) == 0);
}

TEST_CASE("ratio sweep scales the wormhole distance") {
  SweepSpec spec;
  spec.base = testgen::headline_params();
  spec.protocol = kPt;
  spec.variant = AttackVariant::wormhole;
  spec.v_adv_ratio = std::vector<Scalar>{1, 2, 3, 10};
  const auto rows = sweep(spec);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.report.wormhole_max_dist == Scalar(88) * r.v_adv_ratio);
    CHECK(r.attack);
  }
}

TEST_CASE("empty and single-point sweeps") {
  SweepSpec spec;
  spec.base = testgen::headline_params();
  spec.protocol = kPt;
  spec.distance = std::vector<Scalar>{};
  CHECK(sweep(spec).empty());
  CHECK(lines(render_sweep_table({})).size() == 1);
  spec.distance = std::vector<Scalar>{Scalar(10)};
  CHECK(sweep(spec).size() == 1);
  spec.distance.reset();
  CHECK(sweep(spec).front().distance == Scalar(44));
}

TEST_CASE("closed form agrees with synthesis on random rows") {
  testgen::Rng rng(52);
  int attacks = 0, rows_seen = 0;
  for (int i = 0; i < 120; ++i) {
    const int kind = rng.uniform(0, 2);
    SweepSpec spec;
    spec.base = make_params(1, 100, 0, 1);
    spec.variant = rng.chance(0.5) ? AttackVariant::wormhole : AttackVariant::single_relay;
    spec.v_adv_ratio = std::vector<Scalar>{Scalar(rng.uniform(1, 4))};
    spec.delta_relay = std::vector<Scalar>{Scalar(rng.uniform(0, 60))};
    spec.distance = std::vector<Scalar>{Scalar(rng.uniform(1, 200))};
    if (kind == 0) {
      spec.protocol = kPt;
    } else if (kind == 1) {
      spec.protocol = {ProtocolKind::pgt, std::nullopt};
    } else {
      spec.protocol = {ProtocolKind::pgt_approx, InaccuracyParams{}};
      spec.delta = std::vector<Scalar>{Scalar(rng.uniform(0, 40))};
      spec.tau = std::vector<Scalar>{Scalar(rng.uniform(0, 40), 3)};
    }
    for (const SweepRow& r : sweep(spec)) {
      ++rows_seen;
      attacks += r.attack;
      // The constructive acceptance window is inclusive at 2(delta + tau); the closed form is strict.
      const bool at_edge = kind == 2 && spec.variant == AttackVariant::single_relay &&
                           r.delta_relay == Scalar(2) * (r.delta + r.tau);
      if (!at_edge) CHECK_MESSAGE(r.attack == r.closed_form_vulnerable, r.note);
    }
  }
  CHECK(rows_seen == 120);
  CHECK(attacks > 25);
  CHECK(attacks < rows_seen - 25);
}
