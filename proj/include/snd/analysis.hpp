#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snd/attack.hpp"
#include "snd/protocols.hpp"
#include "snd/setting.hpp"

namespace snd {

struct BoundaryReport {
  Scalar pt_threshold;           // R/v
  Scalar single_relay_max_dist;  // max(0, R - v*delta_relay)
  Scalar wormhole_max_dist;      // (v_adv/v) * single_relay_max_dist
  Scalar pt_effective_range;     // R + v*delta
  bool pgt_vulnerable = false;   // delta_relay < 2(delta + tau)

  friend bool operator==(const BoundaryReport&, const BoundaryReport&) = default;
};

BoundaryReport compute_boundaries(const SystemParams& params, const InaccuracyParams& inacc = {});

/// Inclusive arithmetic progression from..to in steps of `step`.
struct Range {
  Scalar from;
  Scalar to;
  Scalar step;

  /// Throws InvalidArgument if step <= 0 or from > to.
  std::vector<Scalar> values() const;
  /// "from:to:step" or a single value. Throws ParseError.
  static Range parse(std::string_view text);
};

/// Swept axes. An absent axis stays at its base value; an axis given as an
/// empty list yields an empty table.
struct SweepSpec {
  SystemParams base;
  ProtocolChoice protocol;
  AttackVariant variant = AttackVariant::single_relay;
  std::optional<std::vector<Scalar>> delta_relay;
  std::optional<std::vector<Scalar>> v_adv_ratio;
  /// A-B distance of the attack placement. Absent: half the closed-form
  /// vulnerable distance when that is positive, R/2 otherwise.
  std::optional<std::vector<Scalar>> distance;
  std::optional<std::vector<Scalar>> delta;
  std::optional<std::vector<Scalar>> tau;
};

struct SweepRow {
  Scalar delta_relay;
  Scalar v_adv_ratio;
  Scalar distance;
  Scalar delta;
  Scalar tau;
  BoundaryReport report;
  bool closed_form_vulnerable = false;
  bool attack = false;
  std::string note;  // why synthesis failed, empty on success
};

/// Closed-form prediction of whether the canonical attack at `distance` works.
bool closed_form_vulnerable(const SystemParams& params, const ProtocolChoice& protocol, AttackVariant variant,
                            const Scalar& distance);

/// Default A-B distance for sweeps and the attack command: half the closed-form
/// vulnerable distance when that is positive, R/2 otherwise (and for TL protocols).
Scalar auto_distance(const SystemParams& params, const ProtocolChoice& protocol, AttackVariant variant);

/// Evaluates every point of the cartesian product of the axes, in a fixed
/// order (delta_relay outermost, then v_adv ratio, distance, delta, tau).
std::vector<SweepRow> sweep(const SweepSpec& spec);

/// Tab-separated table with a header row; every rational appears as "p/q" and
/// as a decimal column.
std::string render_sweep_table(const std::vector<SweepRow>& rows);

}  // namespace snd
