#include <sstream>

#include "snd/analysis.hpp"
#include "snd/errors.hpp"

namespace snd {

std::vector<Scalar> Range::values() const {
  if (step.sign() <= 0) throw InvalidArgument("range step must be > 0");
  if (from > to) throw InvalidArgument("reversed range " + from.str() + ":" + to.str());
  std::vector<Scalar> out;
  for (Scalar x = from; x <= to; x += step) out.push_back(x);
  return out;
}

Range Range::parse(std::string_view text) {
  std::vector<Scalar> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    parts.push_back(Scalar::parse(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos)));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() == 1) return {parts[0], parts[0], Scalar(1)};
  if (parts.size() != 3) throw ParseError("range must be 'from:to:step' or a single value: " + std::string(text));
  return {parts[0], parts[1], parts[2]};
}

Scalar auto_distance(const SystemParams& params, const ProtocolChoice& protocol, AttackVariant variant) {
  if (flavor_of(protocol.kind) == ViewFlavor::tl) return params.nd_range / Scalar(2);
  const BoundaryReport r = compute_boundaries(params);
  const Scalar& limit = variant == AttackVariant::wormhole ? r.wormhole_max_dist : r.single_relay_max_dist;
  return limit.sign() > 0 ? limit / Scalar(2) : params.nd_range / Scalar(2);
}

namespace {

std::vector<Scalar> axis(const std::optional<std::vector<Scalar>>& values, const Scalar& fallback) {
  return values ? *values : std::vector<Scalar>{fallback};
}

SweepRow evaluate(SystemParams params, ProtocolChoice protocol, AttackVariant variant, const Scalar& ratio,
                  const std::optional<Scalar>& distance, const Scalar& delta, const Scalar& tau) {
  SweepRow row;
  params.v_adv = params.v * ratio;
  InaccuracyParams inacc = protocol.inacc.value_or(InaccuracyParams{});
  inacc.delta = delta;
  inacc.tau = tau;
  inacc.errors.clear();
  if (protocol.kind == ProtocolKind::pgt_approx) protocol.inacc = inacc;
  row.delta_relay = params.delta_relay;
  row.v_adv_ratio = ratio;
  row.delta = delta;
  row.tau = tau;
  row.distance = distance ? *distance : auto_distance(params, protocol, variant);
  row.report = compute_boundaries(params, inacc);
  row.closed_form_vulnerable = closed_form_vulnerable(params, protocol, variant, row.distance);
  try {
    plan_attack(default_attack_request(protocol, variant, row.distance, params), params);
    row.attack = true;
  } catch (const Error& e) {
    row.note = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  spec.base.validate();
  const InaccuracyParams inacc = spec.protocol.inacc.value_or(InaccuracyParams{});
  std::vector<std::optional<Scalar>> distances;
  if (spec.distance)
    distances.assign(spec.distance->begin(), spec.distance->end());
  else
    distances.push_back(std::nullopt);

  std::vector<SweepRow> rows;
  for (const Scalar& dr : axis(spec.delta_relay, spec.base.delta_relay))
    for (const Scalar& ratio : axis(spec.v_adv_ratio, spec.base.v_adv / spec.base.v))
      for (const auto& dist : distances)
        for (const Scalar& delta : axis(spec.delta, inacc.delta))
          for (const Scalar& tau : axis(spec.tau, inacc.tau)) {
            SystemParams p = spec.base;
            p.delta_relay = dr;
            rows.push_back(evaluate(p, spec.protocol, spec.variant, ratio, dist, delta, tau));
          }
  return rows;
}

std::string render_sweep_table(const std::vector<SweepRow>& rows) {
  constexpr int kDigits = 15;
  std::ostringstream os;
  const char* scalar_cols[] = {"delta_relay",  "v_adv_ratio",           "distance",          "delta",
                               "tau",          "pt_threshold",          "single_relay_max_dist",
                               "wormhole_max_dist", "pt_effective_range"};
  bool first = true;
  for (const char* c : scalar_cols) {
    os << (first ? "" : "\t") << c << '\t' << c << "_dec";
    first = false;
  }
  os << "\tpgt_vulnerable\tclosed_form_vulnerable\tattack\n";
  for (const SweepRow& r : rows) {
    const Scalar* vals[] = {&r.delta_relay,
                            &r.v_adv_ratio,
                            &r.distance,
                            &r.delta,
                            &r.tau,
                            &r.report.pt_threshold,
                            &r.report.single_relay_max_dist,
                            &r.report.wormhole_max_dist,
                            &r.report.pt_effective_range};
    first = true;
    for (const Scalar* v : vals) {
      os << (first ? "" : "\t") << v->str() << '\t' << v->decimal(kDigits);
      first = false;
    }
    os << '\t' << (r.report.pgt_vulnerable ? "true" : "false") << '\t'
       << (r.closed_form_vulnerable ? "true" : "false") << '\t' << (r.attack ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace snd
