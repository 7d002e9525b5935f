#include "commands.hpp"

#include <algorithm>

#include "report.hpp"
#include "snd/analysis.hpp"
#include "snd/errors.hpp"
#include "snd/setting_feasibility.hpp"

namespace snd::cli {

namespace fs = std::filesystem;

namespace {

Scenario load_scenario(const Global& g, const fs::path& path) {
  try {
    return parse_scenario(read_file(path), g.arithmetic);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Trace load_trace(const fs::path& path) {
  try {
    return parse_trace(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::optional<Scalar> opt_scalar(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return Scalar::parse(*s);
}

/// Reports go to --out when given, to stdout otherwise.
void emit_report(const Global& g, const ordered_json& report, std::ostream& out) {
  const std::string body = render(report, g.structured);
  if (g.out)
    write_file(*g.out, body);
  else
    out << body;
}

fs::path output_dir(const Global& g) {
  const fs::path dir = g.out.value_or(fs::path("."));
  fs::create_directories(dir);
  return dir;
}

Scenario derived_scenario(const Scenario& base, const ProtocolChoice& choice, AdversaryKind adversary,
                          Setting setting) {
  Scenario s;
  s.params = base.params;
  s.protocol = choice;
  s.adversary = {adversary, base.params.delta_relay};
  s.inaccuracy = choice.inacc ? choice.inacc : base.inaccuracy;
  s.setting = std::move(setting);
  return s;
}

}  // namespace

CheckOutcome evaluate_check(const Scenario& sc, const Trace& trace) {
  CheckOutcome o;
  o.verdicts["setting"] = check_setting_feasible(trace, sc.setting, sc.params);
  o.verdicts["protocol"] =
      check_protocol_feasible(trace, sc.setting, make_protocol(sc.protocol, sc.params), sc.params);
  o.verdicts["leash"] = check_leash_feasible(trace, sc.setting, sc.params, sc.protocol);
  try {
    o.verdicts["adversary"] = check_adversary_feasible(trace, sc.setting, sc.params, sc.adversary);
  } catch (const ModelMessageMismatch& e) {
    Verdict v;
    v.add("adversary.message-space", {}, e.what());
    o.verdicts["adversary"] = v;
  }
  Verdict horizon;
  if (sc.horizon)
    for (const Event& e : trace)
      if (e.start() > *sc.horizon) horizon.add("trace.horizon", {e}, "event starts after the horizon");
  o.verdicts["horizon"] = horizon;
  for (const auto& [name, v] : o.verdicts) o.feasible = o.feasible && v.ok();
  o.verdicts["nd1"] = detect_nd1_violation(trace, sc.setting);
  o.nd1_violated = !o.verdicts["nd1"].ok();
  o.exit_code = !o.feasible ? kInfeasible : (o.nd1_violated ? kAttack : kOk);
  return o;
}

int cmd_check(const Global& g, const fs::path& scenario, const fs::path& trace_path, std::ostream& out) {
  const Scenario sc = load_scenario(g, scenario);
  const Trace trace = load_trace(trace_path);
  const CheckOutcome o = evaluate_check(sc, trace);
  ordered_json report{{"command", "check"},
                      {"scenario", scenario.string()},
                      {"trace", trace_path.string()},
                      {"protocol", std::string(to_string(sc.protocol.kind))},
                      {"adversary", std::string(to_string(sc.adversary.kind))},
                      {"feasible", o.feasible},
                      {"nd1_violated", o.nd1_violated},
                      {"exit_code", o.exit_code}};
  ordered_json verdicts;
  for (const char* key : {"setting", "protocol", "leash", "adversary", "horizon", "nd1"})
    verdicts[key] = to_json(o.verdicts.at(key));
  report["verdicts"] = verdicts;
  emit_report(g, report, out);
  return o.exit_code;
}

int cmd_attack(const Global& g, const AttackArgs& args, std::ostream& out) {
  const Scenario sc = load_scenario(g, args.scenario);
  const AttackVariant variant =
      args.variant ? parse_attack_variant(*args.variant) : sc.attack.variant.value_or(AttackVariant::single_relay);
  const std::optional<Scalar> distance = args.distance ? opt_scalar(args.distance) : sc.attack.distance;
  const std::optional<Scalar> d_ab = args.d_ab ? opt_scalar(args.d_ab) : sc.attack.d_ab;
  ProtocolChoice choice = sc.protocol;

  const Setting& s = sc.setting;
  const bool explicit_nodes =
      s.contains(kNodeA) && s.contains(kNodeB) && s.contains(kNodeC) &&
      (variant == AttackVariant::single_relay || s.contains(kNodeD));
  AttackRequest req;
  if (explicit_nodes) {
    const Point a = s.loc(kNodeA);
    Placement pl{s.loc(kNodeB) - a, s.loc(kNodeC) - a, std::nullopt};
    if (variant == AttackVariant::wormhole) pl.d = s.loc(kNodeD) - a;
    req = default_attack_request(choice, variant, s.dist(kNodeA, kNodeB), sc.params);
    req.placement = pl;
    if (choice.inacc && choice.inacc->errors.contains(kNodeA)) req.protocol.inacc = choice.inacc;
  } else {
    req = default_attack_request(choice, variant, distance.value_or(auto_distance(sc.params, choice, variant)),
                                 sc.params);
  }
  if (d_ab) req.d_ab = *d_ab;
  req.arithmetic = g.arithmetic;

  const fs::path dir = output_dir(g);
  ordered_json summary{{"command", "attack"},
                       {"protocol", std::string(to_string(choice.kind))},
                       {"variant", std::string(to_string(variant))},
                       {"delta_relay", sc.params.delta_relay.str()},
                       {"d_ab", req.d_ab.str()}};
  ordered_json placement{{"A", "0 0"},
                         {"B", req.placement.b.x.str() + " " + req.placement.b.y.str()},
                         {"C", req.placement.c.x.str() + " " + req.placement.c.y.str()}};
  if (req.placement.d) placement["D"] = req.placement.d->x.str() + " " + req.placement.d->y.str();
  summary["placement"] = placement;

  int code = kOk;
  try {
    const AttackPlan plan = plan_attack(req, sc.params);
    const ProtocolChoice& used = plan.protocol;
    write_file(dir / "setting_a.scn",
               write_scenario(derived_scenario(sc, used, AdversaryKind::relay, plan.setting_a)));
    write_file(dir / "theta.trace", write_trace(plan.base_trace));
    write_file(dir / "attack.scn",
               write_scenario(derived_scenario(sc, used, AdversaryKind::relay, plan.setting_attack)));
    write_file(dir / "theta_prime.trace", write_trace(plan.relay_trace));
    write_file(dir / "attack_bcast.scn",
               write_scenario(derived_scenario(sc, used, AdversaryKind::relay_bcast_only, plan.setting_attack)));
    write_file(dir / "theta_prime_bcast.trace", write_trace(plan.relay_trace_bcast));
    summary["status"] = "attack";
    summary["deltas"] = to_json(plan.deltas);
    ordered_json ineqs = ordered_json::array();
    for (const Inequality& q : plan.inequalities) ineqs.push_back(to_json(q));
    summary["inequalities"] = ineqs;
    summary["files"] = {"setting_a.scn",    "theta.trace",      "attack.scn",
                        "theta_prime.trace", "attack_bcast.scn", "theta_prime_bcast.trace"};
  } catch (const PlacementInfeasible& e) {
    summary["status"] = "infeasible";
    summary["reason"] = e.what();
    code = kNoPlacement;
  } catch (const NoWitness& e) {
    summary["status"] = "infeasible";
    summary["reason"] = e.what();
    code = kNoPlacement;
  }
  const std::string body = render(summary, g.structured);
  write_file(dir / (g.structured ? "summary.json" : "summary.txt"), body);
  out << body;
  return code;
}

int cmd_witness(const Global& g, const fs::path& scenario, const std::optional<std::string>& distance,
                std::ostream& out) {
  const Scenario sc = load_scenario(g, scenario);
  const std::optional<Scalar> d = distance ? opt_scalar(distance) : sc.attack.distance;
  if (!d) throw ParseError("witness needs --distance (or [attack] distance in the scenario)");
  ordered_json summary{{"command", "witness"},
                       {"protocol", std::string(to_string(sc.protocol.kind))},
                       {"distance", d->str()}};
  const fs::path dir = output_dir(g);
  int code = kOk;
  try {
    const Witness w = nd2_witness(sc.protocol, *d, sc.params);
    Scenario ws = derived_scenario(sc, sc.protocol, sc.adversary.kind, w.setting);
    const CheckOutcome o = evaluate_check(ws, w.trace);
    if (o.exit_code != kOk) {
      summary["status"] = "self-check failed";
      code = o.exit_code;
    } else {
      write_file(dir / "witness.scn", write_scenario(ws));
      write_file(dir / "witness.trace", write_trace(w.trace));
      summary["status"] = "witness";
      summary["files"] = {"witness.scn", "witness.trace"};
    }
  } catch (const OutOfRange& e) {
    summary["status"] = "out of range";
    summary["reason"] = e.what();
    code = kNoPlacement;
  } catch (const NoWitness& e) {
    summary["status"] = "no witness";
    summary["reason"] = e.what();
    code = kNoPlacement;
  }
  out << render(summary, g.structured);
  return code;
}

int cmd_sweep(const Global& g, const SweepArgs& a, std::ostream& out) {
  SweepSpec spec;
  std::optional<InaccuracyParams> inacc;
  if (a.scenario) {
    const Scenario sc = load_scenario(g, *a.scenario);
    spec.base = sc.params;
    spec.protocol = sc.protocol;
    inacc = sc.inaccuracy;
    if (sc.attack.variant) spec.variant = *sc.attack.variant;
  }
  if (a.v) {
    spec.base.v = Scalar::parse(*a.v);
    if (!a.v_adv && !a.scenario) spec.base.v_adv = spec.base.v;
  }
  if (a.v_adv) spec.base.v_adv = Scalar::parse(*a.v_adv);
  if (a.nd_range) spec.base.nd_range = Scalar::parse(*a.nd_range);
  if (a.msg_duration) spec.base.msg_duration_default = Scalar::parse(*a.msg_duration);
  if (a.protocol) spec.protocol.kind = parse_protocol_kind(*a.protocol);
  if (a.variant) spec.variant = parse_attack_variant(*a.variant);
  if (spec.protocol.kind == ProtocolKind::pgt_approx && !spec.protocol.inacc)
    spec.protocol.inacc = inacc.value_or(InaccuracyParams{});

  auto axis = [](const std::optional<std::string>& s) -> std::optional<std::vector<Scalar>> {
    if (!s) return std::nullopt;
    return Range::parse(*s).values();
  };
  spec.delta_relay = axis(a.delta_relay);
  spec.v_adv_ratio = axis(a.v_adv_ratio);
  spec.distance = axis(a.distance);
  spec.delta = axis(a.delta);
  spec.tau = axis(a.tau);
  const std::string table = render_sweep_table(sweep(spec));
  if (g.out)
    write_file(*g.out, table);
  else
    out << table;
  return kOk;
}

int cmd_order(const Global& g, const OrderArgs& a, std::ostream& out) {
  const AdversaryKind weaker = parse_adversary_kind(a.weaker);
  const AdversaryKind stronger = parse_adversary_kind(a.stronger);
  if (!fs::is_directory(a.dir)) throw ParseError("not a directory: " + a.dir.string());
  std::vector<fs::path> scenarios;
  for (const auto& entry : fs::directory_iterator(a.dir))
    if (entry.path().extension() == ".scn") scenarios.push_back(entry.path());
  std::sort(scenarios.begin(), scenarios.end());

  std::vector<CorpusEntry> corpus;
  for (const fs::path& p : scenarios) {
    fs::path t = p;
    t.replace_extension(".trace");
    Scenario sc = load_scenario(g, p);
    corpus.push_back({p.stem().string(), std::move(sc.setting), sc.params, load_trace(t)});
  }
  const OrderReport r = weaker_on_corpus(weaker, stronger, corpus, a.rename);
  ordered_json report{{"command", "order"},
                      {"weaker", a.weaker},
                      {"stronger", a.stronger},
                      {"rename", a.rename},
                      {"total", r.total},
                      {"premise", r.premise},
                      {"outside_message_space", r.outside_message_space},
                      {"inclusion_holds", r.holds()},
                      {"counterexamples", r.counterexamples}};
  emit_report(g, report, out);
  return r.holds() ? kOk : kInfeasible;
}

}  // namespace snd::cli
