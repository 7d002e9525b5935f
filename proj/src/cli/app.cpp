#include <CLI11.hpp>
#include <ostream>

#include "commands.hpp"
#include "snd/errors.hpp"

namespace snd::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks neighbor-discovery traces and synthesizes relay attacks."};
  app.name("sndcheck");
  app.require_subcommand(1);

  bool exact = false;
  std::optional<std::string> approx;
  std::string format = "text";
  std::optional<std::string> out_path;
  app.add_flag("--exact", exact, "Exact rational arithmetic (default)");
  app.add_option("--approx", approx, "Approximate mode with time tolerance EPS")->excludes("--exact");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out_path, "Report file, or output directory for attack/witness");

  std::string scn, trace_file;
  auto* check = app.add_subcommand("check", "Run all feasibility checkers and ND1 detection on a trace");
  check->add_option("scenario", scn)->required();
  check->add_option("trace", trace_file)->required();

  AttackArgs attack_args;
  auto* attack = app.add_subcommand("attack", "Synthesize the relay attack for a scenario");
  attack->add_option("scenario", attack_args.scenario)->required();
  attack->add_option("--variant", attack_args.variant, "single or wormhole");
  attack->add_option("--distance", attack_args.distance, "A-B distance in the attack setting");
  attack->add_option("--d-ab", attack_args.d_ab, "A-B distance in the honest setting");

  std::optional<std::string> witness_distance;
  auto* witness = app.add_subcommand("witness", "Emit a two-node run in which A discovers B");
  witness->add_option("scenario", scn)->required();
  witness->add_option("--distance", witness_distance, "Distance between A and B");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Tabulate boundaries and attack success over parameter ranges");
  sweep->add_option("--scenario", sw.scenario, "Scenario supplying base parameters");
  sweep->add_option("--v", sw.v);
  sweep->add_option("--v-adv", sw.v_adv);
  sweep->add_option("--nd-range", sw.nd_range);
  sweep->add_option("--msg-duration", sw.msg_duration);
  sweep->add_option("--delta-relay", sw.delta_relay, "from:to:step or a single value");
  sweep->add_option("--v-adv-ratio", sw.v_adv_ratio, "from:to:step or a single value");
  sweep->add_option("--distance", sw.distance, "from:to:step or a single value");
  sweep->add_option("--delta", sw.delta, "from:to:step or a single value");
  sweep->add_option("--tau", sw.tau, "from:to:step or a single value");
  sweep->add_option("--protocol", sw.protocol);
  sweep->add_option("--variant", sw.variant);

  OrderArgs ord;
  auto* order = app.add_subcommand("order", "Test adversary-model inclusion on a corpus directory");
  order->add_option("dir", ord.dir)->required();
  order->add_option("--weaker", ord.weaker)->required();
  order->add_option("--stronger", ord.stronger)->required();
  order->add_flag("--rename", ord.rename, "Rename adversarial Bcasts to Dcasts first");

  for (auto* sub : {check, attack, witness, sweep, order}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    Global g;
    if (approx) {
      const Scalar eps = Scalar::parse(*approx);
      if (eps.sign() <= 0) throw InvalidArgument("--approx needs a positive epsilon");
      g.arithmetic = Arithmetic::approximate(eps);
    }
    g.structured = format == "structured";
    if (out_path) g.out = *out_path;
    if (*check) return cmd_check(g, scn, trace_file, out);
    if (*attack) return cmd_attack(g, attack_args, out);
    if (*witness) return cmd_witness(g, scn, witness_distance, out);
    if (*sweep) return cmd_sweep(g, sw, out);
    if (*order) return cmd_order(g, ord, out);
  } catch (const Error& e) {
    err << "sndcheck: " << e.what() << '\n';
    return kParseFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "sndcheck: " << e.what() << '\n';
    return kParseFailure;
  }
  return kParseFailure;
}

}  // namespace snd::cli
