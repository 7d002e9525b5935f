#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "snd/cli.hpp"

namespace snd::cli {

struct Global {
  Arithmetic arithmetic;
  bool structured = false;
  std::optional<std::filesystem::path> out;
};

struct AttackArgs {
  std::filesystem::path scenario;
  std::optional<std::string> variant;
  std::optional<std::string> distance;
  std::optional<std::string> d_ab;
};

struct SweepArgs {
  std::optional<std::filesystem::path> scenario;
  std::optional<std::string> v, v_adv, nd_range, msg_duration;
  std::optional<std::string> delta_relay, v_adv_ratio, distance, delta, tau;
  std::optional<std::string> protocol, variant;
};

struct OrderArgs {
  std::filesystem::path dir;
  std::string weaker;
  std::string stronger;
  bool rename = false;
};

int cmd_check(const Global& g, const std::filesystem::path& scenario, const std::filesystem::path& trace,
              std::ostream& out);
int cmd_attack(const Global& g, const AttackArgs& args, std::ostream& out);
int cmd_witness(const Global& g, const std::filesystem::path& scenario, const std::optional<std::string>& distance,
                std::ostream& out);
int cmd_sweep(const Global& g, const SweepArgs& args, std::ostream& out);
int cmd_order(const Global& g, const OrderArgs& args, std::ostream& out);

}  // namespace snd::cli
