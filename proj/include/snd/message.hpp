#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "snd/geometry.hpp"
#include "snd/scalar.hpp"
#include "snd/setting.hpp"

namespace snd {

struct OpaqueBody {
  std::string token;
};

/// auth_creator(time): a beacon authenticated by `creator`.
struct BeaconT {
  NodeId creator;
  Scalar time;
};

/// auth_creator(time, loc): a beacon carrying its creator's claimed location.
struct BeaconTL {
  NodeId creator;
  Scalar time;
  Point loc;
};

/// A message with its on-air duration |m| > 0.
///
/// Opaque messages are identified by their token alone; beacons are equal only
/// when every field, duration included, matches. Authentication is symbolic: a
/// beacon's creator field cannot be forged by construction.
class Message {
 public:
  using Body = std::variant<OpaqueBody, BeaconT, BeaconTL>;

  static Message opaque(std::string token, Scalar duration);
  static Message beacon_t(NodeId creator, Scalar time, Scalar duration);
  static Message beacon_tl(NodeId creator, Scalar time, Point loc, Scalar duration);

  const Body& body() const { return body_; }
  const Scalar& duration() const { return duration_; }

  const OpaqueBody* opaque_body() const { return std::get_if<OpaqueBody>(&body_); }
  const BeaconT* beacon_t() const { return std::get_if<BeaconT>(&body_); }
  const BeaconTL* beacon_tl() const { return std::get_if<BeaconTL>(&body_); }
  bool is_beacon() const { return !opaque_body(); }
  /// Creator of an authenticated beacon; nullopt for opaque messages.
  std::optional<NodeId> creator() const;

  /// "opaque(tok)", "auth(B,0)" or "auth(B,0,8,0)"; duration is not included.
  std::string str() const;

  friend bool operator==(const Message& a, const Message& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Message& a, const Message& b);

 private:
  Message(Body body, Scalar duration);

  Body body_;
  Scalar duration_;
};

}  // namespace snd
