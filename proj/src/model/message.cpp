#include "snd/message.hpp"

#include "snd/errors.hpp"

namespace snd {

Message::Message(Body body, Scalar duration) : body_(std::move(body)), duration_(std::move(duration)) {
  if (duration_ <= Scalar(0)) throw InvalidArgument("message duration must be > 0");
}

Message Message::opaque(std::string token, Scalar duration) {
  if (!valid_identifier(token)) throw InvalidArgument("invalid message token '" + token + "'");
  return Message(OpaqueBody{std::move(token)}, std::move(duration));
}

Message Message::beacon_t(NodeId creator, Scalar time, Scalar duration) {
  return Message(BeaconT{std::move(creator), std::move(time)}, std::move(duration));
}

Message Message::beacon_tl(NodeId creator, Scalar time, Point loc, Scalar duration) {
  return Message(BeaconTL{std::move(creator), std::move(time), std::move(loc)}, std::move(duration));
}

std::optional<NodeId> Message::creator() const {
  if (const auto* b = beacon_t()) return b->creator;
  if (const auto* b = beacon_tl()) return b->creator;
  return std::nullopt;
}

std::string Message::str() const {
  if (const auto* o = opaque_body()) return "opaque(" + o->token + ")";
  if (const auto* b = beacon_t()) return "auth(" + b->creator.str() + "," + b->time.str() + ")";
  const auto& b = std::get<BeaconTL>(body_);
  return "auth(" + b.creator.str() + "," + b.time.str() + "," + b.loc.x.str() + "," + b.loc.y.str() + ")";
}

std::strong_ordering operator<=>(const Message& a, const Message& b) {
  if (auto c = a.body_.index() <=> b.body_.index(); c != 0) return c;
  if (const auto* oa = a.opaque_body()) return oa->token <=> b.opaque_body()->token;
  if (const auto* ba = a.beacon_t()) {
    const auto* bb = b.beacon_t();
    if (auto c = ba->creator <=> bb->creator; c != 0) return c;
    if (auto c = ba->time <=> bb->time; c != 0) return c;
  } else {
    const auto* ta = a.beacon_tl();
    const auto* tb = b.beacon_tl();
    if (auto c = ta->creator <=> tb->creator; c != 0) return c;
    if (auto c = ta->time <=> tb->time; c != 0) return c;
    if (auto c = ta->loc <=> tb->loc; c != 0) return c;
  }
  return a.duration_ <=> b.duration_;
}

}  // namespace snd
