/*
 * Copyright (c) 2026, the vanmc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

// Core value types of the timed-actor world: messages, per-vehicle state and
// the global state. A GlobalState is an immutable value from the caller's
// point of view; every engine operation returns a fresh successor.

#ifndef VANMC_MODEL_HPP_
#define VANMC_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanmc/geometry.hpp"

namespace vanmc {

using ActorId = std::uint16_t;
using TimeUnit = std::uint32_t;

inline constexpr std::size_t kMaxActors = 128;

enum class ServerKind : std::uint8_t {
  kAlertAccident = 0,
  kReceive = 1,
  kFinishWait = 2,
  kMove = 3,
  kStop = 4,
};

const char* server_name(ServerKind server);
// Throws std::invalid_argument for unknown names.
ServerKind server_from_name(const std::string& name);

// Message payload. `receive` carries the warning hop number and the sender's
// position; a TLO `finishWait` carries the position of the broadcast the
// waiting vehicle is re-running the election for. Unused fields stay zero so
// canonical encodings are uniform across servers.
struct Payload {
  std::int32_t hop = 0;
  Position sender_pos{};

  friend constexpr auto operator<=>(const Payload&, const Payload&) = default;
};

struct TimedMessage {
  ActorId target = 0;
  ActorId sender = 0;
  ServerKind server = ServerKind::kReceive;
  Payload payload{};
  TimeUnit arrival = 0;

  friend constexpr auto operator<=>(const TimedMessage&,
                                    const TimedMessage&) = default;
};

// Fixed total order used wherever bag contents must be enumerated
// canonically: (arrivalTime, server, sender, payload).
constexpr bool canonical_less(const TimedMessage& a, const TimedMessage& b) {
  if (a.arrival != b.arrival) return a.arrival < b.arrival;
  if (a.server != b.server) return a.server < b.server;
  if (a.sender != b.sender) return a.sender < b.sender;
  return a.payload < b.payload;
}

// One vehicle's mutable state. Both schemes share the struct; the fields a
// scheme does not use stay at their zero initials, which keeps canonical
// state encodings injective without per-scheme key layouts.
struct ActorVars {
  Position pos{};
  bool stopped = false;
  bool is_aware = false;
  // counting scheme
  std::uint32_t counter = 0;
  std::uint32_t hop_num = 0;  // highest warning hop received (both schemes)
  // TLO scheme
  bool received = false;
  bool is_waiting = false;

  friend constexpr auto operator<=>(const ActorVars&,
                                    const ActorVars&) = default;
};

// Global time plus all vehicles and all pending messages. Messages are kept
// in one flat multiset (each entry names its target actor); per-actor bags
// are views over it. No ordering among entries is meaningful.
struct GlobalState {
  TimeUnit now = 0;
  std::vector<ActorVars> actors;
  std::vector<TimedMessage> messages;

  friend bool operator==(const GlobalState&, const GlobalState&) = default;
};

// An enabled (actor, message) pair. The actor is the message's target; a
// duplicated bag entry yields a single event (executing it consumes one
// instance).
struct Event {
  TimedMessage message;

  ActorId actor() const { return message.target; }

  friend constexpr auto operator<=>(const Event&, const Event&) = default;
};

std::size_t bag_size(const GlobalState& state, ActorId actor);

// Raised when a send would push a message bag past its capacity. This is a
// modeling error: the checker aborts the exploration and attaches the trace
// that led here.
class BagOverflowError : public std::runtime_error {
 public:
  BagOverflowError(ActorId actor, std::size_t capacity);

  ActorId actor() const { return actor_; }

 private:
  ActorId actor_;
};

// Internal-consistency failures (e.g. executing a non-enabled event) throw
// this; they indicate a checker bug, never a property violation.
class CheckerBugError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vanmc

#endif  // VANMC_MODEL_HPP_
