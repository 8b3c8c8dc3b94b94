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

// Pluggable warning-dissemination behaviors. A scheme is a set of
// deterministic message-server bodies over vehicle state; all nondeterminism
// lives in event interleaving, never inside a handler.

#ifndef VANMC_SCHEME_HPP_
#define VANMC_SCHEME_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "vanmc/model.hpp"

namespace vanmc {

enum class SchemeKind : std::uint8_t { kCounting = 0, kTlo = 1 };

struct CountingParams {
  std::uint32_t c_threshold = 2;
  TimeUnit threshold_waiting = 2;
};

struct TloParams {
  TimeUnit threshold_waiting = 2;
};

struct VehicleKinematics {
  std::int32_t dir_x = 1;  // unit step components
  std::int32_t dir_y = 0;
  std::int32_t speed = 0;       // grid units per move period
  std::int32_t latency = 1;     // move period, >= 1
};

class SchemeBehavior;

// Everything fixed for the lifetime of one exploration: geometry rules,
// scheme parameters, per-vehicle kinematics. Mutable data lives exclusively
// in GlobalState.
struct ModelConfig {
  std::size_t actor_count = 0;
  ActorId accident_vehicle = 0;
  RadioConfig radio{};
  std::size_t bag_capacity = 5;
  bool movement_enabled = false;
  std::vector<VehicleKinematics> kinematics;
  std::shared_ptr<const SchemeBehavior> scheme;
};

// Effect sink handed to a message-server body. The body runs to completion:
// it may mutate its own actor's variables and emit sends, nothing else.
class EffectContext {
 public:
  EffectContext(const ModelConfig& config, GlobalState& state, ActorId self)
      : config_(config), state_(state), self_(self) {}

  const ModelConfig& config() const { return config_; }
  ActorId self() const { return self_; }
  TimeUnit now() const { return state_.now; }
  ActorVars& vars() { return state_.actors[self_]; }
  Position self_pos() const { return state_.actors[self_].pos; }

  // Timed self-send; arrival = now + delay.
  void send_self(ServerKind server, TimeUnit delay, Payload payload = {});

  // Location-based broadcast: enqueues `receive` (arrival = now) carrying
  // {hop, own position} into the bag of every actor within radio range of
  // this actor, the sender itself included.
  void broadcast_warning(std::int32_t hop);

  // True iff no actor within range of sender_pos lies strictly farther from
  // sender_pos than this actor. Ties all count as farthest.
  bool self_is_farthest(Position sender_pos) const;

  GlobalState& mutable_state() { return state_; }

 private:
  const ModelConfig& config_;
  GlobalState& state_;
  ActorId self_;
};

class SchemeBehavior {
 public:
  virtual ~SchemeBehavior() = default;

  virtual SchemeKind kind() const = 0;
  virtual TimeUnit threshold_waiting() const = 0;

  // Dispatches one dequeued message to its server body.
  virtual void handle(EffectContext& ctx, const TimedMessage& msg) const = 0;

 protected:
  // move/stop are scheme-independent.
  void handle_movement(EffectContext& ctx, const TimedMessage& msg) const;
};

std::shared_ptr<const SchemeBehavior> make_counting_scheme(CountingParams params);
std::shared_ptr<const SchemeBehavior> make_tlo_scheme(TloParams params);

const CountingParams& counting_params(const SchemeBehavior& scheme);

}  // namespace vanmc

#endif  // VANMC_SCHEME_HPP_
