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

// Timed-actor execution semantics: bounded message bags, timed delivery,
// run-to-completion message servers, enabled-event computation and time
// normalization. All operations are pure state-to-state functions and safe
// to evaluate concurrently.

#ifndef VANMC_ENGINE_HPP_
#define VANMC_ENGINE_HPP_

#include <string>
#include <vector>

#include "vanmc/model.hpp"
#include "vanmc/scheme.hpp"

namespace vanmc {

// Adds msg to its target's bag. Requires msg.arrival >= state.now; throws
// BagOverflowError if the bag already holds `bag_capacity` entries.
GlobalState enqueue(const ModelConfig& config, GlobalState state,
                    const TimedMessage& msg);

// In-place variant used by handler bodies.
void enqueue_in_place(const ModelConfig& config, GlobalState& state,
                      const TimedMessage& msg);

// Exactly the (actor, message) pairs whose arrival equals the minimum
// arrival over all bags; empty iff all bags are empty. Returned in the fixed
// canonical order (target actor, then message order), duplicates collapsed.
std::vector<Event> enabled_events(const GlobalState& state);

// Removes one instance of the event's message from its bag, runs the scheme's
// message-server body to completion, and advances `now` to the new minimum
// pending arrival (unchanged if no messages remain). Throws CheckerBugError
// if the event is not currently enabled; propagates BagOverflowError from
// sends made by the body.
GlobalState execute_event(const ModelConfig& config, const GlobalState& state,
                          const Event& event);

// Uniform shift of now and all arrival times so that now = 0. Neither
// bundled scheme keeps absolute times in vehicle variables, so only message
// arrivals shift.
GlobalState normalize_time(GlobalState state);

// Injective byte encoding of a time-normalized state: (now, per-actor
// variables in ActorId order, bag contents in canonical message order).
// Equal states produce equal keys and vice versa.
std::string canonical_key(const GlobalState& state);

// Location-based broadcast from `sender`: enqueues `receive` with
// {payload.hop, sender position} and arrival = now into every in-range bag,
// the sender's own included.
void broadcast(const ModelConfig& config, GlobalState& state, ActorId sender,
               std::int32_t hop);

// The distance-based forwarding predicate: true iff no actor within range of
// sender_pos is strictly farther from it than `candidate`. Every
// maximal-distance receiver of a broadcast satisfies this (ties included).
bool is_tlo(const ModelConfig& config, const GlobalState& state,
            ActorId candidate, Position sender_pos);

// Initial state: the accident vehicle holds `alertAccident` at t=0; when
// movement is enabled every other vehicle holds its first `move` at its own
// latency.
GlobalState initial_state(const ModelConfig& config,
                          const std::vector<Position>& positions);

}  // namespace vanmc

#endif  // VANMC_ENGINE_HPP_
