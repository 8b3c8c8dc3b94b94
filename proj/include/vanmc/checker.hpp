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

// Exhaustive breadth-first exploration over all event interleavings with
// canonical-state deduplication, plus the coverage/starvation and hop/time
// analyses evaluated over the reached terminal states.

#ifndef VANMC_CHECKER_HPP_
#define VANMC_CHECKER_HPP_

#include <bitset>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vanmc/engine.hpp"
#include "vanmc/model.hpp"

namespace vanmc {

using InformedSet = std::bitset<kMaxActors>;

struct ExploreLimits {
  std::uint64_t max_states = 5'000'000;
  double max_seconds = 600.0;
};

enum class ExploreStatus : std::uint8_t {
  kCompleted = 0,
  kStateLimit = 1,
  kTimeLimit = 2,
  kBagOverflow = 3,
};

const char* explore_status_name(ExploreStatus status);

// One executed event, in absolute model time.
struct TraceStep {
  TimeUnit time = 0;
  ActorId actor = 0;
  ServerKind server = ServerKind::kReceive;
  ActorId sender = 0;
  Payload payload{};

  friend constexpr auto operator<=>(const TraceStep&,
                                    const TraceStep&) = default;
};

using WitnessTrace = std::vector<TraceStep>;

// A reachable state with no scheme-relevant enabled events. With movement
// enabled, states whose only pending messages are `move` count as terminal
// (scheme quiescence) and are not expanded further.
struct TerminalOutcome {
  InformedSet informed;
  std::uint32_t max_hop = 0;
  TimeUnit completion_time = 0;
  std::uint32_t node_index = 0;  // into the exploration's discovery order

  friend bool operator==(const TerminalOutcome&,
                         const TerminalOutcome&) = default;
};

struct StateSpace {
  ExploreStatus status = ExploreStatus::kCompleted;
  std::uint64_t state_count = 0;       // distinct canonical states reached
  std::uint64_t transition_count = 0;  // executed (state, event) pairs
  std::vector<TerminalOutcome> terminals;  // in discovery order

  // Trace to the attempted event that overflowed a bag (kBagOverflow only).
  WitnessTrace diagnostic_trace;
  std::optional<ActorId> overflow_actor;

  // Discovery bookkeeping kept for witness reconstruction.
  struct NodeMeta {
    std::uint32_t parent = 0;
    TraceStep step{};          // the event that produced this node
    TimeUnit abs_now = 0;      // unnormalized model time of the node
    TimeUnit last_inform = 0;  // latest first-inform instant on the BFS path
  };
  std::vector<NodeMeta> nodes;
  std::set<std::string> visited_keys;

  WitnessTrace trace_to(std::uint32_t node_index) const;
};

// Deterministic layered BFS; results (counts, terminal set, witnesses) are
// identical for any worker count. workers <= 1 runs the reference
// single-threaded path.
StateSpace explore(const ModelConfig& config, const GlobalState& initial,
                   const ExploreLimits& limits = {}, int workers = 1);

struct PropertyReport {
  bool full_coverage_always = false;
  InformedSet expected_informed;  // range-graph closure from the accident
  std::optional<WitnessTrace> starvation_witness;
  std::optional<TerminalOutcome> starving_terminal;
  std::optional<std::uint32_t> hop_best;
  std::optional<std::uint32_t> hop_worst;
  std::optional<TimeUnit> time_best;
  std::optional<TimeUnit> time_worst;
  std::uint64_t state_count = 0;
  std::uint64_t transition_count = 0;
  std::uint64_t terminal_count = 0;
  ExploreStatus status = ExploreStatus::kCompleted;
};

// Vehicles reachable from the accident vehicle in the transitive closure of
// the symmetric in-range graph (the accident vehicle included).
InformedSet expected_informed_set(const ModelConfig& config,
                                  const std::vector<Position>& positions);

// Coverage/starvation verdict plus best/worst hop and completion-time
// metrics over full-coverage terminals. Requires a completed exploration.
PropertyReport check_coverage(const StateSpace& space,
                              const ModelConfig& config,
                              const std::vector<Position>& positions);

// min/max max_hop over full-coverage terminals. Empty when every terminal
// starves (reported via PropertyReport, metrics omitted).
struct HopMetrics {
  std::uint32_t best = 0;
  std::uint32_t worst = 0;
};
std::optional<HopMetrics> hop_metrics(const StateSpace& space,
                                      const InformedSet& expected);

}  // namespace vanmc

#endif  // VANMC_CHECKER_HPP_
