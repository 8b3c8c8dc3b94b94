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

#ifndef VANMC_GEOMETRY_HPP_
#define VANMC_GEOMETRY_HPP_

#include <compare>
#include <cstdint>

namespace vanmc {

// Grid coordinates. One unit is roughly one car-length slot; radio ranges are
// expressed in the same units. All geometry is exact integer arithmetic so
// that states hash and compare without floating-point divergence.
struct Position {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

struct RadioConfig {
  std::int32_t range = 1;  // must be > 0

  friend constexpr auto operator<=>(const RadioConfig&,
                                    const RadioConfig&) = default;
};

// Exact for |coordinates| <= 2^20 (checked at scenario validation).
constexpr std::int64_t squared_distance(Position a, Position b) {
  const std::int64_t dx = std::int64_t{a.x} - std::int64_t{b.x};
  const std::int64_t dy = std::int64_t{a.y} - std::int64_t{b.y};
  return dx * dx + dy * dy;
}

// Strict comparison: a node exactly at distance `range` is NOT reachable.
constexpr bool in_range(Position a, Position b, RadioConfig radio) {
  return squared_distance(a, b) <
         std::int64_t{radio.range} * std::int64_t{radio.range};
}

}  // namespace vanmc

#endif  // VANMC_GEOMETRY_HPP_
