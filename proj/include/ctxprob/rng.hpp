// Copyright 2026 The ctxprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXPROB_RNG_HPP
#define CTXPROB_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace ctxprob {

using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the substream identified by (seed, role, index). Every experiment
/// and every bootstrap replicate draws from its own substream, so results do
/// not depend on which worker runs them or in what order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view role, std::uint64_t index = 0) noexcept;

Engine make_stream(std::uint64_t seed, std::string_view role, std::uint64_t index = 0);

/// Binomial(n, p) draw; p is clamped into [0,1].
std::uint64_t draw_binomial(Engine &engine, std::uint64_t n, double p);

/// Runs body(k) for k in [0, count) on up to `workers` threads (0 = hardware
/// concurrency). The body must only write to slot k of its outputs.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> &body);

}  // namespace ctxprob

#endif
