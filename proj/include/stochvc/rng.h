// Copyright 2026 The stochvc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Counter-based random numbers. Every draw is a pure function of
// (master_seed, stream_id, trial, index), so work can be split across
// threads in any way without changing a single bit of output.
//
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011.

#ifndef STOCHVC_RNG_H_
#define STOCHVC_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace stochvc {

// Philox4x32 with 10 rounds.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

std::uint64_t splitmix64(std::uint64_t x);

// Well-known substream tags. Values are part of the reproducibility contract.
enum class Stream : std::uint64_t {
  kRealization = 1,
  kMatching = 2,
  kGenerator = 3,
  kFixedSample = 4,
  kRandomSet = 5,
  kVertexSeed = 6,
  kCandidates = 7,
  kQueryPhase = 8,
};

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  // Deterministically derived independent stream.
  SeedSpec substream(std::uint64_t tag) const;
  SeedSpec substream(Stream tag) const {
    return substream(static_cast<std::uint64_t>(tag));
  }

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// 64 random bits for (seed, trial, index).
std::uint64_t draw_u64(const SeedSpec& seed, std::uint64_t trial,
                       std::uint64_t index);

// Uniform in [0, 1) with 53 bits of resolution.
inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double draw_unit(const SeedSpec& seed, std::uint64_t trial,
                        std::uint64_t index) {
  return to_unit(draw_u64(seed, trial, index));
}

// True with probability p. p >= 1 is always true.
inline bool draw_bernoulli(const SeedSpec& seed, std::uint64_t trial,
                           std::uint64_t index, double p) {
  return draw_unit(seed, trial, index) < p;
}

// Sequential view of one (seed, trial) counter lane. Satisfies
// UniformRandomBitGenerator so it plugs into <random> and <algorithm>.
class CounterStream {
 public:
  using result_type = std::uint64_t;

  CounterStream(const SeedSpec& seed, std::uint64_t trial)
      : seed_(seed), trial_(trial) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return draw_u64(seed_, trial_, next_++); }

  double unit() { return to_unit((*this)()); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t draws() const { return next_; }

 private:
  SeedSpec seed_;
  std::uint64_t trial_;
  std::uint64_t next_ = 0;
};

}  // namespace stochvc

#endif  // STOCHVC_RNG_H_
