// Copyright 2026 The BRR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRR_RNG_H_
#define BRR_RNG_H_

#include <cstdint>
#include <limits>

namespace brr {

// SplitMix64 finalizer (Stafford's "Mix13" variant).
constexpr uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based random stream keyed by (seed, stream_id).
//
// Draw n (0-based) of a stream is Mix64(key + (n + 1) * kGamma), where
// kGamma = 0x9e3779b97f4a7c15 and key = Mix64(Mix64(seed) ^ Mix64(stream_id +
// kGamma)). This is SplitMix64 started from `key`, so a stream is fully
// determined by (seed, stream_id, counter) and streams can be created
// independently on any thread.
//
// Satisfies UniformRandomBitGenerator, but all samplers in this library use
// the explicit helpers below so results do not depend on the standard
// library's distribution implementations.
class RngStream {
 public:
  using result_type = uint64_t;

  static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  RngStream(uint64_t seed, uint64_t stream_id)
      : seed_(seed),
        stream_id_(stream_id),
        key_(Mix64(Mix64(seed) ^ Mix64(stream_id + kGamma))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<uint64_t>::max();
  }

  result_type operator()() { return Next(); }

  uint64_t Next() {
    ++counter_;
    return Mix64(key_ + counter_ * kGamma);
  }

  // Uniform on [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); never returns 0.
  double UniformPositiveDouble() {
    return (static_cast<double>(Next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
  // `bound` must be positive.
  uint64_t UniformBelow(uint64_t bound);

  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_id_; }
  uint64_t counter() const { return counter_; }

 private:
  uint64_t seed_;
  uint64_t stream_id_;
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace brr

#endif  // BRR_RNG_H_
