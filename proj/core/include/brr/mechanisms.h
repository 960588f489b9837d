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

#ifndef BRR_MECHANISMS_H_
#define BRR_MECHANISMS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "brr/embeddings.h"
#include "brr/nn_index.h"
#include "brr/noise.h"
#include "brr/rng.h"

namespace brr {

enum class MechanismKind { kBrr, kMadlib };

// What happens to tokens missing from the vocabulary. Passed-through tokens
// are emitted verbatim and carry no privacy guarantee at all.
enum class OovPolicy { kPassThrough, kDrop };

std::string_view MechanismName(MechanismKind kind);

struct MechanismConfig {
  MechanismKind kind = MechanismKind::kBrr;
  PrivacyParams params;
  OovPolicy oov_policy = OovPolicy::kPassThrough;

  // BRR needs a Hamming-calibrated epsilon, Madlib a Euclidean one.
  static absl::StatusOr<MechanismConfig> Create(
      MechanismKind kind, double epsilon,
      OovPolicy oov_policy = OovPolicy::kPassThrough);
};

struct PrivatizationReport {
  uint64_t tokens_in = 0;
  uint64_t tokens_privatized = 0;
  uint64_t tokens_oov = 0;
  // Privatized tokens whose output equals the input.
  uint64_t tokens_unchanged = 0;

  double unchanged_fraction() const {
    return tokens_privatized == 0
               ? 0.0
               : static_cast<double>(tokens_unchanged) /
                     static_cast<double>(tokens_privatized);
  }

  std::string ToJson() const;
};

// A word-level privatizer over a fixed vocabulary.
class WordMechanism {
 public:
  virtual ~WordMechanism() = default;

  virtual MechanismKind kind() const = 0;
  virtual const Vocabulary& vocabulary() const = 0;

  // Privatizes vocabulary id `id`. `epsilon` must already be validated.
  virtual uint32_t PrivatizeId(uint32_t id, double epsilon,
                               RngStream& rng) const = 0;

  // Fails with InvalidArgument on a bad epsilon and NotFound
  // ("out of vocabulary") for unknown words.
  absl::StatusOr<std::string> Privatize(std::string_view word, double epsilon,
                                        RngStream& rng) const;
};

// Binary embeddings + randomized response + Hamming nearest neighbour.
class BrrMechanism final : public WordMechanism {
 public:
  static absl::StatusOr<BrrMechanism> Create(
      Vocabulary vocabulary, BinaryCodeMatrix codes,
      Acceleration acceleration = Acceleration{});

  MechanismKind kind() const override { return MechanismKind::kBrr; }
  const Vocabulary& vocabulary() const override { return vocabulary_; }
  const HammingIndex& index() const { return index_; }

  uint32_t PrivatizeId(uint32_t id, double epsilon,
                       RngStream& rng) const override;

 private:
  BrrMechanism(Vocabulary vocabulary, HammingIndex index)
      : vocabulary_(std::move(vocabulary)), index_(std::move(index)) {}

  Vocabulary vocabulary_;
  HammingIndex index_;
};

// Real embeddings + exp(-eps ||z||) noise + Euclidean nearest neighbour.
class MadlibMechanism final : public WordMechanism {
 public:
  static absl::StatusOr<MadlibMechanism> Create(Vocabulary vocabulary,
                                                RealEmbeddingMatrix vectors);

  MechanismKind kind() const override { return MechanismKind::kMadlib; }
  const Vocabulary& vocabulary() const override { return vocabulary_; }
  const EuclidIndex& index() const { return index_; }

  uint32_t PrivatizeId(uint32_t id, double epsilon,
                       RngStream& rng) const override;

 private:
  MadlibMechanism(Vocabulary vocabulary, EuclidIndex index)
      : vocabulary_(std::move(vocabulary)), index_(std::move(index)) {}

  Vocabulary vocabulary_;
  EuclidIndex index_;
};

struct PrivatizedStream {
  std::vector<std::string> tokens;
  PrivatizationReport report;
};

// Privatizes each in-vocabulary token independently. Token i draws from
// RngStream(seed, i), so the result does not depend on `threads` and
// reordering tokens reorders outputs. Every occurrence of a word is a
// separate draw; no total budget is tracked.
//
// Fails only when `config` does not match `mechanism`.
absl::StatusOr<PrivatizedStream> PrivatizeStream(
    std::span<const std::string> tokens, const MechanismConfig& config,
    const WordMechanism& mechanism, uint64_t seed, unsigned threads = 1);

}  // namespace brr

#endif  // BRR_MECHANISMS_H_
