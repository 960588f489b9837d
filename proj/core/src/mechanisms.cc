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

#include "brr/mechanisms.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"

namespace brr {

std::string_view MechanismName(MechanismKind kind) {
  return kind == MechanismKind::kBrr ? "brr" : "madlib";
}

absl::StatusOr<MechanismConfig> MechanismConfig::Create(MechanismKind kind,
                                                        double epsilon,
                                                        OovPolicy oov_policy) {
  auto params = PrivacyParams::Create(
      epsilon, kind == MechanismKind::kBrr ? Metric::kHamming
                                           : Metric::kEuclidean);
  if (!params.ok()) return params.status();
  return MechanismConfig{kind, *params, oov_policy};
}

std::string PrivatizationReport::ToJson() const {
  nlohmann::ordered_json json;
  json["tokens_in"] = tokens_in;
  json["tokens_privatized"] = tokens_privatized;
  json["tokens_oov"] = tokens_oov;
  json["tokens_unchanged"] = tokens_unchanged;
  json["unchanged_fraction"] = unchanged_fraction();
  return json.dump(2);
}

absl::StatusOr<std::string> WordMechanism::Privatize(std::string_view word,
                                                     double epsilon,
                                                     RngStream& rng) const {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  const std::optional<uint32_t> id = vocabulary().IdOf(word);
  if (!id.has_value()) {
    return absl::NotFoundError(absl::StrCat("out of vocabulary: '", std::string(word), "'"));
  }
  return vocabulary().word(PrivatizeId(*id, epsilon, rng));
}

absl::StatusOr<BrrMechanism> BrrMechanism::Create(Vocabulary vocabulary,
                                                  BinaryCodeMatrix codes,
                                                  Acceleration acceleration) {
  if (vocabulary.size() != codes.rows()) {
    return absl::InvalidArgumentError(
        absl::StrCat("vocabulary mismatch: ", vocabulary.size(), " words, ",
                     codes.rows(), " codes"));
  }
  auto index = HammingIndex::Build(std::move(codes), acceleration);
  if (!index.ok()) return index.status();
  return BrrMechanism(std::move(vocabulary), *std::move(index));
}

uint32_t BrrMechanism::PrivatizeId(uint32_t id, double epsilon,
                                   RngStream& rng) const {
  const CodeView code = index_.codes().row(id);
  const double flip_probability = 1.0 / (1.0 + std::exp(epsilon));
  constexpr size_t kInlineWords = 8;
  std::array<uint64_t, kInlineWords> inline_buffer;
  std::vector<uint64_t> heap_buffer;
  std::span<uint64_t> perturbed;
  if (code.words.size() <= kInlineWords) {
    perturbed = std::span<uint64_t>(inline_buffer).first(code.words.size());
  } else {
    heap_buffer.resize(code.words.size());
    perturbed = heap_buffer;
  }
  std::copy(code.words.begin(), code.words.end(), perturbed.begin());
  const auto flips = static_cast<uint32_t>(
      SampleBinomial(rng, code.bits, flip_probability));
  FlipRandomPositions(perturbed, code.bits, flips, rng);
  return index_.NearestUnchecked(perturbed.data()).id;
}

absl::StatusOr<MadlibMechanism> MadlibMechanism::Create(
    Vocabulary vocabulary, RealEmbeddingMatrix vectors) {
  if (vocabulary.size() != vectors.rows()) {
    return absl::InvalidArgumentError(
        absl::StrCat("vocabulary mismatch: ", vocabulary.size(), " words, ",
                     vectors.rows(), " vectors"));
  }
  auto index = EuclidIndex::Build(std::move(vectors));
  if (!index.ok()) return index.status();
  return MadlibMechanism(std::move(vocabulary), *std::move(index));
}

uint32_t MadlibMechanism::PrivatizeId(uint32_t id, double epsilon,
                                      RngStream& rng) const {
  const std::span<const double> base = index_.vectors().row(id);
  std::vector<double> noisy(base.size());
  SampleMadlibNoise(noisy, epsilon, rng);
  for (size_t k = 0; k < noisy.size(); ++k) noisy[k] += base[k];
  return index_.NearestUnchecked(noisy).id;
}

absl::StatusOr<PrivatizedStream> PrivatizeStream(
    std::span<const std::string> tokens, const MechanismConfig& config,
    const WordMechanism& mechanism, uint64_t seed, unsigned threads) {
  if (config.kind != mechanism.kind()) {
    return absl::InvalidArgumentError(
        absl::StrCat("config is for ", std::string(MechanismName(config.kind)),
                     " but mechanism is ",
                     std::string(MechanismName(mechanism.kind()))));
  }
  const double epsilon = config.params.epsilon();
  const Vocabulary& vocabulary = mechanism.vocabulary();

  // -1 marks out-of-vocabulary tokens.
  std::vector<int64_t> outputs(tokens.size(), -1);
  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const std::optional<uint32_t> id = vocabulary.IdOf(tokens[i]);
      if (!id.has_value()) continue;
      RngStream rng(seed, i);
      outputs[i] = mechanism.PrivatizeId(*id, epsilon, rng);
    }
  };
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(tokens.size())));
  if (threads <= 1) {
    work(0, tokens.size());
  } else {
    std::vector<std::thread> workers;
    const size_t chunk = (tokens.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const size_t begin = std::min(tokens.size(), t * chunk);
      const size_t end = std::min(tokens.size(), begin + chunk);
      workers.emplace_back(work, begin, end);
    }
    for (std::thread& worker : workers) worker.join();
  }

  PrivatizedStream out;
  out.report.tokens_in = tokens.size();
  out.tokens.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (outputs[i] < 0) {
      ++out.report.tokens_oov;
      if (config.oov_policy == OovPolicy::kPassThrough) {
        out.tokens.push_back(tokens[i]);
      }
      continue;
    }
    ++out.report.tokens_privatized;
    const std::string& word = vocabulary.word(static_cast<size_t>(outputs[i]));
    if (word == tokens[i]) ++out.report.tokens_unchanged;
    out.tokens.push_back(word);
  }
  return out;
}

}  // namespace brr
