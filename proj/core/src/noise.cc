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

#include "brr/noise.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace brr {

std::string_view MetricName(Metric metric) {
  return metric == Metric::kHamming ? "hamming" : "euclidean";
}

absl::Status ValidateEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "non-positive epsilon: ", epsilon, " (must be positive and finite)"));
  }
  return absl::OkStatus();
}

absl::StatusOr<PrivacyParams> PrivacyParams::Create(double epsilon,
                                                    Metric metric) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  return PrivacyParams(epsilon, metric);
}

absl::StatusOr<double> RrKeepProbability(double epsilon) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  return 1.0 / (1.0 + std::exp(-epsilon));
}

absl::StatusOr<double> RrFlipProbability(double epsilon) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  return 1.0 / (1.0 + std::exp(epsilon));
}

double RrLogKeepProbability(double epsilon) {
  return -std::log1p(std::exp(-epsilon));
}

double RrLogFlipProbability(double epsilon) {
  return -(epsilon + std::log1p(std::exp(-epsilon)));
}

double SampleStandardNormal(RngStream& rng) {
  while (true) {
    const double u = 2.0 * rng.UniformDouble() - 1.0;
    const double v = 2.0 * rng.UniformDouble() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

uint64_t SampleBinomial(RngStream& rng, uint64_t n, double p) {
  if (n == 0 || !(p > 0.0)) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - SampleBinomial(rng, n, 1.0 - p);

  const double dn = static_cast<double>(n);
  const uint64_t mode =
      std::min<uint64_t>(n, static_cast<uint64_t>((dn + 1.0) * p));
  const double dm = static_cast<double>(mode);
  const double log_mode_mass = std::lgamma(dn + 1.0) - std::lgamma(dm + 1.0) -
                               std::lgamma(dn - dm + 1.0) + dm * std::log(p) +
                               (dn - dm) * std::log1p(-p);
  const double odds = p / (1.0 - p);
  const double u = rng.UniformDouble();

  double cumulative = std::exp(log_mode_mass);
  if (u < cumulative) return mode;
  uint64_t lo = mode, hi = mode;
  double mass_lo = cumulative, mass_hi = cumulative;
  while (true) {
    // pmf(k - 1) / pmf(k) = k / ((n - k + 1) odds),
    // pmf(k + 1) / pmf(k) = (n - k) odds / (k + 1).
    const double next_lo =
        lo > 0 ? mass_lo * static_cast<double>(lo) /
                     (static_cast<double>(n - lo + 1) * odds)
               : 0.0;
    const double next_hi =
        hi < n ? mass_hi * static_cast<double>(n - hi) * odds /
                     static_cast<double>(hi + 1)
               : 0.0;
    if (!(next_lo > 0.0) && !(next_hi > 0.0)) {
      // Remaining mass is below double resolution.
      return mode;
    }
    if (next_hi > next_lo) {
      ++hi;
      mass_hi = next_hi;
      cumulative += mass_hi;
      if (u < cumulative) return hi;
    } else {
      --lo;
      mass_lo = next_lo;
      cumulative += mass_lo;
      if (u < cumulative) return lo;
    }
  }
}

double SampleGamma(RngStream& rng, double shape, double scale) {
  if (shape < 1.0) {
    const double u = rng.UniformPositiveDouble();
    return SampleGamma(rng, shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = SampleStandardNormal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.UniformPositiveDouble();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v * scale;
    }
  }
}

double SampleGammaSumOfExponentials(RngStream& rng, uint64_t shape,
                                    double scale) {
  double total = 0.0;
  for (uint64_t i = 0; i < shape; ++i) {
    total -= std::log(rng.UniformPositiveDouble());
  }
  return total * scale;
}

void FlipRandomPositions(std::span<uint64_t> words, uint32_t bits,
                         uint32_t count, RngStream& rng) {
  count = std::min(count, bits);
  if (count == 0) return;
  constexpr size_t kInlineWords = 8;
  std::array<uint64_t, kInlineWords> inline_mask{};
  std::vector<uint64_t> heap_mask;
  std::span<uint64_t> mask;
  if (words.size() <= kInlineWords) {
    mask = std::span<uint64_t>(inline_mask).first(words.size());
  } else {
    heap_mask.assign(words.size(), 0);
    mask = heap_mask;
  }
  // Floyd: each j adds one new element of [0, j] to the subset.
  for (uint64_t j = bits - count; j < bits; ++j) {
    const uint64_t t = rng.UniformBelow(j + 1);
    const uint64_t t_bit = uint64_t{1} << (t % 64);
    if (mask[t / 64] & t_bit) {
      mask[j / 64] |= uint64_t{1} << (j % 64);
    } else {
      mask[t / 64] |= t_bit;
    }
  }
  for (size_t i = 0; i < words.size(); ++i) words[i] ^= mask[i];
}

absl::StatusOr<RandomizedResponse> RandomizedResponse::Create(double epsilon) {
  auto flip = RrFlipProbability(epsilon);
  if (!flip.ok()) return flip.status();
  return RandomizedResponse(epsilon, *flip);
}

void RandomizedResponse::PerturbInPlace(std::span<uint64_t> words,
                                        uint32_t bits, RngStream& rng) const {
  const auto flips =
      static_cast<uint32_t>(SampleBinomial(rng, bits, flip_probability_));
  FlipRandomPositions(words, bits, flips, rng);
}

BinaryCode RandomizedResponse::Perturb(CodeView code, RngStream& rng) const {
  BinaryCode out(code);
  PerturbInPlace(out.words(), out.bits(), rng);
  return out;
}

absl::StatusOr<BinaryCode> RrPerturb(CodeView code, double epsilon,
                                     RngStream& rng) {
  auto rr = RandomizedResponse::Create(epsilon);
  if (!rr.ok()) return rr.status();
  return rr->Perturb(code, rng);
}

absl::StatusOr<std::vector<double>> RrExactLogDistribution(CodeView input,
                                                           double epsilon) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  if (input.bits == 0 || input.bits > kMaxExactDistributionBits) {
    return absl::OutOfRangeError(
        absl::StrCat("code space too large: ", input.bits, " bits (max ",
                     kMaxExactDistributionBits, ")"));
  }
  const uint32_t bits = input.bits;
  const double log_keep = RrLogKeepProbability(epsilon);
  const double log_flip = RrLogFlipProbability(epsilon);
  const uint64_t w = input.words[0];
  std::vector<double> out(size_t{1} << bits);
  for (uint64_t y = 0; y < out.size(); ++y) {
    const int d = std::popcount(y ^ w);
    out[y] = (bits - d) * log_keep + d * log_flip;
  }
  return out;
}

absl::StatusOr<std::vector<double>> RrExactDistribution(CodeView input,
                                                        double epsilon) {
  auto out = RrExactLogDistribution(input, epsilon);
  if (!out.ok()) return out.status();
  for (double& v : *out) v = std::exp(v);
  return out;
}

void SampleUnitDirection(std::span<double> out, RngStream& rng) {
  while (true) {
    double norm2 = 0.0;
    for (double& v : out) {
      v = SampleStandardNormal(rng);
      norm2 += v * v;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& v : out) v *= inv;
      return;
    }
  }
}

double SampleMadlibNoise(std::span<double> out, double epsilon,
                         RngStream& rng) {
  SampleUnitDirection(out, rng);
  const double radius =
      SampleGamma(rng, static_cast<double>(out.size()), 1.0 / epsilon);
  for (double& v : out) v *= radius;
  return radius;
}

absl::StatusOr<std::vector<double>> MadlibNoise(size_t dim, double epsilon,
                                                RngStream& rng) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  if (dim == 0) return absl::InvalidArgumentError("dimension must be positive");
  std::vector<double> out(dim);
  SampleMadlibNoise(out, epsilon, rng);
  return out;
}

}  // namespace brr
