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

#ifndef BRR_NOISE_H_
#define BRR_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "brr/binary_codes.h"
#include "brr/rng.h"

namespace brr {

enum class Metric { kHamming, kEuclidean };

std::string_view MetricName(Metric metric);

// Privacy parameter epsilon together with the metric it is calibrated for.
class PrivacyParams {
 public:
  // Fails with InvalidArgument ("non-positive epsilon") unless epsilon is
  // positive and finite.
  static absl::StatusOr<PrivacyParams> Create(double epsilon, Metric metric);

  double epsilon() const { return epsilon_; }
  Metric metric() const { return metric_; }

 private:
  PrivacyParams(double epsilon, Metric metric)
      : epsilon_(epsilon), metric_(metric) {}

  double epsilon_;
  Metric metric_;
};

absl::Status ValidateEpsilon(double epsilon);

// e^eps / (1 + e^eps), evaluated as 1 / (1 + e^-eps).
absl::StatusOr<double> RrKeepProbability(double epsilon);
// 1 / (1 + e^eps).
absl::StatusOr<double> RrFlipProbability(double epsilon);

// ln of the keep and flip probabilities, stable for large epsilon.
double RrLogKeepProbability(double epsilon);
double RrLogFlipProbability(double epsilon);

// --- Samplers. All consume draws from `rng` only. ---

// Standard normal by the Marsaglia polar method.
double SampleStandardNormal(RngStream& rng);

// Exact Binomial(n, p) draw by inversion. Outcomes are visited outward from
// the mode, always taking the side with the larger next mass, so the
// expected work is O(sqrt(n p (1 - p))).
uint64_t SampleBinomial(RngStream& rng, uint64_t n, double p);

// Gamma(shape, scale) by the Marsaglia-Tsang squeeze/rejection method.
// Shapes below 1 use the boost Gamma(shape + 1) * U^(1/shape).
double SampleGamma(RngStream& rng, double shape, double scale);

// Gamma(shape, scale) for integer shape as a sum of exponentials. Slow;
// exists to cross-check SampleGamma.
double SampleGammaSumOfExponentials(RngStream& rng, uint64_t shape,
                                    double scale);

// Flips exactly `count` distinct positions among the first `bits` bits of
// `words`, chosen uniformly (Floyd's subset sampling). Padding is untouched.
void FlipRandomPositions(std::span<uint64_t> words, uint32_t bits,
                         uint32_t count, RngStream& rng);

// Per-bit randomized response over packed codes.
//
// Each data bit flips independently with probability 1 / (1 + e^eps). The
// draw is done as K ~ Binomial(bits, flip probability) followed by K
// distinct uniform positions XORed into the code.
class RandomizedResponse {
 public:
  static absl::StatusOr<RandomizedResponse> Create(double epsilon);

  double epsilon() const { return epsilon_; }
  double flip_probability() const { return flip_probability_; }

  void PerturbInPlace(std::span<uint64_t> words, uint32_t bits,
                      RngStream& rng) const;
  BinaryCode Perturb(CodeView code, RngStream& rng) const;

 private:
  RandomizedResponse(double epsilon, double flip_probability)
      : epsilon_(epsilon), flip_probability_(flip_probability) {}

  double epsilon_;
  double flip_probability_;
};

absl::StatusOr<BinaryCode> RrPerturb(CodeView code, double epsilon,
                                     RngStream& rng);

// Largest code width for which the exact output distribution is enumerated.
inline constexpr uint32_t kMaxExactDistributionBits = 20;

// Exact output distribution of randomized response applied to `input`.
// Entry y is Pr[RR(input) = code y], where bit j of the index is bit j of the
// code. Fails with OutOfRange ("code space too large") above
// kMaxExactDistributionBits.
absl::StatusOr<std::vector<double>> RrExactDistribution(CodeView input,
                                                        double epsilon);
// Same, as natural logarithms.
absl::StatusOr<std::vector<double>> RrExactLogDistribution(CodeView input,
                                                           double epsilon);

// Noise with density proportional to exp(-eps * ||z||): a uniform direction
// on the unit sphere scaled by a Gamma(dim, 1 / eps) radius.
absl::StatusOr<std::vector<double>> MadlibNoise(size_t dim, double epsilon,
                                                RngStream& rng);

// Writes the noise into `out` (dim = out.size()) and returns the radius.
// `epsilon` must already be validated.
double SampleMadlibNoise(std::span<double> out, double epsilon,
                         RngStream& rng);

// Unit direction, uniform on the sphere in R^out.size().
void SampleUnitDirection(std::span<double> out, RngStream& rng);

}  // namespace brr

#endif  // BRR_NOISE_H_
