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

#include "brr/nn_index.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace brr {
namespace {

constexpr uint32_t kNoDistance = std::numeric_limits<uint32_t>::max();

uint64_t ExtractBits(const uint64_t* words, uint32_t begin, uint32_t width) {
  const uint32_t word = begin / 64;
  const uint32_t offset = begin % 64;
  uint64_t value = words[word] >> offset;
  if (offset != 0 && offset + width > 64) {
    value |= words[word + 1] << (64 - offset);
  }
  if (width < 64) value &= (uint64_t{1} << width) - 1;
  return value;
}

uint64_t LowBits(uint32_t count) {
  return count >= 64 ? ~uint64_t{0} : (uint64_t{1} << count) - 1;
}

double Choose(uint32_t n, uint32_t k) {
  if (k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

// Calls fn(mask) for every `width`-bit mask with exactly `radius` bits set,
// in increasing numeric order (Gosper's hack).
template <typename Fn>
void ForEachMask(uint32_t width, uint32_t radius, Fn&& fn) {
  if (radius > width) return;
  if (radius == 0) {
    fn(uint64_t{0});
    return;
  }
  const uint64_t last = LowBits(radius) << (width - radius);
  uint64_t mask = LowBits(radius);
  while (true) {
    fn(mask);
    if (mask == last) return;
    const uint64_t c = mask & (~mask + 1);
    const uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

bool Better(uint32_t distance, uint32_t id, const HammingMatch& best) {
  return distance < best.distance ||
         (distance == best.distance && id < best.id);
}

}  // namespace

absl::StatusOr<HammingIndex> HammingIndex::Build(BinaryCodeMatrix codes,
                                                 Acceleration acceleration) {
  if (codes.rows() == 0) {
    return absl::InvalidArgumentError("empty index: no codes");
  }
  if (codes.rows() > std::numeric_limits<uint32_t>::max()) {
    return absl::InvalidArgumentError("too many codes for a 32-bit id space");
  }
  HammingIndex index(std::move(codes), acceleration);
  if (acceleration.kind == Acceleration::Kind::kMultiIndex) {
    if (acceleration.substring_count == 0) {
      return absl::InvalidArgumentError("substring_count must be positive");
    }
    index.BuildTables(acceleration.substring_count);
  }
  return index;
}

void HammingIndex::BuildTables(uint32_t substring_count) {
  const uint32_t bits = codes_.bits();
  uint32_t m = std::min(substring_count, bits);
  m = std::max<uint32_t>(m, static_cast<uint32_t>(WordsForBits(bits)));
  tables_.resize(m);
  std::vector<std::pair<uint64_t, uint32_t>> entries(codes_.rows());
  for (uint32_t s = 0; s < m; ++s) {
    SubstringTable& table = tables_[s];
    table.begin_bit = static_cast<uint32_t>(uint64_t{s} * bits / m);
    table.width =
        static_cast<uint32_t>(uint64_t{s + 1} * bits / m) - table.begin_bit;
    for (uint32_t i = 0; i < codes_.rows(); ++i) {
      entries[i] = {ExtractBits(codes_.row_data(i), table.begin_bit,
                                table.width),
                    i};
    }
    std::sort(entries.begin(), entries.end());
    table.ids.resize(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i == 0 || entries[i].first != entries[i - 1].first) {
        table.keys.push_back(entries[i].first);
        table.offsets.push_back(static_cast<uint32_t>(i));
      }
      table.ids[i] = entries[i].second;
    }
    table.offsets.push_back(static_cast<uint32_t>(entries.size()));
  }
}

size_t HammingIndex::BucketBytes() const {
  size_t total = 0;
  for (const SubstringTable& table : tables_) {
    total += table.keys.size() * sizeof(uint64_t) +
             table.offsets.size() * sizeof(uint32_t) +
             table.ids.size() * sizeof(uint32_t);
  }
  return total;
}

absl::StatusOr<HammingMatch> HammingIndex::Nearest(CodeView query) const {
  if (query.bits != codes_.bits() ||
      query.words.size() != codes_.words_per_code()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "bit width mismatch: query ", query.bits, ", index ", codes_.bits()));
  }
  return NearestUnchecked(query.words.data());
}

HammingMatch HammingIndex::NearestUnchecked(const uint64_t* query) const {
  if (tables_.empty()) return LinearScan(query);
  return MultiIndexSearch(query, nullptr, nullptr);
}

HammingMatch HammingIndex::NearestWithStats(
    const uint64_t* query, HammingQueryStats* stats,
    std::vector<uint32_t>* candidates) const {
  if (tables_.empty()) {
    if (stats != nullptr) {
      stats->candidates_checked = size();
      stats->fell_back_to_scan = true;
    }
    if (candidates != nullptr) {
      for (uint32_t i = 0; i < size(); ++i) candidates->push_back(i);
    }
    return LinearScan(query);
  }
  return MultiIndexSearch(query, stats, candidates);
}

HammingMatch HammingIndex::LinearScan(const uint64_t* query) const {
  const size_t stride = codes_.words_per_code();
  const uint64_t* data = codes_.data().data();
  HammingMatch best{0, kNoDistance};
  const size_t rows = codes_.rows();
  for (size_t i = 0; i < rows; ++i) {
    const uint32_t d = HammingWords(data + i * stride, query, stride);
    if (d < best.distance) {
      best = {static_cast<uint32_t>(i), d};
      if (d == 0) break;
    }
  }
  return best;
}

HammingMatch HammingIndex::MultiIndexSearch(
    const uint64_t* query, HammingQueryStats* stats,
    std::vector<uint32_t>* candidates) const {
  const size_t stride = codes_.words_per_code();
  const uint32_t m = substring_count();
  HammingMatch best{std::numeric_limits<uint32_t>::max(), kNoDistance};
  size_t checked = 0;

  auto consider = [&](uint32_t id) {
    const uint32_t d = HammingWords(codes_.row_data(id), query, stride);
    ++checked;
    if (candidates != nullptr) candidates->push_back(id);
    if (Better(d, id, best)) best = {id, d};
  };

  std::vector<uint64_t> query_keys(m);
  uint32_t max_width = 0;
  for (uint32_t s = 0; s < m; ++s) {
    query_keys[s] =
        ExtractBits(query, tables_[s].begin_bit, tables_[s].width);
    max_width = std::max(max_width, tables_[s].width);
  }

  const double budget = static_cast<double>(size());
  double spent = 0.0;
  for (uint32_t radius = 0; radius <= max_width; ++radius) {
    double cost = 0.0;
    for (const SubstringTable& table : tables_) {
      cost += Choose(table.width, radius);
    }
    if (spent + cost > budget) {
      if (stats != nullptr) {
        stats->candidates_checked = checked + size();
        stats->fell_back_to_scan = true;
      }
      if (candidates != nullptr) {
        for (uint32_t i = 0; i < size(); ++i) candidates->push_back(i);
      }
      return LinearScan(query);
    }
    spent += cost;
    for (uint32_t s = 0; s < m; ++s) {
      const SubstringTable& table = tables_[s];
      ForEachMask(table.width, radius, [&](uint64_t mask) {
        const uint64_t key = query_keys[s] ^ mask;
        auto it = std::lower_bound(table.keys.begin(), table.keys.end(), key);
        if (it == table.keys.end() || *it != key) return;
        const size_t bucket = static_cast<size_t>(it - table.keys.begin());
        for (uint32_t k = table.offsets[bucket]; k < table.offsets[bucket + 1];
             ++k) {
          consider(table.ids[k]);
        }
      });
    }
    if (stats != nullptr) {
      stats->radius_reached = radius;
      stats->candidates_checked = checked;
    }
    // Unseen codes are at distance >= m * (radius + 1).
    if (best.distance != kNoDistance &&
        uint64_t{best.distance} < uint64_t{m} * (radius + 1)) {
      return best;
    }
  }
  return best;
}

absl::StatusOr<EuclidIndex> EuclidIndex::Build(RealEmbeddingMatrix vectors) {
  if (vectors.rows() == 0) {
    return absl::InvalidArgumentError("empty index: no vectors");
  }
  return EuclidIndex(std::move(vectors));
}

absl::StatusOr<EuclidMatch> EuclidIndex::Nearest(
    std::span<const double> query) const {
  if (query.size() != vectors_.dim()) {
    return absl::InvalidArgumentError(
        absl::StrCat("dimension mismatch: query ", query.size(), ", index ",
                     vectors_.dim()));
  }
  return NearestUnchecked(query);
}

EuclidMatch EuclidIndex::NearestUnchecked(
    std::span<const double> query) const {
  const size_t dim = vectors_.dim();
  const size_t rows = vectors_.rows();
  const double* data = vectors_.values().data();
  const double* q = query.data();
  size_t best_id = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rows; ++i) {
    const double* row = data + i * dim;
    double sq = 0.0;
    for (size_t k = 0; k < dim; ++k) {
      const double diff = row[k] - q[k];
      sq += diff * diff;
    }
    if (sq < best_sq) {
      best_sq = sq;
      best_id = i;
    }
  }
  return EuclidMatch{static_cast<uint32_t>(best_id), std::sqrt(best_sq)};
}

}  // namespace brr
