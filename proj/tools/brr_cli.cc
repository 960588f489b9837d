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

// Command-line front end for the brr library.
//
// Exit status: 0 success, 1 data error, 2 usage error, 3 audit failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "brr/audit.h"
#include "brr/bemb_io.h"
#include "brr/bench.h"
#include "brr/embeddings.h"
#include "brr/mechanisms.h"
#include "brr/nn_index.h"
#include "brr/privacy_ratio.h"
#include "brr/status_macros.h"
#include "nlohmann/json.hpp"

namespace brr {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAudit = 3;

struct Common {
  uint64_t seed = 0;
  std::string report_path;
};

// Reports go to --report when given, standard error otherwise.
absl::Status EmitReport(const Common& common, const Json& json) {
  const std::string text = json.dump(2) + "\n";
  if (common.report_path.empty()) {
    std::cerr << text;
    return absl::OkStatus();
  }
  std::ofstream out(common.report_path, std::ios::binary);
  out << text;
  if (!out) {
    return absl::UnavailableError("cannot write report to '" +
                                  common.report_path + "'");
  }
  return absl::OkStatus();
}

void PrintConfig(std::string_view command, const Json& config) {
  Json line;
  line["command"] = std::string(command);
  line["config"] = config;
  std::cerr << line.dump() << "\n";
}

absl::StatusOr<Acceleration> ParseAcceleration(const std::string& name,
                                               uint32_t substrings) {
  if (name == "linear") return Acceleration::LinearScan();
  if (name == "multi") return Acceleration::MultiIndex(substrings);
  return absl::InvalidArgumentError("unknown acceleration '" + name + "'");
}

// Loads codes from a BEMB file.
absl::StatusOr<BinaryEmbeddings> LoadBinary(const std::string& path) {
  if (!LooksLikeBemb(path)) {
    return absl::InvalidArgumentError("'" + path +
                                      "' is not a BEMB file; run binarize");
  }
  return ReadBembFile(path);
}

// Either a text or BEMB embedding file, detected by magic.
struct AnyEmbeddings {
  std::optional<TextEmbeddings> text;
  std::optional<BinaryEmbeddings> binary;
};

absl::StatusOr<AnyEmbeddings> LoadAny(const std::string& path) {
  AnyEmbeddings any;
  if (LooksLikeBemb(path)) {
    BRR_ASSIGN_OR_RETURN(BinaryEmbeddings binary, ReadBembFile(path));
    any.binary = std::move(binary);
  } else {
    BRR_ASSIGN_OR_RETURN(TextEmbeddings text, LoadTextEmbeddingsFile(path));
    any.text = std::move(text);
  }
  return any;
}

absl::StatusOr<DistanceAggregate> Aggregate(const AnyEmbeddings& any,
                                            const AggregateOptions& options) {
  if (any.binary) return AggregateDistancesHamming(any.binary->codes, options);
  return AggregateDistancesEuclid(any.text->vectors, options);
}

// ---- binarize ---------------------------------------------------------------

struct BinarizeArgs {
  std::string input;
  std::string output;
  std::string method = "hyperplane";
  uint32_t bits = 256;
};

absl::Status RunBinarize(const BinarizeArgs& args, const Common& common) {
  PrintConfig("binarize", {{"input", args.input},
                           {"output", args.output},
                           {"method", args.method},
                           {"bits", args.bits},
                           {"seed", common.seed}});
  BRR_ASSIGN_OR_RETURN(TextEmbeddings text, LoadTextEmbeddingsFile(args.input));
  absl::StatusOr<BinaryCodeMatrix> codes =
      args.method == "median"
          ? BinarizeMedian(text.vectors)
          : BinarizeHyperplane(text.vectors, args.bits, common.seed);
  if (!codes.ok()) return codes.status();
  BRR_RETURN_IF_ERROR(WriteBembFile(args.output, text.vocabulary, *codes));
  BRR_ASSIGN_OR_RETURN(StorageReport storage,
                       MeasureStorage(text.vocabulary, text.vectors, *codes));
  return EmitReport(common, {{"words", text.vocabulary.size()},
                             {"dim", text.vectors.dim()},
                             {"bits", codes->bits()},
                             {"real_bytes", storage.real_bytes},
                             {"binary_bytes", storage.binary_bytes},
                             {"compression_pct", storage.compression_pct},
                             {"bemb_file_bytes", storage.bemb_file_bytes}});
}

// ---- index ------------------------------------------------------------------

struct IndexArgs {
  std::string embeddings;
  std::string acceleration = "multi";
  uint32_t substrings = 4;
  size_t queries = 1000;
};

absl::Status RunIndex(const IndexArgs& args, const Common& common) {
  PrintConfig("index", {{"embeddings", args.embeddings},
                        {"acceleration", args.acceleration},
                        {"substrings", args.substrings},
                        {"queries", args.queries},
                        {"seed", common.seed}});
  BRR_ASSIGN_OR_RETURN(Acceleration acc,
                       ParseAcceleration(args.acceleration, args.substrings));
  BRR_ASSIGN_OR_RETURN(BinaryEmbeddings data, LoadBinary(args.embeddings));
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  BRR_ASSIGN_OR_RETURN(HammingIndex index,
                       HammingIndex::Build(data.codes, acc));
  const double build_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  // Queries are RR-perturbed vocabulary codes; every answer is checked
  // against a linear scan.
  RngStream rng(common.seed, 0);
  size_t mismatches = 0;
  double query_ns = 0.0;
  for (size_t q = 0; q < args.queries; ++q) {
    const uint32_t id = static_cast<uint32_t>(rng.UniformBelow(index.size()));
    BinaryCode code(data.codes.row(id));
    FlipRandomPositions(code.words(), code.bits(),
                        rng.UniformBelow(code.bits() / 4 + 1), rng);
    const auto t0 = Clock::now();
    const HammingMatch got = index.NearestUnchecked(code.words().data());
    query_ns += std::chrono::duration<double, std::nano>(Clock::now() - t0)
                    .count();
    if (!(got == index.LinearScan(code.words().data()))) ++mismatches;
  }
  return EmitReport(
      common,
      {{"words", index.size()},
       {"bits", index.bits()},
       {"acceleration", args.acceleration},
       {"substring_count", index.substring_count()},
       {"payload_bytes", index.PayloadBytes()},
       {"bucket_bytes", index.BucketBytes()},
       {"build_ms", build_ms},
       {"queries", args.queries},
       {"mean_query_ns", args.queries ? query_ns / args.queries : 0.0},
       {"linear_scan_mismatches", mismatches}});
}

// ---- privatize --------------------------------------------------------------

struct PrivatizeArgs {
  std::string mechanism = "brr";
  double epsilon = 1.0;
  std::string embeddings;
  std::string input = "-";
  std::string output = "-";
  std::string oov = "pass";
  unsigned threads = 1;
  std::string acceleration = "linear";
  bool epsilon_from_madlib = false;
  std::string madlib_embeddings;
  std::string aggregate = "avg";
};

// Whitespace-delimited tokens; line structure is kept for the output.
struct TokenLines {
  std::vector<std::string> tokens;
  std::vector<size_t> line_ends;  // token count after each line
};

absl::StatusOr<TokenLines> ReadTokens(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) return absl::NotFoundError("cannot open '" + path + "'");
    in = &file;
  }
  TokenLines lines;
  std::string line;
  while (std::getline(*in, line)) {
    std::istringstream words(line);
    std::string token;
    while (words >> token) lines.tokens.push_back(token);
    lines.line_ends.push_back(lines.tokens.size());
  }
  return lines;
}

AggregateKind ParseAggregate(const std::string& name) {
  return name == "max" ? AggregateKind::kMax : AggregateKind::kAvg;
}

absl::Status RunPrivatize(const PrivatizeArgs& args, const Common& common) {
  PrintConfig("privatize", {{"mechanism", args.mechanism},
                            {"epsilon", args.epsilon},
                            {"embeddings", args.embeddings},
                            {"input", args.input},
                            {"output", args.output},
                            {"oov", args.oov},
                            {"threads", args.threads},
                            {"acceleration", args.acceleration},
                            {"epsilon_from_madlib", args.epsilon_from_madlib},
                            {"madlib_embeddings", args.madlib_embeddings},
                            {"aggregate", args.aggregate},
                            {"seed", common.seed}});
  const MechanismKind kind =
      args.mechanism == "madlib" ? MechanismKind::kMadlib : MechanismKind::kBrr;
  const OovPolicy oov =
      args.oov == "drop" ? OovPolicy::kDrop : OovPolicy::kPassThrough;

  Json report;
  double epsilon = args.epsilon;
  std::unique_ptr<WordMechanism> mechanism;
  if (kind == MechanismKind::kBrr) {
    BRR_ASSIGN_OR_RETURN(BinaryEmbeddings data, LoadBinary(args.embeddings));
    if (args.epsilon_from_madlib) {
      // The given epsilon is calibrated for Madlib on the real embeddings.
      BRR_ASSIGN_OR_RETURN(TextEmbeddings real,
                           LoadTextEmbeddingsFile(args.madlib_embeddings));
      AggregateOptions options;
      options.seed = common.seed;
      BRR_ASSIGN_OR_RETURN(DistanceAggregate agg_a,
                           AggregateDistancesEuclid(real.vectors, options));
      BRR_ASSIGN_OR_RETURN(DistanceAggregate agg_b,
                           AggregateDistancesHamming(data.codes, options));
      BRR_ASSIGN_OR_RETURN(RatioReport ratio,
                           TransferEpsilon(args.epsilon, agg_a, agg_b,
                                           ParseAggregate(args.aggregate)));
      epsilon = ratio.epsilon_b;
      report["ratio"] = Json::parse(RatioReportJson(ratio, agg_a, agg_b));
    }
    BRR_ASSIGN_OR_RETURN(Acceleration acc,
                         ParseAcceleration(args.acceleration, 4));
    BRR_ASSIGN_OR_RETURN(BrrMechanism brr,
                         BrrMechanism::Create(std::move(data.vocabulary),
                                              std::move(data.codes), acc));
    mechanism = std::make_unique<BrrMechanism>(std::move(brr));
  } else {
    BRR_ASSIGN_OR_RETURN(TextEmbeddings data,
                         LoadTextEmbeddingsFile(args.embeddings));
    BRR_ASSIGN_OR_RETURN(MadlibMechanism madlib,
                         MadlibMechanism::Create(std::move(data.vocabulary),
                                                 std::move(data.vectors)));
    mechanism = std::make_unique<MadlibMechanism>(std::move(madlib));
  }
  BRR_ASSIGN_OR_RETURN(MechanismConfig config,
                       MechanismConfig::Create(kind, epsilon, oov));
  BRR_ASSIGN_OR_RETURN(TokenLines lines, ReadTokens(args.input));
  BRR_ASSIGN_OR_RETURN(PrivatizedStream out,
                       PrivatizeStream(lines.tokens, config, *mechanism,
                                       common.seed, args.threads));

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (args.output != "-") {
    file.open(args.output, std::ios::binary);
    if (!file) {
      return absl::UnavailableError("cannot write '" + args.output + "'");
    }
    os = &file;
  }
  if (oov == OovPolicy::kPassThrough) {
    // One output per input token, so the line layout carries over.
    size_t begin = 0;
    for (size_t end : lines.line_ends) {
      for (size_t i = begin; i < end; ++i) {
        if (i > begin) *os << ' ';
        *os << out.tokens[i];
      }
      *os << '\n';
      begin = end;
    }
  } else {
    for (size_t i = 0; i < out.tokens.size(); ++i) {
      *os << out.tokens[i] << '\n';
    }
  }
  os->flush();
  if (!*os) return absl::UnavailableError("write failed");

  report["mechanism"] = std::string(MechanismName(kind));
  report["epsilon"] = epsilon;
  report["seed"] = common.seed;
  report["report"] = Json::parse(out.report.ToJson());
  report["unchanged_fraction"] = out.report.unchanged_fraction();
  if (out.report.tokens_oov > 0 && oov == OovPolicy::kPassThrough) {
    std::cerr << "warning: " << out.report.tokens_oov
              << " out-of-vocabulary tokens were passed through unprotected\n";
  }
  return EmitReport(common, report);
}

// ---- ratio ------------------------------------------------------------------

struct RatioArgs {
  std::string embeddings_a;
  std::string embeddings_b;
  std::string aggregate = "avg";
  double epsilon_a = 1.0;
  bool unordered_pairs = false;
  size_t exact_threshold = 20000;
  uint64_t sample_pairs = 1'000'000;
  unsigned threads = 0;
};

absl::Status RunRatio(const RatioArgs& args, const Common& common) {
  PrintConfig("ratio", {{"embeddings_a", args.embeddings_a},
                        {"embeddings_b", args.embeddings_b},
                        {"aggregate", args.aggregate},
                        {"epsilon_a", args.epsilon_a},
                        {"unordered_pairs", args.unordered_pairs},
                        {"exact_threshold", args.exact_threshold},
                        {"sample_pairs", args.sample_pairs},
                        {"threads", args.threads},
                        {"seed", common.seed}});
  AggregateOptions options;
  options.exact_threshold = args.exact_threshold;
  options.sample_pairs = args.sample_pairs;
  options.seed = common.seed;
  options.include_self_pairs = !args.unordered_pairs;
  options.threads = args.threads;
  BRR_ASSIGN_OR_RETURN(AnyEmbeddings a, LoadAny(args.embeddings_a));
  BRR_ASSIGN_OR_RETURN(AnyEmbeddings b, LoadAny(args.embeddings_b));
  BRR_ASSIGN_OR_RETURN(DistanceAggregate agg_a, Aggregate(a, options));
  BRR_ASSIGN_OR_RETURN(DistanceAggregate agg_b, Aggregate(b, options));
  BRR_ASSIGN_OR_RETURN(RatioReport ratio,
                       TransferEpsilon(args.epsilon_a, agg_a, agg_b,
                                       ParseAggregate(args.aggregate)));
  const std::string json = RatioReportJson(ratio, agg_a, agg_b);
  std::cout << json << "\n";
  if (!common.report_path.empty()) {
    BRR_RETURN_IF_ERROR(EmitReport(common, Json::parse(json)));
  }
  return absl::OkStatus();
}

// ---- audit ------------------------------------------------------------------

struct AuditArgs {
  uint32_t bits = 4;
  size_t vocab_size = 8;
  double epsilon = 1.0;
};

// Returns whether every audit passed.
absl::StatusOr<bool> RunAudit(const AuditArgs& args, const Common& common) {
  PrintConfig("audit", {{"bits", args.bits},
                        {"vocab_size", args.vocab_size},
                        {"epsilon", args.epsilon},
                        {"seed", common.seed}});
  BRR_ASSIGN_OR_RETURN(AuditResult rr, AuditRr(args.bits, args.epsilon));
  Json json;
  json["rr"] = Json::parse(rr.ToJson());
  bool ok = rr.ok();
  if (args.vocab_size > 0) {
    // Distinct random codes of the requested width form the vocabulary.
    const uint64_t space = uint64_t{1} << args.bits;
    const size_t vocab = static_cast<size_t>(
        std::min<uint64_t>(args.vocab_size, space));
    RngStream rng(common.seed, 0);
    std::vector<bool> used(space, false);
    std::vector<BinaryCode> codes;
    while (codes.size() < vocab) {
      const uint64_t value = rng.UniformBelow(space);
      if (used[value]) continue;
      used[value] = true;
      codes.push_back(BinaryCode::FromInteger(value, args.bits));
    }
    BRR_ASSIGN_OR_RETURN(BinaryCodeMatrix matrix,
                         BinaryCodeMatrix::FromCodes(codes));
    BRR_ASSIGN_OR_RETURN(AuditResult brr, AuditBrr(matrix, args.epsilon));
    json["brr"] = Json::parse(brr.ToJson());
    ok = ok && brr.ok();
  }
  json["pass"] = ok;
  std::cout << json.dump(2) << "\n";
  if (!common.report_path.empty()) {
    BRR_RETURN_IF_ERROR(EmitReport(common, json));
  }
  return ok;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  BenchConfig config;
  std::string acceleration = "linear";
  std::string csv_path;
};

absl::Status RunBenchCommand(BenchArgs args, const Common& common) {
  args.config.seed = common.seed;
  PrintConfig("bench", {{"vocab_size", args.config.vocab_size},
                        {"dim", args.config.real_dim},
                        {"bits", args.config.binary_bits},
                        {"samples", args.config.samples},
                        {"repetitions", args.config.repetitions},
                        {"epsilon", args.config.epsilon},
                        {"acceleration", args.acceleration},
                        {"seed", common.seed}});
  BRR_ASSIGN_OR_RETURN(args.config.acceleration,
                       ParseAcceleration(args.acceleration, 4));
  BRR_ASSIGN_OR_RETURN(BenchReport report, RunBench(args.config));
  std::cout << report.ToTable();
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path, std::ios::binary);
    csv << report.ToCsv();
    if (!csv) {
      return absl::UnavailableError("cannot write '" + args.csv_path + "'");
    }
  }
  return EmitReport(common, Json::parse(report.ToJson()));
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return kExitData;
}

int Main(int argc, char** argv) {
  CLI::App app{"Word-level metric differential privacy over binary embeddings"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "RNG seed")->capture_default_str();
  app.add_option("--report", common.report_path,
                 "Write the JSON report here instead of standard error");

  BinarizeArgs bin;
  CLI::App* binarize = app.add_subcommand("binarize", "Text embeddings to BEMB");
  binarize->add_option("--input", bin.input)->required();
  binarize->add_option("--output", bin.output)->required();
  binarize->add_option("--method", bin.method)
      ->check(CLI::IsMember({"median", "hyperplane"}))
      ->capture_default_str();
  binarize->add_option("--bits", bin.bits)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  IndexArgs idx;
  CLI::App* index = app.add_subcommand("index", "Build and check an index");
  index->add_option("--embeddings", idx.embeddings)->required();
  index->add_option("--acceleration", idx.acceleration)
      ->check(CLI::IsMember({"linear", "multi"}))
      ->capture_default_str();
  index->add_option("--substrings", idx.substrings)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  index->add_option("--queries", idx.queries)->capture_default_str();

  PrivatizeArgs priv;
  CLI::App* privatize = app.add_subcommand("privatize", "Privatize tokens");
  privatize->add_option("--mechanism", priv.mechanism)
      ->check(CLI::IsMember({"brr", "madlib"}))
      ->capture_default_str();
  privatize->add_option("--epsilon", priv.epsilon)
      ->check(CLI::PositiveNumber)
      ->required();
  privatize->add_option("--embeddings", priv.embeddings)->required();
  privatize->add_option("--input", priv.input, "Token file, - for stdin")
      ->capture_default_str();
  privatize->add_option("--output", priv.output, "Token file, - for stdout")
      ->capture_default_str();
  privatize->add_option("--oov", priv.oov)
      ->check(CLI::IsMember({"pass", "drop"}))
      ->capture_default_str();
  privatize->add_option("--threads", priv.threads)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  privatize->add_option("--acceleration", priv.acceleration)
      ->check(CLI::IsMember({"linear", "multi"}))
      ->capture_default_str();
  CLI::Option* from_madlib = privatize->add_flag(
      "--epsilon-from-madlib", priv.epsilon_from_madlib,
      "Treat --epsilon as Madlib-calibrated and transfer it to BRR");
  privatize
      ->add_option("--madlib-embeddings", priv.madlib_embeddings,
                   "Real embeddings that calibrate --epsilon-from-madlib")
      ->needs(from_madlib);
  from_madlib->needs(privatize->get_option("--madlib-embeddings"));
  privatize->add_option("--aggregate", priv.aggregate)
      ->check(CLI::IsMember({"max", "avg"}))
      ->capture_default_str();

  RatioArgs rat;
  CLI::App* ratio = app.add_subcommand("ratio", "Privacy ratio between spaces");
  ratio->add_option("--embeddings-a", rat.embeddings_a)->required();
  ratio->add_option("--embeddings-b", rat.embeddings_b)->required();
  ratio->add_option("--aggregate", rat.aggregate)
      ->check(CLI::IsMember({"max", "avg"}))
      ->capture_default_str();
  ratio->add_option("--epsilon-a", rat.epsilon_a)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ratio->add_flag("--unordered-pairs", rat.unordered_pairs,
                  "Average over unordered distinct pairs instead of |X|^2");
  ratio->add_option("--exact-threshold", rat.exact_threshold)
      ->capture_default_str();
  ratio->add_option("--sample-pairs", rat.sample_pairs)->capture_default_str();
  ratio->add_option("--threads", rat.threads, "0 = all cores")
      ->capture_default_str();

  AuditArgs aud;
  CLI::App* audit = app.add_subcommand("audit", "Exhaustive privacy audit");
  audit->add_option("--bits", aud.bits)
      ->check(CLI::Range(1u, kMaxAuditBits))
      ->capture_default_str();
  audit->add_option("--vocab-size", aud.vocab_size, "0 skips the BRR audit")
      ->check(CLI::Range(size_t{0}, kMaxAuditVocabulary))
      ->capture_default_str();
  audit->add_option("--epsilon", aud.epsilon)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BenchArgs ben;
  CLI::App* bench = app.add_subcommand("bench", "Storage and latency bench");
  bench->add_option("--vocab-size", ben.config.vocab_size)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--samples", ben.config.samples)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--epsilon", ben.config.epsilon)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--dim", ben.config.real_dim)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--bits", ben.config.binary_bits)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--repetitions", ben.config.repetitions)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--acceleration", ben.acceleration)
      ->check(CLI::IsMember({"linear", "multi"}))
      ->capture_default_str();
  bench->add_option("--csv", ben.csv_path, "Also write a CSV row here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  absl::Status status;
  if (binarize->parsed()) {
    status = RunBinarize(bin, common);
  } else if (index->parsed()) {
    status = RunIndex(idx, common);
  } else if (privatize->parsed()) {
    status = RunPrivatize(priv, common);
  } else if (ratio->parsed()) {
    status = RunRatio(rat, common);
  } else if (audit->parsed()) {
    absl::StatusOr<bool> passed = RunAudit(aud, common);
    if (!passed.ok()) return Fail(passed.status());
    return *passed ? kExitOk : kExitAudit;
  } else if (bench->parsed()) {
    status = RunBenchCommand(ben, common);
  }
  return status.ok() ? kExitOk : Fail(status);
}

}  // namespace
}  // namespace brr

int main(int argc, char** argv) { return brr::Main(argc, argv); }
