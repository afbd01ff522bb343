// Copyright 2026 The EDC Authors
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

#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_set>

#include "CLI11.hpp"
#include "edc/corpus.h"
#include "edc/curriculum.h"
#include "edc/schedule.h"
#include "edc/stats.h"
#include "edc/text.h"
#include "json.hpp"

namespace edc::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by every command that needs a schedule.
struct ScheduleFlags {
  std::optional<double> alpha;
  std::optional<std::int64_t> max_epoch;
  double floor = kDefaultFloor;

  void Register(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Per-epoch difficulty rate (overrides the max-epoch lookup)");
    cmd->add_option("--max-epoch", max_epoch, "Last epoch of training; picks alpha when --alpha is absent")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--floor", floor, "Lowest difficulty")->capture_default_str();
  }

  // With --alpha the schedule uses it directly; otherwise alpha comes from
  // --max-epoch. Commands that print one row per epoch need --max-epoch.
  DifficultySchedule Resolve(bool need_max_epoch) const {
    if (!alpha && !max_epoch) throw UsageError("one of --alpha or --max-epoch is required");
    if (need_max_epoch && !max_epoch) throw UsageError("--max-epoch is required for this command");
    const std::int64_t last = max_epoch.value_or(0);
    try {
      if (alpha) return DifficultySchedule(*alpha, last, floor);
      if (last < 1) throw UsageError("--max-epoch must be at least 1 when --alpha is not given");
      return DifficultySchedule::ForMaxEpoch(last, floor);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
};

std::optional<std::filesystem::path> StopwordPath(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("EDC_STOPWORDS"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::string FormatFixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string DumpLine(const ordered_json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

TokenizedCaption PrepareText(const std::string& text, std::string id, std::uint64_t ordinal,
                             const StopwordSet& sw) {
  TokenizedCaption c = Tokenize(text);
  c.source_id = std::move(id);
  c.ordinal = ordinal;
  return Classify(std::move(c), sw);
}

// One response line for one request line of the serve protocol.
ordered_json ServeRequest(const std::string& line, const TransformConfig& config) {
  nlohmann::json req;
  try {
    req = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object()) throw UsageError("request must be a JSON object");
  auto epoch_it = req.find("epoch");
  if (epoch_it == req.end() || !epoch_it->is_number_integer()) {
    throw UsageError("request needs an integer \"epoch\"");
  }
  const auto epoch = epoch_it->get<std::int64_t>();
  if (epoch < 0) throw UsageError("\"epoch\" must be non-negative");
  auto caps_it = req.find("captions");
  if (caps_it == req.end() || !caps_it->is_array()) {
    throw UsageError("request needs a \"captions\" array");
  }

  std::vector<TokenizedCaption> captions;
  captions.reserve(caps_it->size());
  std::unordered_set<std::uint64_t> ordinals;
  for (std::size_t i = 0; i < caps_it->size(); ++i) {
    const auto& item = (*caps_it)[i];
    const std::string where = "captions[" + std::to_string(i) + "]";
    if (!item.is_object()) throw UsageError(where + " must be an object");
    auto id = item.find("id");
    auto ordinal = item.find("ordinal");
    auto text = item.find("text");
    if (id == item.end() || !id->is_string()) throw UsageError(where + " needs a string \"id\"");
    if (ordinal == item.end() || !ordinal->is_number_unsigned()) {
      throw UsageError(where + " needs a non-negative integer \"ordinal\"");
    }
    if (text == item.end() || !text->is_string()) throw UsageError(where + " needs a string \"text\"");
    const auto ord = ordinal->get<std::uint64_t>();
    if (!ordinals.insert(ord).second) {
      throw UsageError(where + " repeats ordinal " + std::to_string(ord));
    }
    captions.push_back(PrepareText(text->get<std::string>(), id->get<std::string>(), ord, config.stopwords));
  }

  const auto modified = TransformBatch(captions, epoch, config);
  ordered_json out_caps = ordered_json::array();
  for (const auto& c : modified) {
    out_caps.push_back(ordered_json{{"id", c.source_id}, {"ordinal", c.ordinal}, {"modified", Render(c)}});
  }
  return ordered_json{{"captions", std::move(out_caps)}};
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Epochal difficult captions: stopword curriculum for caption targets", "edc"};
  app.require_subcommand(1);

  ScheduleFlags schedule_flags;
  std::uint64_t seed = 42;
  std::string stopwords_flag;
  std::string input;

  auto* schedule_cmd = app.add_subcommand("schedule", "Print the difficulty for every epoch");
  schedule_flags.Register(schedule_cmd);
  std::string format = "csv";
  schedule_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();

  auto* transform_cmd = app.add_subcommand("transform", "Apply the curriculum to a caption file at one epoch");
  schedule_flags.Register(transform_cmd);
  std::int64_t epoch = 0;
  transform_cmd->add_option("--input", input, "Clotho CSV (.csv) or JSONL caption file")->required();
  transform_cmd->add_option("--epoch", epoch, "Epoch (0-indexed)")->required()->check(CLI::NonNegativeNumber);
  transform_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  transform_cmd->add_option("--stopwords", stopwords_flag, "Stopword file (default: built-in list)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Write per-epoch token statistics to a .dat file");
  schedule_flags.Register(sweep_cmd);
  std::size_t batch_size = 64;
  std::string out_path;
  std::optional<std::size_t> captions_per_clip;
  sweep_cmd->add_option("--input", input, "Clotho CSV (.csv) or JSONL caption file")->required();
  sweep_cmd->add_option("--batch-size", batch_size, "Captions per batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "Output .dat path")->required();
  sweep_cmd->add_option("--captions-per-clip", captions_per_clip,
                        "Sample this many captions per clip each epoch instead of using all")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--stopwords", stopwords_flag, "Stopword file (default: built-in list)");

  auto* stopwords_cmd = app.add_subcommand("stopwords", "Inspect the stopword list");
  stopwords_cmd->require_subcommand(1);
  auto* list_cmd = stopwords_cmd->add_subcommand("list", "Print the active list, sorted, one word per line");
  list_cmd->add_option("--stopwords", stopwords_flag, "Stopword file (default: built-in list)");

  auto* serve_cmd = app.add_subcommand("serve", "Answer transform requests, one JSON object per line");
  schedule_flags.Register(serve_cmd);
  bool stdio = false;
  serve_cmd->add_flag("--stdio", stdio, "Serve over stdin/stdout")->required();
  serve_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  serve_cmd->add_option("--stopwords", stopwords_flag, "Stopword file (default: built-in list)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*schedule_cmd) {
      const auto schedule = schedule_flags.Resolve(/*need_max_epoch=*/true);
      const char sep = format == "tsv" ? '\t' : ',';
      out << "epoch" << sep << "difficulty\n";
      for (const auto& [e, d] : schedule.Table()) out << e << sep << FormatFixed(d, 6) << '\n';
      return kExitOk;
    }

    if (*transform_cmd) {
      const auto schedule = schedule_flags.Resolve(/*need_max_epoch=*/false);
      TransformConfig config{seed, schedule, LoadStopwords(StopwordPath(stopwords_flag))};
      const Corpus corpus = LoadCorpus(input);
      const auto captions = PrepareCaptions(corpus, config.stopwords);
      const auto modified = TransformBatch(captions, epoch, config, Execution::kParallel);
      const double difficulty = schedule.Difficulty(epoch);
      for (std::size_t i = 0; i < captions.size(); ++i) {
        out << DumpLine(ordered_json{{"id", corpus.records[i].source_id},
                                     {"ordinal", captions[i].ordinal},
                                     {"epoch", epoch},
                                     {"difficulty", difficulty},
                                     {"original", Render(captions[i])},
                                     {"modified", Render(modified[i])}})
            << '\n';
      }
      return kExitOk;
    }

    if (*sweep_cmd) {
      const auto schedule = schedule_flags.Resolve(/*need_max_epoch=*/true);
      TransformConfig config{seed, schedule, LoadStopwords(StopwordPath(stopwords_flag))};
      StatsOptions options;
      options.batch_size = batch_size;
      options.captions_per_clip = captions_per_clip;
      options.execution = Execution::kParallel;
      const auto stats = Sweep(LoadCorpus(input), config, options);
      EmitDat(stats, out_path);
      return kExitOk;
    }

    if (*list_cmd) {
      const StopwordSet sw = LoadStopwords(StopwordPath(stopwords_flag));
      out << "# " << sw.version_tag() << '\n';
      for (const auto& w : sw.words()) out << w << '\n';
      return kExitOk;
    }

    if (*serve_cmd) {
      const auto schedule = schedule_flags.Resolve(/*need_max_epoch=*/false);
      const TransformConfig config{seed, schedule, LoadStopwords(StopwordPath(stopwords_flag))};
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ordered_json response;
        try {
          response = ServeRequest(line, config);
        } catch (const std::exception& e) {
          response = ordered_json{{"error", e.what()}};
        }
        out << DumpLine(response) << '\n' << std::flush;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "edc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "edc: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitUsage;
}

}  // namespace edc::cli
