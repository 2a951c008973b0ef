// Command-line front end: instance generators, file ingestion, subcommand
// dispatch, JSON run reports, and the on-line vs offline benchmark harness.
//
// Exit codes: 0 success, 1 validation/hypothesis failure, 2 usage or input
// error, 3 resource-limit error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brt/brt.hpp"
#include "brt/report.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using brt::cli::Json;
using brt::cli::RunReport;

struct OutputOptions {
  std::string out_path;       // empty = stdout
  std::string format = "json";
  bool timing = false;
};

void add_output_options(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--out", opts->out_path, "write the report to this file instead of stdout");
  cmd->add_option("--format", opts->format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timing", opts->timing, "include wall-clock timing in the report");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw brt::InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw brt::InputError("cannot write " + path);
  out << bytes;
}

Json input_meta(const std::string& path, const std::string& bytes) {
  Json j;
  j["path"] = path;
  j["digest"] = brt::cli::fnv1a64(bytes);
  return j;
}

Json meta_for(const std::string& subcommand) {
  Json meta;
  meta["tool"] = "brt";
  meta["version"] = kVersion;
  meta["subcommand"] = subcommand;
  meta["inputs"] = Json::object();
  return meta;
}

brt::PairColoring load_coloring(const std::string& path, Json* inputs) {
  std::string bytes = slurp(path);
  (*inputs)["input"] = input_meta(path, bytes);
  std::istringstream in(bytes);
  return brt::io::read_coloring(in);
}

brt::PosetView load_poset(const std::string& path, Json* inputs) {
  std::string bytes = slurp(path);
  (*inputs)["input"] = input_meta(path, bytes);
  std::istringstream in(bytes);
  return brt::io::read_poset(in);
}

brt::StreamFamily load_streams(const std::string& path, Json* inputs) {
  std::string bytes = slurp(path);
  (*inputs)["streams"] = input_meta(path, bytes);
  std::istringstream in(bytes);
  return brt::io::read_streams(in);
}

brt::adversary::ApproximationSchedule load_schedule(const std::string& path, Json* inputs) {
  std::string bytes = slurp(path);
  (*inputs)["schedule"] = input_meta(path, bytes);
  std::istringstream in(bytes);
  return brt::io::read_schedule(in);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "subcommand: " << report.meta.value("subcommand", "?") << "\n";
  out << "valid: " << (report.validation.value("valid", true) ? "yes" : "no") << "\n";
  out << "result:\n";
  out << report.result.dump(2) << "\n";
  if (!report.timing.empty()) out << "wall_ms: " << report.timing["wall_ms"].dump() << "\n";
  return out.str();
}

// Emits the report and turns it into the process exit code: any failed
// validation or carried hypothesis violation is exit 1.
int emit(const RunReport& report, const OutputOptions& opts) {
  std::string rendered = opts.format == "json" ? report.dump() : render_text(report);
  if (opts.out_path.empty())
    std::cout << rendered;
  else
    write_text_file(opts.out_path, rendered);
  return report.validation.value("valid", true) ? 0 : 1;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(elapsed).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void attach_timing(RunReport* report, const Stopwatch& watch, const OutputOptions& opts) {
  if (opts.timing) report->timing["wall_ms"] = watch.ms();
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> values;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ','))
    if (!token.empty()) values.push_back(std::stoi(token));
  return values;
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  int colors = 2;
  bool balanced = false;
  int width = 2;
  uint64_t seed = 0;
  std::string out_path;
};

int run_gen(const GenArgs& args) {
  std::ostringstream out;
  if (args.kind == "random") {
    brt::io::write_coloring(out, brt::gen::random_coloring(args.n, args.p, args.seed));
  } else if (args.kind == "pigeonhole") {
    brt::io::write_coloring(
        out, brt::gen::pigeonhole_instance(args.n, args.colors, args.seed, args.balanced));
  } else if (args.kind == "blocks") {
    brt::io::write_coloring(out, brt::gen::blocks_coloring(args.n, args.width));
  } else if (args.kind == "poset-random") {
    brt::io::write_poset(out, brt::gen::random_poset(args.n, args.p, args.seed));
  } else {
    throw brt::InputError("unknown generator kind: " + args.kind);
  }
  if (args.out_path.empty())
    std::cout << out.str();
  else
    write_text_file(args.out_path, out.str());
  return 0;
}

// ------------------------------------------------------------- felsner ----

int run_felsner(const std::string& input, int k, const std::string& trace_path,
                const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("felsner");
  brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
  report.params["k"] = k;
  if (k < 2) throw brt::InputError("--k must be >= 2 (smaller bounds are vacuously unsolvable)");

  Stopwatch watch;
  auto run = brt::felsner::run(f, k);
  if (!run.ok()) {
    report.result["violation"] = brt::cli::violation_to_json(run.violation());
    report.validation["valid"] = false;
    report.validation["hypothesis"] = "violated";
    attach_timing(&report, watch, opts);
    emit(report, opts);
    return 1;
  }

  const auto& value = run.value();
  auto check = brt::validate_partition(f, value.partition, brt::PartitionMode::ZeroHomogeneous);
  bool bound_ok = value.partition.num_classes <= brt::felsner::color_bound(k);
  report.result["partition"] = brt::cli::partition_to_json(value.partition);
  report.result["color_bound"] = brt::felsner::color_bound(k);
  report.validation = brt::cli::validation_to_json(check);
  report.validation["valid"] = check.valid() && bound_ok;
  report.validation["within_color_bound"] = bound_ok;
  attach_timing(&report, watch, opts);

  if (!trace_path.empty()) {
    Json trace = Json::array();
    for (const auto& rec : value.trace)
      trace.push_back({{"element", rec.element},
                       {"level", rec.level},
                       {"case", rec.case_taken},
                       {"chain", rec.chain}});
    write_text_file(trace_path, trace.dump(2) + "\n");
  }
  return emit(report, opts);
}

// -------------------------------------------------------------- mirsky ----

int run_mirsky(const std::string& input, const std::string& mode, int color,
               const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("mirsky");
  report.params["mode"] = mode;

  brt::PosetView p;
  if (ends_with(input, ".pos")) {
    p = load_poset(input, &report.meta["inputs"]);
  } else {
    brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
    report.params["color"] = color;
    p = brt::poset_from_coloring(f, color);
  }

  Stopwatch watch;
  brt::ColorPartition partition =
      mode == "weak" ? brt::mirsky::weak_partition(p) : brt::mirsky::exact_partition(p);
  auto check = brt::validate_partition(p, partition, brt::PartitionMode::Antichain);
  report.result["partition"] = brt::cli::partition_to_json(partition);
  report.validation = brt::cli::validation_to_json(check);
  attach_timing(&report, watch, opts);
  return emit(report, opts);
}

// ------------------------------------------------------------- extract ----

int run_extract(const std::string& input, int bound, const std::string& stats_path,
                const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("extract");
  brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
  report.params["bound"] = bound;
  if (bound < 2) throw brt::InputError("--bound must be >= 2 (smaller bounds are vacuously unsolvable)");

  Stopwatch watch;
  auto solved = brt::extractor::solve(f, bound);
  if (!solved.ok()) {
    report.result["violation"] = brt::cli::violation_to_json(solved.violation());
    report.validation["valid"] = false;
    report.validation["hypothesis"] = "violated";
    attach_timing(&report, watch, opts);
    emit(report, opts);
    return 1;
  }

  const auto& value = solved.value();
  bool homogeneous = brt::is_homogeneous(f, value.homogeneous_set, 0);
  int guaranteed = brt::extractor::guaranteed_size(f.universe_size(), bound);
  report.result["set"] = value.homogeneous_set;
  report.result["size"] = value.homogeneous_set.size();
  report.result["guaranteed_size"] = guaranteed;
  report.result["level_counts"] = value.stats.level_counts;
  report.result["tree_depth"] = value.stats.tree_depth;
  report.validation["valid"] =
      homogeneous && static_cast<int>(value.homogeneous_set.size()) >= guaranteed;
  report.validation["zero_homogeneous"] = homogeneous;
  attach_timing(&report, watch, opts);

  if (!stats_path.empty()) {
    Json stats;
    stats["level_counts"] = value.stats.level_counts;
    stats["tree_depth"] = value.stats.tree_depth;
    stats["chosen_node"] = value.stats.chosen_node;
    write_text_file(stats_path, stats.dump(2) + "\n");
  }
  return emit(report, opts);
}

// ----------------------------------------------------------- adversary ----

Json catches_to_json(const brt::adversary::DiagonalizationReport& diag) {
  Json entries = Json::array();
  for (const auto& entry : diag.entries) {
    Json j;
    j["stream"] = entry.stream;
    j["watched"] = entry.watched;
    j["activated"] = entry.activated;
    j["sufficient"] = entry.sufficient;
    j["caught"] = entry.caught;
    if (entry.caught) {
      j["witness"] = {entry.witness_low, entry.witness_high};
      if (entry.component >= 0) j["component"] = entry.component;
    } else {
      j["reason"] = entry.reason;
    }
    entries.push_back(j);
  }
  return entries;
}

int run_adversary_fnb(const std::string& streams_path, int n, int b, int horizon,
                      const std::string& emit_path, const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("adversary fnb");
  brt::StreamFamily streams = load_streams(streams_path, &report.meta["inputs"]);
  if (n > streams.num_streams())
    throw brt::InputError("--n exceeds the stream count declared in the input");
  report.params["n"] = n;
  report.params["b"] = b;
  report.params["horizon"] = horizon;

  Stopwatch watch;
  auto machine = brt::adversary::single_block_coloring(streams, n, b, horizon);
  auto diag = brt::adversary::diagonalization_report(machine, streams);

  brt::oracle::Limits limits;
  limits.clique_universe = std::max(64, horizon);
  int max_one = brt::oracle::max_homogeneous(machine.coloring, 1, limits).size;

  report.result["last_flush_stage"] = machine.last_flush_stage;
  report.result["diagonalization"] = catches_to_json(diag);
  report.result["max_one_homogeneous"] = max_one;
  report.validation["valid"] = max_one <= 2 && diag.all_sufficient_caught();
  report.validation["no_one_homogeneous_triple"] = max_one <= 2;
  report.validation["sufficient_streams_caught"] = diag.all_sufficient_caught();
  attach_timing(&report, watch, opts);

  if (!emit_path.empty()) {
    std::ostringstream out;
    brt::io::write_coloring(out, machine.coloring);
    write_text_file(emit_path, out.str());
  }
  return emit(report, opts);
}

int run_adversary_composite(const std::string& streams_path, const std::string& schedule_path,
                            const std::string& emit_path, const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("adversary composite");
  brt::StreamFamily streams = load_streams(streams_path, &report.meta["inputs"]);
  auto sched = load_schedule(schedule_path, &report.meta["inputs"]);
  report.params["cut_bound"] = sched.cut_bound;
  report.params["horizon"] = sched.horizon;

  Stopwatch watch;
  auto composite = brt::adversary::composite_coloring(streams, sched);
  auto diag = brt::adversary::diagonalization_report(composite, streams);

  brt::oracle::Limits limits;
  limits.clique_universe = std::max(64, sched.horizon);
  bool components_ok = true;
  Json component_stats = Json::array();
  for (std::size_t i = 0; i < composite.components.size(); ++i) {
    int max_one = brt::oracle::max_homogeneous(composite.components[i], 1, limits).size;
    components_ok = components_ok && max_one <= 2;
    Json stat;
    stat["component"] = i;
    stat["max_one_homogeneous"] = max_one;
    stat["blocks"] = composite.blocks[i].size();
    component_stats.push_back(stat);
  }

  report.result["components"] = component_stats;
  report.result["composite_max_one_homogeneous"] =
      brt::oracle::max_homogeneous(composite.coloring, 1, limits).size;
  report.result["diagonalization"] = catches_to_json(diag);
  report.validation["valid"] = components_ok && diag.all_sufficient_caught();
  report.validation["components_no_triple"] = components_ok;
  report.validation["sufficient_streams_caught"] = diag.all_sufficient_caught();
  attach_timing(&report, watch, opts);

  if (!emit_path.empty()) {
    std::ostringstream out;
    brt::io::write_coloring(out, composite.coloring);
    write_text_file(emit_path, out.str());
  }
  return emit(report, opts);
}

// ------------------------------------------------------------ pipeline ----

int run_pipeline(const std::string& which, const std::string& input, int k, int color,
                 const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("pipeline " + which);
  brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
  report.params["k"] = k;
  if (which == "hem") report.params["color"] = color;
  if (k < 2) throw brt::InputError("--k must be >= 2 (smaller bounds are vacuously unsolvable)");

  Stopwatch watch;
  auto solved = which == "em" ? brt::pipelines::solve_em(f, k)
                              : brt::pipelines::solve_hem(f, k, color);
  if (!solved.ok()) {
    report.result["violation"] = brt::cli::violation_to_json(solved.violation());
    report.validation["valid"] = false;
    report.validation["hypothesis"] = "violated";
    attach_timing(&report, watch, opts);
    emit(report, opts);
    return 1;
  }

  bool homogeneous = brt::is_homogeneous(f, solved.value(), 0);
  report.result["set"] = solved.value();
  report.result["size"] = solved.value().size();
  report.validation["valid"] = homogeneous;
  report.validation["zero_homogeneous"] = homogeneous;
  attach_timing(&report, watch, opts);
  return emit(report, opts);
}

// -------------------------------------------------------------- oracle ----

int run_oracle(const std::string& which, const std::string& input, int color, int limit,
               long long budget, int ramsey_colors, int ramsey_size, int ramsey_n,
               const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("oracle " + which);
  brt::oracle::Limits limits;
  if (limit > 0) {
    limits.clique_universe = limit;
    limits.subsequence_universe = limit;
  }
  if (budget > 0) limits.ramsey_budget = budget;

  Stopwatch watch;
  if (which == "homog") {
    brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
    report.params["color"] = color;
    report.result["max"] = brt::cli::witnessed_max_to_json(brt::oracle::max_homogeneous(f, color, limits));
  } else if (which == "width" || which == "height" || which == "cover") {
    brt::PosetView p = load_poset(input, &report.meta["inputs"]);
    if (which == "width")
      report.result["max"] = brt::cli::witnessed_max_to_json(brt::oracle::width(p, limits));
    else if (which == "height")
      report.result["max"] = brt::cli::witnessed_max_to_json(brt::oracle::height(p, limits));
    else {
      brt::ColorPartition cover = brt::oracle::min_chain_cover(p, limits);
      auto check = brt::validate_partition(p, cover, brt::PartitionMode::Chain);
      report.result["partition"] = brt::cli::partition_to_json(cover);
      report.validation = brt::cli::validation_to_json(check);
    }
  } else if (which == "ramsey") {
    report.params["colors"] = ramsey_colors;
    report.params["size"] = ramsey_size;
    report.params["n"] = ramsey_n;
    report.result["certified"] =
        brt::oracle::ramsey_certify(ramsey_colors, ramsey_size, ramsey_n, limits);
  } else if (which == "transitive") {
    brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
    report.result["max"] =
        brt::cli::witnessed_max_to_json(brt::oracle::max_transitive_subsequence(f, limits));
  }
  attach_timing(&report, watch, opts);
  return emit(report, opts);
}

// --------------------------------------------------------------- check ----

int run_check(const std::string& input, const std::string& partition_path, const std::string& mode,
              int no_one_homog, const std::string& set_csv, int color, int limit,
              const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("check");
  brt::oracle::Limits limits;
  if (limit > 0) limits.clique_universe = limit;

  Stopwatch watch;
  if (!partition_path.empty()) {
    std::string bytes = slurp(partition_path);
    report.meta["inputs"]["partition"] = input_meta(partition_path, bytes);
    brt::ColorPartition partition = brt::cli::partition_from_json(Json::parse(bytes));
    report.params["mode"] = mode;
    brt::ValidationReport check;
    if (mode == "zero-homog") {
      brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
      check = brt::validate_partition(f, partition, brt::PartitionMode::ZeroHomogeneous);
    } else if (mode == "chain" || mode == "antichain") {
      brt::PosetView p = load_poset(input, &report.meta["inputs"]);
      check = brt::validate_partition(
          p, partition, mode == "chain" ? brt::PartitionMode::Chain : brt::PartitionMode::Antichain);
    } else {
      throw brt::InputError("--mode must be zero-homog, chain, or antichain");
    }
    report.validation = brt::cli::validation_to_json(check);
  } else if (no_one_homog > 0) {
    brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
    report.params["no_1_homog"] = no_one_homog;
    auto max = brt::oracle::max_homogeneous(f, 1, limits);
    report.result["max"] = brt::cli::witnessed_max_to_json(max);
    report.validation["valid"] = max.size < no_one_homog;
  } else if (!set_csv.empty()) {
    brt::PairColoring f = load_coloring(input, &report.meta["inputs"]);
    std::vector<int> set = parse_int_list(set_csv);
    report.params["set"] = set;
    report.params["color"] = color;
    report.validation["valid"] = brt::is_homogeneous(f, set, color);
  } else {
    throw brt::InputError("check needs --partition, --no-1-homog, or --set");
  }
  attach_timing(&report, watch, opts);
  return emit(report, opts);
}

// --------------------------------------------------------------- bench ----

int run_bench(int n, const std::vector<int>& ks, int count, uint64_t seed, double p,
              const std::vector<std::string>& inputs, const OutputOptions& opts) {
  RunReport report;
  report.meta = meta_for("bench");
  report.meta["seed"] = seed;
  report.params["n"] = n;
  report.params["k"] = ks;
  report.params["count"] = count;
  report.params["p"] = p;

  brt::oracle::Limits limits;

  Json rows = Json::array();
  bool all_valid = true;
  int ran = 0, skipped = 0;
  double ratio_sum = 0, ratio_max = 0;

  auto bench_one = [&](const std::string& label, const brt::PairColoring& f, int k) {
    Json row;
    row["instance"] = label;
    row["n"] = f.universe_size();
    row["k"] = k;
    limits.clique_universe = std::max(64, f.universe_size());
    int max_one = brt::oracle::max_homogeneous(f, 1, limits).size;
    if (max_one >= k) {
      row["skipped"] = "hypothesis fails: max 1-homogeneous size " + std::to_string(max_one);
      ++skipped;
      rows.push_back(row);
      return;
    }
    Stopwatch online_watch;
    auto run = brt::felsner::run(f, k);
    double online_ms = online_watch.ms();
    if (!run.ok()) {
      row["skipped"] = "felsner reported a hypothesis violation";
      ++skipped;
      rows.push_back(row);
      return;
    }
    all_valid = all_valid &&
                brt::validate_partition(f, run.value().partition, brt::PartitionMode::ZeroHomogeneous)
                    .valid();
    Stopwatch offline_watch;
    brt::ColorPartition offline = brt::oracle::min_chain_cover(brt::poset_from_coloring(f, 0), limits);
    double offline_ms = offline_watch.ms();

    int online_colors = run.value().partition.num_classes;
    int optimum = offline.num_classes;
    double ratio = optimum > 0 ? static_cast<double>(online_colors) / optimum : 1.0;
    row["online_colors"] = online_colors;
    row["offline_optimum"] = optimum;
    row["ratio"] = ratio;
    row["color_bound"] = brt::felsner::color_bound(k);
    if (opts.timing) {
      row["online_ms"] = online_ms;
      row["offline_ms"] = offline_ms;
    }
    ratio_sum += ratio;
    ratio_max = std::max(ratio_max, ratio);
    ++ran;
    rows.push_back(row);
  };

  if (!inputs.empty()) {
    for (const auto& path : inputs) {
      std::string bytes = slurp(path);
      report.meta["inputs"][path] = input_meta(path, bytes);
      std::istringstream in(bytes);
      brt::PairColoring f = brt::io::read_coloring(in);
      for (int k : ks) bench_one(path, f, k);
    }
  } else {
    for (int i = 0; i < count; ++i)
      for (int k : ks) {
        uint64_t instance_seed = seed + 1000003ull * i + k;
        brt::PairColoring f =
            brt::coloring_from_poset(brt::gen::width_bounded_poset(n, k - 1, p, instance_seed));
        bench_one("generated/" + std::to_string(i) + "/k" + std::to_string(k), f, k);
      }
  }

  report.result["rows"] = rows;
  Json aggregate;
  aggregate["ran"] = ran;
  aggregate["skipped"] = skipped;
  aggregate["mean_ratio"] = ran > 0 ? ratio_sum / ran : 0.0;
  aggregate["max_ratio"] = ratio_max;
  report.result["aggregate"] = aggregate;
  report.validation["valid"] = all_valid;
  report.validation["all_partitions_valid"] = all_valid;
  return emit(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pair colorings with bounded 1-homogeneous sets: partitions, extraction, adversaries"};
  app.require_subcommand(1);
  int exit_code = 0;

  // gen
  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--kind", gen_args.kind, "random | pigeonhole | blocks | poset-random")
      ->required()
      ->check(CLI::IsMember({"random", "pigeonhole", "blocks", "poset-random"}));
  gen_cmd->add_option("--n", gen_args.n, "universe size")->required();
  gen_cmd->add_option("--p", gen_args.p, "edge/pair probability");
  gen_cmd->add_option("--colors", gen_args.colors, "pigeonhole class count");
  gen_cmd->add_flag("--balanced", gen_args.balanced, "pigeonhole: use x mod colors");
  gen_cmd->add_option("--width", gen_args.width, "blocks: block width");
  gen_cmd->add_option("--seed", gen_args.seed, "64-bit seed (splitmix64)");
  gen_cmd->add_option("--out", gen_args.out_path, "instance file path (stdout if omitted)");
  gen_cmd->callback([&] { exit_code = run_gen(gen_args); });

  // felsner
  std::string felsner_input, felsner_trace;
  int felsner_k = 3;
  OutputOptions felsner_opts;
  auto* felsner_cmd = app.add_subcommand("felsner", "on-line chain partition (transitive-for-0 input)");
  felsner_cmd->add_option("--input", felsner_input, "coloring file")->required();
  felsner_cmd->add_option("--k", felsner_k, "no 1-homogeneous set of this size")->required();
  felsner_cmd->add_option("--trace", felsner_trace, "write the step trace to this JSON file");
  add_output_options(felsner_cmd, &felsner_opts);
  felsner_cmd->callback(
      [&] { exit_code = run_felsner(felsner_input, felsner_k, felsner_trace, felsner_opts); });

  // mirsky
  std::string mirsky_input, mirsky_mode = "weak";
  int mirsky_color = 1;
  OutputOptions mirsky_opts;
  auto* mirsky_cmd = app.add_subcommand("mirsky", "antichain partition (weak on-line / exact offline)");
  mirsky_cmd->add_option("--input", mirsky_input, "poset (.pos) or coloring file")->required();
  mirsky_cmd->add_option("--mode", mirsky_mode, "weak | exact")
      ->check(CLI::IsMember({"weak", "exact"}));
  mirsky_cmd->add_option("--color", mirsky_color,
                         "for coloring inputs: the transitive color forming the order (default 1)");
  add_output_options(mirsky_cmd, &mirsky_opts);
  mirsky_cmd->callback(
      [&] { exit_code = run_mirsky(mirsky_input, mirsky_mode, mirsky_color, mirsky_opts); });

  // extract
  std::string extract_input, extract_stats;
  int extract_bound = 3;
  OutputOptions extract_opts;
  auto* extract_cmd = app.add_subcommand("extract", "placement-tree extraction of a 0-homogeneous set");
  extract_cmd->add_option("--input", extract_input, "coloring file")->required();
  extract_cmd->add_option("--bound", extract_bound, "no 1-homogeneous set of this size")->required();
  extract_cmd->add_option("--stats", extract_stats, "write level statistics to this JSON file");
  add_output_options(extract_cmd, &extract_opts);
  extract_cmd->callback(
      [&] { exit_code = run_extract(extract_input, extract_bound, extract_stats, extract_opts); });

  // adversary fnb | composite
  auto* adversary_cmd = app.add_subcommand("adversary", "stage-built diagonalizing colorings");
  adversary_cmd->require_subcommand(1);
  std::string fnb_streams, fnb_emit;
  int fnb_n = 1, fnb_b = 0, fnb_horizon = 0;
  OutputOptions fnb_opts;
  auto* fnb_cmd = adversary_cmd->add_subcommand("fnb", "single-block construction");
  fnb_cmd->add_option("--streams", fnb_streams, "stream file")->required();
  fnb_cmd->add_option("--n", fnb_n, "watched stream count")->required();
  fnb_cmd->add_option("--b", fnb_b, "base element")->required();
  fnb_cmd->add_option("--horizon", fnb_horizon, "construction horizon")->required();
  fnb_cmd->add_option("--emit", fnb_emit, "write the coloring to this file");
  add_output_options(fnb_cmd, &fnb_opts);
  fnb_cmd->callback([&] {
    exit_code = run_adversary_fnb(fnb_streams, fnb_n, fnb_b, fnb_horizon, fnb_emit, fnb_opts);
  });

  std::string composite_streams, composite_schedule, composite_emit;
  OutputOptions composite_opts;
  auto* composite_cmd = adversary_cmd->add_subcommand("composite", "schedule-driven composite");
  composite_cmd->add_option("--streams", composite_streams, "stream file")->required();
  composite_cmd->add_option("--schedule", composite_schedule, "schedule file")->required();
  composite_cmd->add_option("--emit", composite_emit, "write the coloring to this file");
  add_output_options(composite_cmd, &composite_opts);
  composite_cmd->callback([&] {
    exit_code =
        run_adversary_composite(composite_streams, composite_schedule, composite_emit, composite_opts);
  });

  // pipeline em | hem
  auto* pipeline_cmd = app.add_subcommand("pipeline", "end-to-end solvers");
  pipeline_cmd->require_subcommand(1);
  std::string em_input;
  int em_k = 3;
  OutputOptions em_opts;
  auto* em_cmd = pipeline_cmd->add_subcommand("em", "subsequence + chain partition route");
  em_cmd->add_option("--input", em_input, "coloring file")->required();
  em_cmd->add_option("--k", em_k, "no 1-homogeneous set of this size")->required();
  add_output_options(em_cmd, &em_opts);
  em_cmd->callback([&] { exit_code = run_pipeline("em", em_input, em_k, 0, em_opts); });

  std::string hem_input;
  int hem_k = 3, hem_color = 1;
  OutputOptions hem_opts;
  auto* hem_cmd = pipeline_cmd->add_subcommand("hem", "single-transitive-color route");
  hem_cmd->add_option("--input", hem_input, "coloring file")->required();
  hem_cmd->add_option("--k", hem_k, "no 1-homogeneous set of this size")->required();
  hem_cmd->add_option("--color", hem_color, "the color the input is transitive for")->required();
  add_output_options(hem_cmd, &hem_opts);
  hem_cmd->callback(
      [&] { exit_code = run_pipeline("hem", hem_input, hem_k, hem_color, hem_opts); });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  struct OracleArgs {
    std::string input;
    int color = 1;
    int limit = 0;
    long long budget = 0;
    int colors = 2, size = 3, n = 5;
    OutputOptions opts;
  };
  auto oracle_args = std::make_shared<std::vector<OracleArgs>>();
  oracle_args->reserve(6);  // callbacks keep references into this vector
  for (const std::string which : {"homog", "width", "height", "cover", "ramsey", "transitive"}) {
    oracle_args->emplace_back();
    OracleArgs& args = oracle_args->back();
    auto* sub = oracle_cmd->add_subcommand(which, "oracle " + which);
    if (which == "ramsey") {
      sub->add_option("--colors", args.colors, "number of colors")->required();
      sub->add_option("--size", args.size, "monochromatic set size")->required();
      sub->add_option("--n", args.n, "universe size")->required();
      sub->add_option("--budget", args.budget, "coloring enumeration budget");
    } else {
      sub->add_option("--input", args.input, "instance file")->required();
      if (which == "homog") sub->add_option("--color", args.color, "color to maximize");
      sub->add_option("--limit", args.limit, "raise the exhaustive universe limit");
    }
    add_output_options(sub, &args.opts);
    sub->callback([&app, &exit_code, which, &args] {
      exit_code = run_oracle(which, args.input, args.color, args.limit, args.budget, args.colors,
                             args.size, args.n, args.opts);
    });
  }

  // check
  std::string check_input, check_partition, check_mode = "zero-homog", check_set;
  int check_no_one = 0, check_color = 0, check_limit = 0;
  OutputOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "validate partitions, sets, and hypotheses");
  check_cmd->add_option("--input", check_input, "coloring or poset file")->required();
  check_cmd->add_option("--partition", check_partition, "partition JSON to validate");
  check_cmd->add_option("--mode", check_mode, "zero-homog | chain | antichain");
  check_cmd->add_option("--no-1-homog", check_no_one, "assert no 1-homogeneous set of this size");
  check_cmd->add_option("--set", check_set, "comma-separated elements to test for homogeneity");
  check_cmd->add_option("--color", check_color, "color for --set checks");
  check_cmd->add_option("--limit", check_limit, "raise the exhaustive universe limit");
  add_output_options(check_cmd, &check_opts);
  check_cmd->callback([&] {
    exit_code = run_check(check_input, check_partition, check_mode, check_no_one, check_set,
                          check_color, check_limit, check_opts);
  });

  // bench
  int bench_n = 100, bench_count = 10;
  std::vector<int> bench_ks = {3};
  uint64_t bench_seed = 0;
  double bench_p = 0.05;
  std::vector<std::string> bench_inputs;
  OutputOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "on-line colors vs offline optimum");
  bench_cmd->add_option("--n", bench_n, "universe size for generated instances");
  bench_cmd->add_option("--k", bench_ks, "hypothesis bounds to bench");
  bench_cmd->add_option("--count", bench_count, "generated instances per k");
  bench_cmd->add_option("--seed", bench_seed, "64-bit seed (splitmix64)");
  bench_cmd->add_option("--p", bench_p, "cross-chain comparability probability");
  bench_cmd->add_option("--input", bench_inputs, "bench these coloring files instead");
  add_output_options(bench_cmd, &bench_opts);
  bench_cmd->callback([&] {
    exit_code = run_bench(bench_n, bench_ks, bench_count, bench_seed, bench_p, bench_inputs,
                          bench_opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const brt::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const brt::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const brt::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
