// Command-line driver: ingest, stats, predict, evaluate, sweep, synth.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "linkpred/dataset_io.h"
#include "linkpred/experiment.h"
#include "linkpred/graph_stats.h"

namespace {

using namespace linkpred;

struct DataFlags {
  std::string config;
  std::string dataset;
  std::optional<std::uint64_t> seed;
};

void AddDataFlags(CLI::App* cmd, DataFlags* flags) {
  cmd->add_option("--config", flags->config, "Experiment config (JSON)");
  cmd->add_option("--dataset", flags->dataset, "Serialized dataset file");
  cmd->add_option("--seed", flags->seed, "RNG seed (overrides the config)");
}

ExperimentConfig ConfigFrom(const DataFlags& flags) {
  ExperimentConfig cfg;
  if (!flags.config.empty()) cfg = LoadExperimentConfig(flags.config);
  if (flags.seed) {
    cfg.seed = *flags.seed;
    for (auto& p : cfg.predictors) p.sbm.seed = *flags.seed;
  }
  return cfg;
}

DualDataset DataFrom(const DataFlags& flags) {
  if (!flags.dataset.empty()) return LoadDataset(flags.dataset);
  if (flags.config.empty()) throw InvalidArgument("pass --dataset or --config");
  return LoadExperimentData(ConfigFrom(flags));
}

// Writes to `path`, or stdout when empty.
template <class Fn>
void Emit(const std::string& path, Fn fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  fn(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal link prediction with friendship / interaction fusion"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Build a snapshot dataset from edge files");
  std::string friend_file, interaction_file, ingest_out, ingest_config;
  std::int64_t start = 0, end = 0, interval_days = 90;
  std::size_t threshold = 0;
  ingest->add_option("--config", ingest_config, "Take data settings from an experiment config");
  ingest->add_option("--friendships", friend_file, "Friendship edge file");
  ingest->add_option("--interactions", interaction_file, "Interaction edge file");
  ingest->add_option("--start", start, "Trace start (unix seconds)");
  ingest->add_option("--end", end, "Trace end (unix seconds)");
  ingest->add_option("--interval-days", interval_days, "Snapshot length in days")->capture_default_str();
  ingest->add_option("--degree-threshold", threshold, "Aggregate friendship degree filter")->capture_default_str();
  ingest->add_option("--out", ingest_out, "Output dataset file")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "Friendship / interaction fraction series");
  DataFlags stats_flags;
  std::string stats_out;
  AddDataFlags(stats, &stats_flags);
  stats->add_option("--out", stats_out, "Output CSV (default stdout)");

  // predict
  auto* predict = app.add_subcommand("predict", "Score pairs for snapshot t+1");
  DataFlags predict_flags;
  std::string predictor_name = "EWMA", mode_name = "none", predict_out;
  std::size_t predict_t = 0;
  double alpha = 0.0;
  AddDataFlags(predict, &predict_flags);
  predict->add_option("--predictor", predictor_name, "EWMA, TS-AA, TS-Katz or DSBM")->capture_default_str();
  predict->add_option("--t", predict_t, "Prediction time")->required();
  predict->add_option("--mode", mode_name, "Fusion mode: none, FR, AA, Katz")->capture_default_str();
  predict->add_option("--alpha", alpha, "Fusion weight on friendships")->capture_default_str();
  predict->add_option("--out", predict_out, "Output score file (default stdout)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a score file against snapshot t+1");
  DataFlags eval_flags;
  std::string scores_file, eval_out, eval_name = "scores", eval_mode = "none";
  std::size_t eval_t = 0;
  AddDataFlags(evaluate, &eval_flags);
  evaluate->add_option("--scores", scores_file, "Score file written by `predict`")->required();
  evaluate->add_option("--t", eval_t, "Prediction time")->required();
  evaluate->add_option("--name", eval_name, "Predictor label for the report")->capture_default_str();
  evaluate->add_option("--out", eval_out, "Output CSV (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Full predictor x fusion x alpha evaluation");
  DataFlags sweep_flags;
  std::string sweep_out, aggregate;
  sweep->add_option("--config", sweep_flags.config, "Experiment config (JSON)")->required();
  sweep->add_option("--seed", sweep_flags.seed, "RNG seed (overrides the config)");
  sweep->add_option("--out", sweep_out, "Output directory (overrides the config)");
  sweep->add_option("--aggregate", aggregate, "mean or pooled (overrides the config)");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic coupled dataset");
  DataFlags synth_flags;
  std::string synth_out;
  synth->add_option("--config", synth_flags.config, "Experiment config with a synthetic data section");
  synth->add_option("--seed", synth_flags.seed, "RNG seed");
  synth->add_option("--out", synth_out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      DualDataset ds;
      IngestStats st;
      if (!ingest_config.empty()) {
        ds = LoadExperimentData(LoadExperimentConfig(ingest_config));
      } else {
        if (friend_file.empty() || interaction_file.empty()) {
          throw InvalidArgument("pass --friendships and --interactions (or --config)");
        }
        IngestOptions options{start, end, interval_days * kSecondsPerDay};
        ds = IngestEdges(friend_file, interaction_file, options, &st);
        std::cerr << "records: " << st.friendship_records << " friendships ("
                  << st.friendships_untimed << " untimed, " << st.friendships_after_horizon
                  << " after horizon), " << st.interaction_records << " interactions ("
                  << st.interactions_out_of_range << " out of range), " << st.self_loops_dropped
                  << " self-loops dropped\n";
        if (threshold > 0) ds = FilterByAggregateDegree(ds, threshold);
      }
      SaveDataset(ingest_out, ds);
      std::cerr << "nodes " << ds.node_count() << ", snapshots " << ds.snapshot_count() << "\n";
    } else if (*stats) {
      const DualDataset ds = DataFrom(stats_flags);
      Emit(stats_out, [&](std::ostream& out) { WriteFractionCsv(out, ds); });
    } else if (*predict) {
      const DualDataset ds = DataFrom(predict_flags);
      ExperimentConfig cfg = ConfigFrom(predict_flags);
      PredictorConfig pc;
      pc.kind = ParsePredictorKind(predictor_name);
      for (const auto& p : cfg.predictors) {
        if (p.kind == pc.kind) pc = p;
      }
      if (predict_flags.seed) pc.sbm.seed = *predict_flags.seed;
      ScoreMap scores = PredictInteractions(ds, pc, predict_t);
      const FusionMode mode = ParseFusionMode(mode_name);
      if (mode != FusionMode::kNone) {
        scores = FusePredicted(scores, FriendshipMatrix(ds, predict_t, mode, cfg.friendship_katz), alpha);
      }
      Emit(predict_out, [&](std::ostream& out) { WriteScoreMap(out, scores); });
    } else if (*evaluate) {
      const DualDataset ds = DataFrom(eval_flags);
      std::ifstream in(scores_file);
      if (!in) throw Error("cannot open " + scores_file);
      EvalReport r = EvaluatePrediction(ReadScoreMap(in, scores_file), ds.interactions, eval_t);
      r.predictor = eval_name;
      r.mode = eval_mode;
      Emit(eval_out, [&](std::ostream& out) {
        WriteEvalCsvHeader(out);
        WriteEvalCsvRow(out, r);
      });
    } else if (*sweep) {
      ExperimentConfig cfg = ConfigFrom(sweep_flags);
      if (!sweep_out.empty()) cfg.output_dir = sweep_out;
      if (!aggregate.empty()) cfg.aggregation = ParseAggregation(aggregate);
      RunSweep(cfg);
      std::ifstream summary(cfg.output_dir / "summary.txt");
      std::cout << summary.rdbuf();
    } else if (*synth) {
      ExperimentConfig cfg = ConfigFrom(synth_flags);
      const DualDataset ds = GenerateSynthetic(cfg.data.synthetic, cfg.seed);
      std::filesystem::create_directories(synth_out);
      SaveDataset(std::filesystem::path(synth_out) / "dataset.lpds", ds);
      SaveEdgeFiles(synth_out, ds);
      std::cerr << "nodes " << ds.node_count() << ", snapshots " << ds.snapshot_count() << "\n";
    }
  } catch (const linkpred::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
