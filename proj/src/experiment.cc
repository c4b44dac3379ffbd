#include "linkpred/experiment.h"

#include <cstdio>
#include <fstream>
#include <set>

#include "linkpred/dataset_io.h"
#include "linkpred/graph_stats.h"

namespace linkpred {
namespace {

using nlohmann::json;

void CheckKeys(const json& object, const char* where, std::initializer_list<const char*> allowed) {
  if (!object.is_object()) throw InvalidArgument(std::string(where) + " must be an object");
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : object.items()) {
    if (!known.count(key)) throw InvalidArgument("unknown key `" + key + "` in " + where);
  }
}

template <class T>
void Read(const json& object, const char* key, T* out) {
  if (object.contains(key)) {
    try {
      *out = object.at(key).get<T>();
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("config key `") + key + "`: " + e.what());
    }
  }
}

void ReadEwma(const json& j, EwmaConfig* cfg) {
  CheckKeys(j, "ewma", {"lambda"});
  Read(j, "lambda", &cfg->lambda);
}

void ReadKatz(const json& j, KatzConfig* cfg) {
  CheckKeys(j, "katz", {"beta", "max_length", "truncation_tolerance"});
  Read(j, "beta", &cfg->beta);
  Read(j, "max_length", &cfg->max_length);
  Read(j, "truncation_tolerance", &cfg->truncation_tolerance);
}

void ReadSbm(const json& j, SbmConfig* cfg) {
  CheckKeys(j, "sbm", {"blocks", "mix", "seed"});
  Read(j, "blocks", &cfg->blocks);
  Read(j, "mix", &cfg->mix);
  Read(j, "seed", &cfg->seed);
}

void ReadSynthetic(const json& j, SyntheticSpec* spec) {
  CheckKeys(j, "synthetic", {"nodes", "snapshots", "communities", "initial_mean_degree",
                             "within_community_share", "friendship_growth", "q_friend",
                             "q_nonfriend", "persistence_boost", "start", "interval_days"});
  Read(j, "nodes", &spec->nodes);
  Read(j, "snapshots", &spec->snapshots);
  Read(j, "communities", &spec->communities);
  Read(j, "initial_mean_degree", &spec->initial_mean_degree);
  Read(j, "within_community_share", &spec->within_community_share);
  Read(j, "friendship_growth", &spec->friendship_growth);
  Read(j, "q_friend", &spec->q_friend);
  Read(j, "q_nonfriend", &spec->q_nonfriend);
  Read(j, "persistence_boost", &spec->persistence_boost);
  Read(j, "start", &spec->start);
  if (j.contains("interval_days")) spec->interval = j.at("interval_days").get<std::int64_t>() * kSecondsPerDay;
}

CandidatePairs ParseCandidates(const std::string& text) {
  if (text == "two_hop") return CandidatePairs::kTwoHopUnion;
  if (text == "all") return CandidatePairs::kAll;
  throw InvalidArgument("unknown ts_candidates `" + text + "` (expected two_hop or all)");
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& path) {
  const std::filesystem::path p(path);
  return p.is_absolute() || base.empty() ? p : base / p;
}

std::string Fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string ToString(PredictorKind kind) {
  switch (kind) {
    case PredictorKind::kEwma:
      return "EWMA";
    case PredictorKind::kTsAdamicAdar:
      return "TS-AA";
    case PredictorKind::kTsKatz:
      return "TS-Katz";
    case PredictorKind::kSbm:
      return "DSBM";
  }
  return "?";
}

PredictorKind ParsePredictorKind(const std::string& text) {
  if (text == "EWMA") return PredictorKind::kEwma;
  if (text == "TS-AA") return PredictorKind::kTsAdamicAdar;
  if (text == "TS-Katz") return PredictorKind::kTsKatz;
  if (text == "DSBM") return PredictorKind::kSbm;
  throw InvalidArgument("unknown predictor `" + text + "` (expected EWMA, TS-AA, TS-Katz or DSBM)");
}

ScoreMap PredictInteractions(const DualDataset& dataset, const PredictorConfig& predictor,
                             std::size_t t) {
  const SnapshotSequence& seq = dataset.interactions;
  ScoreMap scores;
  switch (predictor.kind) {
    case PredictorKind::kEwma:
      return EwmaScores(seq, t, predictor.ewma);
    case PredictorKind::kSbm:
      return SbmScores(seq, t, predictor.ewma, predictor.sbm);
    case PredictorKind::kTsAdamicAdar:
      scores = TsAdamicAdarScores(seq, t, predictor.ewma, predictor.candidates);
      break;
    case PredictorKind::kTsKatz:
      scores = TsKatzScores(seq, t, predictor.ewma, predictor.katz, predictor.candidates);
      break;
  }
  if (scores.empty()) return scores;
  return NormalizeScores(scores, {.include_implicit_zero = true});
}

PredictionSeries PredictSeries(const DualDataset& dataset, const PredictorConfig& predictor,
                               std::span<const std::size_t> steps) {
  PredictionSeries series;
  series.predictor = ToString(predictor.kind);
  for (std::size_t t : steps) {
    series.steps.push_back(t);
    series.scores.push_back(PredictInteractions(dataset, predictor, t));
  }
  return series;
}

void ExperimentConfig::Validate() const {
  if (predictors.empty()) throw InvalidArgument("experiment lists no predictors");
  if (modes.empty()) throw InvalidArgument("experiment lists no fusion modes");
  if (alpha_grid.empty()) throw InvalidArgument("alpha grid is empty");
  for (double a : alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("alpha grid values must lie in [0, 1]");
  }
  for (const auto& p : predictors) {
    p.ewma.Validate();
    p.katz.Validate();
    if (!(p.sbm.mix >= 0.0 && p.sbm.mix <= 1.0) || p.sbm.blocks < 1) {
      throw InvalidArgument("invalid block-model settings");
    }
  }
  friendship_katz.Validate();
  if (last_step && *last_step < first_step) throw InvalidArgument("last_step precedes first_step");
}

std::vector<std::size_t> ExperimentConfig::Steps(std::size_t snapshot_count) const {
  if (snapshot_count < 2) throw InvalidArgument("need at least two snapshots to evaluate");
  const std::size_t last = last_step.value_or(snapshot_count - 2);
  if (last + 1 >= snapshot_count) {
    throw OutOfRange("last_step " + std::to_string(last) + " has no target snapshot");
  }
  if (first_step > last) throw InvalidArgument("no prediction steps in range");
  std::vector<std::size_t> steps;
  for (std::size_t t = first_step; t <= last; ++t) steps.push_back(t);
  return steps;
}

namespace {

ExperimentConfig ParseConfigTree(const json& j, const std::filesystem::path& base_dir) {
  CheckKeys(j, "experiment config",
            {"version", "data", "predictors", "ewma", "katz", "sbm", "ts_candidates",
             "friendship_katz", "fusion_modes", "alpha_grid", "aggregate", "first_step",
             "last_step", "seed", "output_dir"});
  if (!j.contains("version") || j.at("version") != kConfigVersion) {
    throw InvalidArgument("config `version` must be " + std::to_string(kConfigVersion));
  }
  ExperimentConfig cfg;
  Read(j, "seed", &cfg.seed);

  PredictorConfig defaults;
  defaults.sbm.seed = cfg.seed;
  if (j.contains("ewma")) ReadEwma(j.at("ewma"), &defaults.ewma);
  if (j.contains("katz")) ReadKatz(j.at("katz"), &defaults.katz);
  if (j.contains("sbm")) ReadSbm(j.at("sbm"), &defaults.sbm);
  if (j.contains("ts_candidates")) defaults.candidates = ParseCandidates(j.at("ts_candidates").get<std::string>());
  cfg.friendship_katz = defaults.katz;
  if (j.contains("friendship_katz")) ReadKatz(j.at("friendship_katz"), &cfg.friendship_katz);

  const json predictors = j.value("predictors", json::array({"EWMA", "TS-AA", "TS-Katz", "DSBM"}));
  for (const json& p : predictors) {
    PredictorConfig pc = defaults;
    if (p.is_string()) {
      pc.kind = ParsePredictorKind(p.get<std::string>());
    } else {
      CheckKeys(p, "predictor", {"name", "ewma", "katz", "sbm", "ts_candidates"});
      pc.kind = ParsePredictorKind(p.at("name").get<std::string>());
      if (p.contains("ewma")) ReadEwma(p.at("ewma"), &pc.ewma);
      if (p.contains("katz")) ReadKatz(p.at("katz"), &pc.katz);
      if (p.contains("sbm")) ReadSbm(p.at("sbm"), &pc.sbm);
      if (p.contains("ts_candidates")) pc.candidates = ParseCandidates(p.at("ts_candidates").get<std::string>());
    }
    cfg.predictors.push_back(pc);
  }

  const json modes = j.value("fusion_modes", json::array({"none", "FR", "AA", "Katz"}));
  for (const json& m : modes) cfg.modes.push_back(ParseFusionMode(m.get<std::string>()));
  cfg.alpha_grid = DefaultAlphaGrid();
  Read(j, "alpha_grid", &cfg.alpha_grid);
  if (j.contains("aggregate")) cfg.aggregation = ParseAggregation(j.at("aggregate").get<std::string>());
  Read(j, "first_step", &cfg.first_step);
  if (j.contains("last_step") && !j.at("last_step").is_null()) cfg.last_step = j.at("last_step").get<std::size_t>();
  if (j.contains("output_dir")) cfg.output_dir = Resolve(base_dir, j.at("output_dir").get<std::string>());

  if (!j.contains("data")) throw InvalidArgument("config has no `data` section");
  const json& d = j.at("data");
  CheckKeys(d, "data", {"source", "friendships", "interactions", "dataset", "start", "end",
                        "interval_days", "synthetic", "degree_threshold"});
  const std::string source = d.value("source", "synthetic");
  if (source == "edge_files") {
    cfg.data.kind = DataSource::Kind::kEdgeFiles;
    cfg.data.friendships = Resolve(base_dir, d.at("friendships").get<std::string>());
    cfg.data.interactions = Resolve(base_dir, d.at("interactions").get<std::string>());
    cfg.data.ingest.start = d.at("start").get<std::int64_t>();
    cfg.data.ingest.end = d.at("end").get<std::int64_t>();
    cfg.data.ingest.interval = d.value("interval_days", std::int64_t{90}) * kSecondsPerDay;
  } else if (source == "dataset") {
    cfg.data.kind = DataSource::Kind::kDataset;
    cfg.data.dataset = Resolve(base_dir, d.at("dataset").get<std::string>());
  } else if (source == "synthetic") {
    cfg.data.kind = DataSource::Kind::kSynthetic;
    if (d.contains("synthetic")) ReadSynthetic(d.at("synthetic"), &cfg.data.synthetic);
  } else {
    throw InvalidArgument("unknown data source `" + source + "`");
  }
  Read(d, "degree_threshold", &cfg.data.degree_threshold);
  cfg.Validate();
  return cfg;
}

}  // namespace

ExperimentConfig ParseExperimentConfig(const json& j, const std::filesystem::path& base_dir) {
  try {
    return ParseConfigTree(j, base_dir);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed experiment config: ") + e.what());
  }
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return ParseExperimentConfig(j, path.parent_path());
}

DualDataset LoadExperimentData(const ExperimentConfig& config) {
  DualDataset ds;
  switch (config.data.kind) {
    case DataSource::Kind::kEdgeFiles:
      ds = IngestEdges(config.data.friendships, config.data.interactions, config.data.ingest);
      break;
    case DataSource::Kind::kDataset:
      ds = LoadDataset(config.data.dataset);
      break;
    case DataSource::Kind::kSynthetic:
      ds = GenerateSynthetic(config.data.synthetic, config.seed);
      break;
  }
  if (config.data.degree_threshold > 0) ds = FilterByAggregateDegree(ds, config.data.degree_threshold);
  return ds;
}

ExperimentResult RunExperiment(const ExperimentConfig& config, const DualDataset& dataset) {
  config.Validate();
  ExperimentResult result;
  result.steps = config.Steps(dataset.snapshot_count());

  std::vector<std::vector<ScoreMap>> matrices(config.modes.size());
  for (std::size_t m = 0; m < config.modes.size(); ++m) {
    if (config.modes[m] == FusionMode::kNone) continue;
    for (std::size_t t : result.steps) {
      matrices[m].push_back(FriendshipMatrix(dataset, t, config.modes[m], config.friendship_katz));
    }
  }
  const std::vector<double> baseline_grid{0.0};
  for (const PredictorConfig& predictor : config.predictors) {
    const PredictionSeries series = PredictSeries(dataset, predictor, result.steps);
    for (std::size_t m = 0; m < config.modes.size(); ++m) {
      const FusionMode mode = config.modes[m];
      const std::span<const double> grid =
          mode == FusionMode::kNone ? std::span<const double>(baseline_grid) : config.alpha_grid;
      result.runs.push_back({series.predictor, mode,
                             GridSearchAlpha(series, matrices[m], dataset, mode, grid, config.aggregation)});
    }
  }
  return result;
}

void WriteStepCsv(std::ostream& out, const ExperimentResult& result) {
  WriteEvalCsvHeader(out);
  for (const GridRun& run : result.runs) {
    for (const AlphaEvaluation& a : run.result.per_alpha) {
      for (const EvalReport& r : a.steps) WriteEvalCsvRow(out, r);
    }
  }
}

void WriteAlphaGridCsv(std::ostream& out, const ExperimentResult& result) {
  WriteEvalCsvHeader(out);
  for (const GridRun& run : result.runs) {
    for (const AlphaEvaluation& a : run.result.per_alpha) WriteEvalCsvRow(out, a.aggregate);
  }
}

void WriteSummary(std::ostream& out, const ExperimentResult& result, const ExperimentConfig& config,
                  const DualDataset& dataset) {
  out << "Interaction link prediction, best alpha by " << ToString(config.aggregation)
      << " GMAUC over t = " << result.steps.front() << ".." << result.steps.back() << "\n";
  out << "nodes " << dataset.node_count() << ", snapshots " << dataset.snapshot_count()
      << ", seed " << config.seed << "\n";
  const PredictorConfig& p0 = config.predictors.front();
  out << "lambda " << p0.ewma.lambda << ", katz beta " << p0.katz.beta << " L " << p0.katz.max_length
      << ", blocks " << p0.sbm.blocks << " mix " << p0.sbm.mix << "\n\n";
  const std::string rule(64, '-');
  out << Pad("Predictor", 20) << Pad("PRAUC(new)", 12) << Pad("AUC(prev)", 12) << Pad("GMAUC", 10)
      << "alpha\n";

  auto row = [&out](const GridRun& run) {
    const EvalReport& r = run.result.best().aggregate;
    const std::string name =
        run.mode == FusionMode::kNone ? run.predictor : run.predictor + " + " + ToString(run.mode);
    char alpha[16];
    std::snprintf(alpha, sizeof(alpha), "%.1f", run.result.best_alpha);
    out << Pad(name, 20) << Pad(Fixed3(r.prauc_new), 12) << Pad(Fixed3(r.auc_prev), 12)
        << Pad(Fixed3(r.gmauc), 10) << alpha << "\n";
  };
  auto is_predicted = [](FusionMode m) {
    return m == FusionMode::kPredictedAdamicAdar || m == FusionMode::kPredictedKatz;
  };
  for (int group = 0; group < 3; ++group) {
    bool any = false;
    for (const GridRun& run : result.runs) {
      const bool in_group = group == 0   ? run.mode == FusionMode::kNone
                            : group == 1 ? run.mode == FusionMode::kCurrentFriends
                                         : is_predicted(run.mode);
      if (!in_group) continue;
      if (!any) out << rule << "\n";
      any = true;
      row(run);
    }
  }
  out << rule << "\n";
}

void WriteFractionCsv(std::ostream& out, const DualDataset& dataset) {
  out << "t,friends_interacting,interactions_between_friends\n";
  for (const FractionPoint& p : FractionSeries(dataset)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu,%.9g,%.9g\n", p.t, p.friends_interacting,
                  p.interactions_between_friends);
    out << buf;
  }
}

ExperimentResult RunSweep(const ExperimentConfig& config) {
  const DualDataset dataset = LoadExperimentData(config);
  ExperimentResult result = RunExperiment(config, dataset);
  std::filesystem::create_directories(config.output_dir);
  auto open = [&config](const char* name) {
    std::ofstream out(config.output_dir / name);
    if (!out) throw Error("cannot write " + (config.output_dir / name).string());
    return out;
  };
  {
    auto out = open("eval_steps.csv");
    WriteStepCsv(out, result);
  }
  {
    auto out = open("eval_alpha.csv");
    WriteAlphaGridCsv(out, result);
  }
  {
    auto out = open("summary.txt");
    WriteSummary(out, result, config, dataset);
  }
  {
    auto out = open("fractions.csv");
    WriteFractionCsv(out, dataset);
  }
  return result;
}

}  // namespace linkpred
