// topofc.cpp - command-line front end: parsing -> features -> functional
// connectivity -> persistent graph homology -> embeddings -> metrics and
// training. All outputs are line-delimited records or CSV, written
// atomically, with the resolved configuration echoed into every file.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topofc/fconn.hpp"
#include "topofc/io_util.hpp"
#include "topofc/pipeline.hpp"
#include "topofc/tudataset.hpp"
#include "topofc/wasser.hpp"
#include "topofc/workers.hpp"

namespace {

using nlohmann::json;
using namespace topofc;

struct CommonOpts {
  std::string dataset_dir;
  std::string features = "ldp";
  std::string mn = "avg";
  std::string outdir = ".";
  std::uint64_t seed = 0;
  int workers = 1;
  std::string config_file;
};

struct LearnOpts {
  int hidden = 64;
  double lr = 1e-3;
  double weight_decay = 1e-5;
  double dropout = 0.3;
  int epochs = 200;
  int batch_size = 64;
  std::string protocol = "kfold:5";
  bool no_standardize = false;
};

int default_workers() {
  if (const char* env = std::getenv("TOPOFC_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

// --config file mirrors the long flag names; explicit flags win.
void apply_config_file(const std::string& path, CommonOpts& common, LearnOpts& learn) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read config file: " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw FormatError("bad config file " + path + ": " + e.what());
  }
  auto get = [&](const char* key, auto& slot) {
    if (cfg.contains(key)) slot = cfg.at(key).get<std::decay_t<decltype(slot)>>();
  };
  get("dataset", common.dataset_dir);
  get("features", common.features);
  get("mn", common.mn);
  get("outdir", common.outdir);
  get("seed", common.seed);
  get("workers", common.workers);
  get("hidden", learn.hidden);
  get("lr", learn.lr);
  get("weight-decay", learn.weight_decay);
  get("dropout", learn.dropout);
  get("epochs", learn.epochs);
  get("batch-size", learn.batch_size);
  get("protocol", learn.protocol);
  get("no-standardize", learn.no_standardize);
}

struct LoadedDataset {
  Dataset ds;
  std::string input_hash;
  std::filesystem::path root;
};

LoadedDataset load_dataset(const CommonOpts& opts) {
  if (opts.dataset_dir.empty()) throw ArgumentError("--dataset is required");
  std::filesystem::path root(opts.dataset_dir);
  if (!std::filesystem::is_directory(root))
    throw FormatError("dataset directory does not exist: " + root.string());
  const std::string name = root.filename().string();

  LoadedDataset out{parse_tudataset(root, name), "", root};
  std::vector<std::filesystem::path> files;
  for (const char* suffix : {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt",
                             "_node_labels.txt", "_node_attributes.txt"}) {
    auto p = root / (name + suffix);
    if (std::filesystem::exists(p)) files.push_back(p);
  }
  out.input_hash = hash_files(files);
  return out;
}

// Result-affecting settings only: worker count and output paths are
// execution details and deliberately excluded so reruns with different
// parallelism stay byte-identical.
json config_echo(const CommonOpts& common, const LearnOpts* learn,
                 const json& extra = {}) {
  json echo;
  echo["dataset"] = common.dataset_dir;
  echo["features"] = common.features;
  echo["mn"] = common.mn;
  echo["seed"] = common.seed;
  if (learn) {
    echo["hidden"] = learn->hidden;
    echo["lr"] = learn->lr;
    echo["weight_decay"] = learn->weight_decay;
    echo["dropout"] = learn->dropout;
    echo["epochs"] = learn->epochs;
    echo["batch_size"] = learn->batch_size;
    echo["protocol"] = learn->protocol;
    echo["standardize"] = !learn->no_standardize;
  }
  if (!extra.empty())
    for (auto it = extra.begin(); it != extra.end(); ++it) echo[it.key()] = it.value();
  return echo;
}

std::string header_line(const json& echo, const std::string& input_hash) {
  json header;
  header["config"] = echo;
  header["input_hash"] = input_hash;
  return header.dump();
}

std::string join_g17(const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += format_g17(values[i]);
  }
  return s + "]";
}

PipelineConfig make_pipeline_config(const CommonOpts& common, const LearnOpts& learn) {
  PipelineConfig cfg;
  cfg.features = FeaturePolicy::parse(common.features);
  cfg.mn = MnPolicy::parse(common.mn);
  cfg.protocol = Protocol::parse(learn.protocol);
  cfg.hidden_dim = learn.hidden;
  cfg.lr = learn.lr;
  cfg.weight_decay = learn.weight_decay;
  cfg.dropout = learn.dropout;
  cfg.epochs = learn.epochs;
  cfg.batch_size = learn.batch_size;
  cfg.standardize = !learn.no_standardize;
  cfg.seed = common.seed;
  cfg.workers = common.workers;
  return cfg;
}

ValueSet graph_value_set(const GraphTopology& topo, const std::string& which) {
  const auto& src =
      which == "deaths" ? topo.decomposition.deaths : topo.decomposition.births;
  if (src.empty())
    throw EmptySetError("graph " + std::to_string(topo.graph_id) + " has an empty " +
                        which + " set");
  return ValueSet(src);
}

// ---- subcommands ----------------------------------------------------------

void cmd_validate(const CommonOpts& common) {
  LoadedDataset data = load_dataset(common);
  ValidationReport report = validate(data.ds);

  std::ostringstream body;
  body << header_line(config_echo(common, nullptr), data.input_hash) << "\n";
  for (const GraphViolations& v : report.per_graph) {
    if (v.clean()) continue;
    json rec;
    rec["graph"] = v.graph_id;
    rec["self_loops_removed"] = v.self_loops_removed;
    rec["duplicate_edges_removed"] = v.duplicate_edges_removed;
    rec["asymmetric_edges"] = v.asymmetric_edges;
    rec["isolated_nodes"] = v.isolated_nodes;
    body << rec.dump() << "\n";
  }
  json totals;
  totals["graphs"] = data.ds.graphs.size();
  totals["classes"] = data.ds.num_classes();
  totals["total_self_loops_removed"] = report.total_self_loops();
  totals["total_duplicate_edges_removed"] = report.total_duplicate_edges();
  totals["total_asymmetric_edges"] = report.total_asymmetric_edges();
  totals["total_isolated_nodes"] = report.total_isolated_nodes();
  body << totals.dump() << "\n";
  atomic_write(std::filesystem::path(common.outdir) / "validate.jsonl", body.str());

  std::cout << data.ds.name << ": " << data.ds.graphs.size() << " graphs, "
            << data.ds.num_classes() << " classes; self-loops removed "
            << report.total_self_loops() << ", duplicate edges removed "
            << report.total_duplicate_edges() << ", asymmetric edges "
            << report.total_asymmetric_edges() << ", isolated nodes "
            << report.total_isolated_nodes() << "\n";
}

void cmd_extract(const CommonOpts& common) {
  LoadedDataset data = load_dataset(common);
  auto topo = extract_topology(data.ds, FeaturePolicy::parse(common.features),
                               common.workers);

  std::ostringstream body;
  body << header_line(config_echo(common, nullptr), data.input_hash) << "\n";
  for (const GraphTopology& t : topo) {
    const bool degenerate =
        t.decomposition.births.empty() && t.decomposition.deaths.empty();
    body << "{\"graph\":" << t.graph_id << ",\"num_nodes\":" << t.num_nodes
         << ",\"births\":" << join_g17(t.decomposition.births)
         << ",\"deaths\":" << join_g17(t.decomposition.deaths)
         << ",\"zero_variance_rows\":" << t.zero_variance_rows
         << ",\"degenerate\":" << (degenerate ? "true" : "false") << "}\n";
  }
  atomic_write(std::filesystem::path(common.outdir) / "extract.jsonl", body.str());
  std::cout << "wrote " << topo.size() << " records\n";
}

void cmd_embed(const CommonOpts& common) {
  LoadedDataset data = load_dataset(common);
  DatasetEmbeddings emb = compute_embeddings(
      data.ds, FeaturePolicy::parse(common.features), MnPolicy::parse(common.mn),
      common.workers);

  json extra;
  extra["m"] = emb.m;
  extra["n"] = emb.n;
  std::ostringstream body;
  body << header_line(config_echo(common, nullptr, extra), data.input_hash) << "\n";
  for (std::size_t gi = 0; gi < emb.embeddings.size(); ++gi) {
    const TopoEmbedding& e = emb.embeddings[gi];
    body << "{\"graph\":" << gi << ",\"label\":" << data.ds.labels[gi]
         << ",\"m\":" << e.m << ",\"n\":" << e.n << ",\"v_b\":" << join_g17(e.v_b)
         << ",\"v_d\":" << join_g17(e.v_d)
         << ",\"degenerate_b\":" << (e.degenerate_b ? "true" : "false")
         << ",\"degenerate_d\":" << (e.degenerate_d ? "true" : "false") << "}\n";
  }
  atomic_write(std::filesystem::path(common.outdir) / "embed.jsonl", body.str());
  std::cout << "wrote " << emb.embeddings.size() << " records (m=" << emb.m
            << ", n=" << emb.n << ")\n";
}

void cmd_betti(const CommonOpts& common, int graph_idx, const std::string& grid,
               const std::string& emit_fc) {
  LoadedDataset data = load_dataset(common);
  Graph g = graph_slice(data.ds, static_cast<std::size_t>(graph_idx));
  FeatureMatrix X = node_features(g, FeaturePolicy::parse(common.features),
                                  node_label_alphabet(data.ds));
  FcMatrix fc = functional_connectivity(X);
  WeightedGraph wg = WeightedGraph::from_fc(fc);

  if (!emit_fc.empty()) {
    std::ostringstream fc_body;
    fc_body << "# " << header_line(config_echo(common, nullptr, {{"graph", graph_idx}}),
                                   data.input_hash)
            << "\n";
    fc_body << "i,j,r\n";
    for (int i = 0; i < fc.n; ++i)
      for (int j = i + 1; j < fc.n; ++j)
        fc_body << i << "," << j << "," << format_g17(fc.at(i, j)) << "\n";
    atomic_write(emit_fc, fc_body.str());
  }

  PersistenceDecomposition dec = decompose(wg);

  std::vector<double> thresholds;
  std::vector<double> weights;
  for (const WeightedEdge& e : wg.edges()) weights.push_back(e.w);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (weights.empty()) throw EmptySetError("graph has no edges to build a grid from");

  if (grid == "weights") {
    thresholds = weights;
  } else if (grid.rfind("uniform:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(grid.substr(8));
    } catch (const std::logic_error&) {
      throw ArgumentError("bad grid '" + grid + "'");
    }
    if (k < 1) throw ArgumentError("uniform grid needs at least one point");
    const double lo = weights.front(), hi = weights.back();
    if (k == 1 || lo == hi) {
      thresholds.push_back(lo);
    } else {
      for (int i = 0; i < k; ++i)
        thresholds.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(k - 1));
    }
  } else {
    throw ArgumentError("unknown grid '" + grid + "' (expected uniform:K or weights)");
  }

  BettiCurve curve = betti_curve(dec, thresholds);
  std::ostringstream body;
  body << "# "
       << header_line(
              config_echo(common, nullptr, {{"graph", graph_idx}, {"grid", grid}}),
              data.input_hash)
       << "\n";
  body << "epsilon,beta0,beta1\n";
  for (std::size_t i = 0; i < curve.thresholds.size(); ++i)
    body << format_g17(curve.thresholds[i]) << "," << curve.beta0[i] << ","
         << curve.beta1[i] << "\n";
  atomic_write(std::filesystem::path(common.outdir) / "betti.csv", body.str());
  std::cout << "wrote " << curve.thresholds.size() << " grid points\n";
}

void cmd_distance(const CommonOpts& common, int p, const std::string& which) {
  LoadedDataset data = load_dataset(common);
  auto topo = extract_topology(data.ds, FeaturePolicy::parse(common.features),
                               common.workers);
  std::vector<ValueSet> sets;
  sets.reserve(topo.size());
  for (const GraphTopology& t : topo) sets.push_back(graph_value_set(t, which));

  const std::size_t n = sets.size();
  std::vector<std::string> rows(n * (n - 1) / 2);
  // pair index -> (i, j) with i < j
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(rows.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  parallel_for(pairs.size(), common.workers, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    double d = wasserstein_p(sets[i], sets[j], static_cast<double>(p));
    rows[k] = std::to_string(i) + "," + std::to_string(j) + "," + format_g17(d);
  });

  std::ostringstream body;
  body << "# "
       << header_line(config_echo(common, nullptr, {{"p", p}, {"set", which}}),
                      data.input_hash)
       << "\n";
  body << "i,j,w_p\n";
  for (const std::string& r : rows) body << r << "\n";
  atomic_write(std::filesystem::path(common.outdir) / "distance.csv", body.str());
  std::cout << "wrote " << rows.size() << " pairs\n";
}

void cmd_barycenter(const CommonOpts& common, int cls, const std::string& which,
                    int resolution) {
  LoadedDataset data = load_dataset(common);
  if (cls < 0 || cls >= data.ds.num_classes())
    throw ArgumentError("class " + std::to_string(cls) + " outside [0, " +
                        std::to_string(data.ds.num_classes()) + ")");
  auto topo = extract_topology(data.ds, FeaturePolicy::parse(common.features),
                               common.workers);
  std::vector<ValueSet> sets;
  for (std::size_t gi = 0; gi < topo.size(); ++gi)
    if (data.ds.labels[gi] == cls) sets.push_back(graph_value_set(topo[gi], which));
  if (sets.empty()) throw ArgumentError("no graphs with class " + std::to_string(cls));

  int res = resolution;
  if (res <= 0) {
    std::size_t mx = 0;
    for (const ValueSet& s : sets) mx = std::max(mx, s.size());
    res = static_cast<int>(mx);
  }
  ValueSet center = barycenter(sets, res);

  std::ostringstream body;
  body << "# "
       << header_line(config_echo(common, nullptr,
                                  {{"class", cls}, {"set", which}, {"resolution", res}}),
                      data.input_hash)
       << "\n";
  body << "z,value_mean,value_std\n";
  for (int j = 1; j <= res; ++j) {
    const double z = static_cast<double>(j) / static_cast<double>(res);
    const double mean = center.values()[j - 1];
    double var = 0.0;
    for (const ValueSet& s : sets) {
      const double q = pseudo_inverse(s.span(), z);
      var += (q - mean) * (q - mean);
    }
    var /= static_cast<double>(sets.size());
    body << format_g17(z) << "," << format_g17(mean) << "," << format_g17(std::sqrt(var))
         << "\n";
  }
  atomic_write(std::filesystem::path(common.outdir) / "barycenter.csv", body.str());
  std::cout << "wrote barycenter at resolution " << res << "\n";
}

std::string report_body(const EvalReport& report, const json& echo,
                        const std::string& input_hash) {
  std::ostringstream body;
  body << header_line(echo, input_hash) << "\n";
  for (std::size_t f = 0; f < report.per_fold.size(); ++f) {
    body << "{\"fold\":" << f
         << ",\"accuracy\":" << format_g17(report.per_fold[f].accuracy)
         << ",\"weighted_f1\":" << format_g17(report.per_fold[f].weighted_f1) << "}\n";
  }
  body << "{\"mean_accuracy\":" << format_g17(report.mean_accuracy())
       << ",\"std_accuracy\":" << format_g17(report.std_accuracy())
       << ",\"mean_weighted_f1\":" << format_g17(report.mean_weighted_f1())
       << ",\"std_weighted_f1\":" << format_g17(report.std_weighted_f1())
       << ",\"pooled_accuracy\":" << format_g17(report.accuracy)
       << ",\"pooled_weighted_f1\":" << format_g17(report.weighted_f1)
       << ",\"confusion\":[";
  for (std::size_t r = 0; r < report.confusion.size(); ++r) {
    if (r) body << ",";
    body << "[";
    for (std::size_t c = 0; c < report.confusion[r].size(); ++c) {
      if (c) body << ",";
      body << report.confusion[r][c];
    }
    body << "]";
  }
  body << "]}\n";
  return body.str();
}

void cmd_crossval(const CommonOpts& common, const LearnOpts& learn) {
  LoadedDataset data = load_dataset(common);
  EvalReport report = run_crossval(data.ds, make_pipeline_config(common, learn));
  std::string body = report_body(report, config_echo(common, &learn), data.input_hash);
  atomic_write(std::filesystem::path(common.outdir) / "crossval_report.jsonl", body);
  std::cout << "mean accuracy " << format_g17(report.mean_accuracy())
            << ", mean weighted F1 " << format_g17(report.mean_weighted_f1()) << "\n";
}

void cmd_train(const CommonOpts& common, const LearnOpts& learn) {
  LoadedDataset data = load_dataset(common);
  PipelineConfig cfg = make_pipeline_config(common, learn);
  DatasetEmbeddings emb = compute_embeddings(data.ds, cfg.features, cfg.mn, cfg.workers);

  std::vector<std::vector<double>> X;
  for (const TopoEmbedding& e : emb.embeddings) X.push_back(e.concat());
  std::vector<int> all_rows(X.size());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  Standardizer stand;
  if (cfg.standardize) stand = Standardizer::fit(X, all_rows);
  auto transform = [&](std::size_t r) { return cfg.standardize ? stand.apply(X[r]) : X[r]; };

  MlpConfig mlp;
  mlp.input_dim = emb.m + emb.n;
  mlp.hidden_dim = cfg.hidden_dim;
  mlp.num_classes = data.ds.num_classes();
  mlp.dropout = cfg.dropout;
  mlp.lr = cfg.lr;
  mlp.weight_decay = cfg.weight_decay;
  mlp.epochs = cfg.epochs;
  mlp.batch_size = cfg.batch_size;
  mlp.seed = cfg.seed;

  std::vector<std::vector<double>> train_x;
  for (std::size_t r = 0; r < X.size(); ++r) train_x.push_back(transform(r));
  MlpModel model = train(train_x, data.ds.labels, mlp);

  std::vector<int> preds;
  for (std::size_t r = 0; r < X.size(); ++r) preds.push_back(predict(model, train_x[r]));
  long correct = 0;
  for (std::size_t r = 0; r < preds.size(); ++r)
    if (preds[r] == data.ds.labels[r]) ++correct;

  EvalReport report;
  report.per_fold.push_back(
      {static_cast<double>(correct) / static_cast<double>(preds.size()),
       weighted_f1(preds, data.ds.labels)});
  report.accuracy = report.per_fold[0].accuracy;
  report.weighted_f1 = report.per_fold[0].weighted_f1;
  report.confusion.assign(mlp.num_classes, std::vector<long>(mlp.num_classes, 0));
  for (std::size_t r = 0; r < preds.size(); ++r)
    report.confusion[data.ds.labels[r]][preds[r]]++;

  std::string body = report_body(report, config_echo(common, &learn), data.input_hash);
  atomic_write(std::filesystem::path(common.outdir) / "train_report.jsonl", body);
  std::cout << "training accuracy " << format_g17(report.accuracy) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"topofc - topological functional connectivity embeddings for graph classification"};
  app.require_subcommand(1);

  CommonOpts common;
  common.workers = default_workers();
  LearnOpts learn;

  // Config file defaults are applied before CLI11 parses, so explicit
  // flags always win.
  try {
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--config") common.config_file = argv[i + 1];
    if (!common.config_file.empty()) apply_config_file(common.config_file, common, learn);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  }

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--dataset", common.dataset_dir,
                    "dataset directory in TUDataset layout (name = directory basename)");
    cmd->add_option("--features", common.features,
                    "feature policy: intrinsic|labels|ldp|intrinsic+ldp|labels+ldp");
    cmd->add_option("--mn", common.mn, "m,n selection: max|min|avg|fixed:M,N");
    cmd->add_option("--outdir", common.outdir, "output directory");
    cmd->add_option("--seed", common.seed, "base seed; all randomness derives from it");
    cmd->add_option("--workers", common.workers,
                    "worker threads (TOPOFC_WORKERS overrides the default)");
    cmd->add_option("--config", common.config_file, "JSON config file mirroring flags");
  };
  auto add_learn = [&](CLI::App* cmd) {
    cmd->add_option("--hidden", learn.hidden, "hidden layer width")
        ->check(CLI::IsMember({32, 64, 128}));
    cmd->add_option("--lr", learn.lr, "learning rate");
    cmd->add_option("--weight-decay", learn.weight_decay, "L2 weight decay");
    cmd->add_option("--dropout", learn.dropout, "dropout probability");
    cmd->add_option("--epochs", learn.epochs, "training epochs");
    cmd->add_option("--batch-size", learn.batch_size, "mini-batch size");
    cmd->add_option("--protocol", learn.protocol, "kfold:K or splits:N");
    cmd->add_flag("--no-standardize", learn.no_standardize,
                  "skip per-fold feature standardization");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "parse and report dataset violations");
  add_common(validate_cmd);

  CLI::App* extract_cmd =
      app.add_subcommand("extract", "per-graph birth/death decompositions");
  add_common(extract_cmd);

  CLI::App* embed_cmd = app.add_subcommand("embed", "fixed-dimensional topological embeddings");
  add_common(embed_cmd);

  int betti_graph = 0;
  std::string betti_grid = "weights";
  std::string emit_fc;
  CLI::App* betti_cmd = app.add_subcommand("betti", "Betti curve of one graph");
  add_common(betti_cmd);
  betti_cmd->add_option("--graph", betti_graph, "graph index");
  betti_cmd->add_option("--grid", betti_grid, "uniform:K or weights");
  betti_cmd->add_option("--emit-fc", emit_fc, "also dump the FC matrix as CSV to this path");

  int dist_p = 1;
  std::string dist_set = "births";
  CLI::App* distance_cmd =
      app.add_subcommand("distance", "pairwise Wasserstein distances between graphs");
  add_common(distance_cmd);
  distance_cmd->add_option("--p", dist_p, "Wasserstein order")->check(CLI::IsMember({1, 2}));
  distance_cmd->add_option("--set", dist_set, "births or deaths")
      ->check(CLI::IsMember({"births", "deaths"}));

  int bary_class = 0;
  std::string bary_set = "births";
  int bary_resolution = 0;
  CLI::App* barycenter_cmd =
      app.add_subcommand("barycenter", "per-class Wasserstein barycenter");
  add_common(barycenter_cmd);
  barycenter_cmd->add_option("--class", bary_class, "class label (0-based)")->required();
  barycenter_cmd->add_option("--set", bary_set, "births or deaths")
      ->check(CLI::IsMember({"births", "deaths"}));
  barycenter_cmd->add_option("--resolution", bary_resolution,
                             "grid resolution (default: max set cardinality)");

  CLI::App* train_cmd = app.add_subcommand("train", "train on the full dataset");
  add_common(train_cmd);
  add_learn(train_cmd);

  CLI::App* crossval_cmd = app.add_subcommand("crossval", "cross-validated evaluation");
  add_common(crossval_cmd);
  add_learn(crossval_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (common.workers < 1) throw ArgumentError("--workers must be >= 1");
    if (validate_cmd->parsed()) cmd_validate(common);
    if (extract_cmd->parsed()) cmd_extract(common);
    if (embed_cmd->parsed()) cmd_embed(common);
    if (betti_cmd->parsed()) cmd_betti(common, betti_graph, betti_grid, emit_fc);
    if (distance_cmd->parsed()) cmd_distance(common, dist_p, dist_set);
    if (barycenter_cmd->parsed())
      cmd_barycenter(common, bary_class, bary_set, bary_resolution);
    if (train_cmd->parsed()) cmd_train(common, learn);
    if (crossval_cmd->parsed()) cmd_crossval(common, learn);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
