// End-to-end CLI tests driving the built binary on synthetic datasets.
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <cstdio>
#include <sstream>

#include "testutil.hpp"
#include "topofc/fconn.hpp"
#include "topofc/features.hpp"
#include "topofc/pgh.hpp"
#include "topofc/tudataset.hpp"

using testutil::TempDir;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TOPOFC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

// Writes the synthetic dataset in TU format under dir/SYNTH.
std::filesystem::path write_synth(const TempDir& dir, int graphs, std::uint64_t seed) {
  topofc::Dataset ds = testutil::make_synthetic_dataset(graphs, seed);
  auto root = dir.path() / "SYNTH";
  topofc::write_tudataset(ds, root);
  return root;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("crossval smoke run writes a report and exits 0") {
  TempDir dir("cli_crossval");
  auto root = write_synth(dir, 30, 1);
  auto out = dir.path() / "out";
  const int code = run_cli("crossval --dataset " + root.string() +
                           " --features labels+ldp --mn avg --protocol kfold:5" +
                           " --epochs 20 --seed 7 --outdir " + out.string());
  CHECK(code == 0);
  const std::string report = slurp(out / "crossval_report.jsonl");
  CHECK(line_count(report) == 1 + 5 + 1);  // header + folds + summary
  CHECK(report.find("\"mean_accuracy\"") != std::string::npos);
  CHECK(report.find("\"input_hash\"") != std::string::npos);
  CHECK(report.find("\"workers\"") == std::string::npos);  // execution detail
}

TEST_CASE("unknown subcommand exits 2") {
  CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("missing dataset directory exits 3 and names the path") {
  TempDir dir("cli_missing");
  const std::string cmd = std::string(TOPOFC_CLI_PATH) +
                          " extract --dataset /nonexistent/DS 2> " +
                          (dir.path() / "err.txt").string();
  const int code = WEXITSTATUS(std::system(cmd.c_str()));
  CHECK(code == 3);
  CHECK(slurp(dir.path() / "err.txt").find("/nonexistent/DS") != std::string::npos);
}

TEST_CASE("missing mandatory file exits 3 naming the file") {
  TempDir dir("cli_partial");
  auto root = write_synth(dir, 4, 2);
  std::filesystem::remove(root / "SYNTH_graph_labels.txt");
  const std::string cmd = std::string(TOPOFC_CLI_PATH) + " validate --dataset " +
                          root.string() + " 2> " + (dir.path() / "err.txt").string();
  const int code = WEXITSTATUS(std::system(cmd.c_str()));
  CHECK(code == 3);
  CHECK(slurp(dir.path() / "err.txt").find("SYNTH_graph_labels.txt") != std::string::npos);
}

TEST_CASE("extract output is byte-identical across worker counts") {
  TempDir dir("cli_workers");
  auto root = write_synth(dir, 24, 3);
  auto out1 = dir.path() / "w1";
  auto out8 = dir.path() / "w8";
  REQUIRE(run_cli("extract --dataset " + root.string() + " --workers 1 --outdir " +
                  out1.string()) == 0);
  REQUIRE(run_cli("extract --dataset " + root.string() + " --workers 8 --outdir " +
                  out8.string()) == 0);
  CHECK(slurp(out1 / "extract.jsonl") == slurp(out8 / "extract.jsonl"));
}

TEST_CASE("crossval reports are byte-identical across runs and worker counts") {
  TempDir dir("cli_cv_det");
  auto root = write_synth(dir, 20, 4);
  auto outs = {dir.path() / "a", dir.path() / "b", dir.path() / "c"};
  int workers = 1;
  for (const auto& out : outs) {
    REQUIRE(run_cli("crossval --dataset " + root.string() +
                    " --epochs 10 --seed 9 --workers " + std::to_string(workers) +
                    " --outdir " + out.string()) == 0);
    workers += 7;  // 1, 8, 15
  }
  const std::string first = slurp(dir.path() / "a" / "crossval_report.jsonl");
  CHECK(first == slurp(dir.path() / "b" / "crossval_report.jsonl"));
  CHECK(first == slurp(dir.path() / "c" / "crossval_report.jsonl"));
}

TEST_CASE("embed emits one record per graph with the selected m and n") {
  TempDir dir("cli_embed");
  auto root = write_synth(dir, 10, 5);
  auto out = dir.path() / "out";
  REQUIRE(run_cli("embed --dataset " + root.string() + " --mn fixed:4,6 --outdir " +
                  out.string()) == 0);
  const std::string body = slurp(out / "embed.jsonl");
  CHECK(line_count(body) == 1 + 10);
  CHECK(body.find("\"m\":4") != std::string::npos);
  CHECK(body.find("\"n\":6") != std::string::npos);
  CHECK(body.find("\"degenerate_b\":false") != std::string::npos);
}

TEST_CASE("betti curve CSV matches the library computation bit-exactly") {
  TempDir dir("cli_betti");
  auto root = write_synth(dir, 6, 6);
  auto out = dir.path() / "out";
  REQUIRE(run_cli("betti --dataset " + root.string() +
                  " --graph 2 --grid uniform:7 --emit-fc " +
                  (out / "fc.csv").string() + " --outdir " + out.string()) == 0);

  const std::string body = slurp(out / "betti.csv");
  CHECK(body.find("epsilon,beta0,beta1\n") != std::string::npos);
  CHECK(line_count(body) == 2 + 7);  // config comment + header + 7 grid rows

  const std::string fc = slurp(out / "fc.csv");
  CHECK(fc.find("i,j,r\n") != std::string::npos);
  CHECK(fc.find("0,1,") != std::string::npos);

  // recompute through the library; %.17g round-trips doubles exactly
  topofc::Dataset ds = topofc::parse_tudataset(root, "SYNTH");
  topofc::Graph g = topofc::graph_slice(ds, 2);
  topofc::FcMatrix m =
      topofc::functional_connectivity(topofc::ldp(g));
  topofc::PersistenceDecomposition dec =
      topofc::decompose(topofc::WeightedGraph::from_fc(m));

  std::istringstream lines(body);
  std::string line;
  std::getline(lines, line);  // config comment
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    double eps, b0, b1;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &eps, &b0, &b1) == 3);
    topofc::BettiCurve curve = topofc::betti_curve(dec, {eps});
    CHECK(curve.beta0[0] == int(b0));
    CHECK(curve.beta1[0] == int(b1));
    ++rows;
  }
  CHECK(rows == 7);
}

TEST_CASE("distance and barycenter emit plot-ready CSVs") {
  TempDir dir("cli_dist");
  auto root = write_synth(dir, 8, 7);
  auto out = dir.path() / "out";
  REQUIRE(run_cli("distance --dataset " + root.string() + " --p 2 --outdir " +
                  out.string()) == 0);
  const std::string dist = slurp(out / "distance.csv");
  CHECK(dist.find("i,j,w_p\n") != std::string::npos);
  CHECK(line_count(dist) == 2 + 8 * 7 / 2);

  REQUIRE(run_cli("barycenter --dataset " + root.string() +
                  " --class 0 --set deaths --resolution 5 --outdir " +
                  out.string()) == 0);
  const std::string bary = slurp(out / "barycenter.csv");
  CHECK(bary.find("z,value_mean,value_std\n") != std::string::npos);
  CHECK(line_count(bary) == 2 + 5);
}

TEST_CASE("train subcommand fits the full dataset") {
  TempDir dir("cli_train");
  auto root = write_synth(dir, 16, 8);
  auto out = dir.path() / "out";
  REQUIRE(run_cli("train --dataset " + root.string() + " --epochs 30 --outdir " +
                  out.string()) == 0);
  const std::string report = slurp(out / "train_report.jsonl");
  CHECK(line_count(report) == 3);  // header + one fold row + summary
}

TEST_CASE("config file supplies defaults and flags win") {
  TempDir dir("cli_config");
  auto root = write_synth(dir, 10, 9);
  auto out = dir.path() / "out";
  testutil::write_file(dir.path() / "run.json",
                       "{\"dataset\": \"" + root.string() +
                           "\", \"epochs\": 5, \"seed\": 4, \"protocol\": \"kfold:5\"}");
  REQUIRE(run_cli("crossval --config " + (dir.path() / "run.json").string() +
                  " --protocol kfold:2 --outdir " + out.string()) == 0);
  const std::string report = slurp(out / "crossval_report.jsonl");
  // the flag value, not the config value, is echoed and used
  CHECK(report.find("\"protocol\":\"kfold:2\"") != std::string::npos);
  CHECK(line_count(report) == 1 + 2 + 1);
}

TEST_CASE("single-node graphs flow through extract and embed as degenerate records") {
  TempDir dir("cli_degenerate");
  // graph 1: triangle; graph 2: a single node with no edges
  testutil::RawTU raw;
  raw.a = "1, 2\n2, 1\n1, 3\n3, 1\n2, 3\n3, 2\n";
  raw.indicator = "1\n1\n1\n2\n";
  raw.labels = "0\n1\n";
  auto root = dir.path() / "MINI";
  testutil::write_raw(root, "MINI", raw);

  auto out = dir.path() / "out";
  REQUIRE(run_cli("extract --dataset " + root.string() + " --outdir " + out.string()) ==
          0);
  const std::string extract = slurp(out / "extract.jsonl");
  CHECK(extract.find("\"births\":[],\"deaths\":[]") != std::string::npos);
  CHECK(extract.find("\"degenerate\":true") != std::string::npos);

  REQUIRE(run_cli("embed --dataset " + root.string() + " --mn fixed:2,2 --outdir " +
                  out.string()) == 0);
  const std::string embed = slurp(out / "embed.jsonl");
  CHECK(embed.find("\"v_b\":[0,0]") != std::string::npos);
  CHECK(embed.find("\"degenerate_b\":true") != std::string::npos);
  CHECK(embed.find("\"degenerate_d\":true") != std::string::npos);
}

TEST_CASE("malformed config file exits 3") {
  TempDir dir("cli_badconfig");
  testutil::write_file(dir.path() / "bad.json", "{not json");
  CHECK(run_cli("crossval --config " + (dir.path() / "bad.json").string()) == 3);
  CHECK(run_cli("crossval --config " + (dir.path() / "missing.json").string()) == 3);
}

TEST_CASE("TOPOFC_WORKERS environment variable sets the default worker count") {
  TempDir dir("cli_env");
  auto root = write_synth(dir, 8, 10);
  auto out = dir.path() / "out";
  const std::string cmd = "TOPOFC_WORKERS=4 " + std::string(TOPOFC_CLI_PATH) +
                          " extract --dataset " + root.string() + " --outdir " +
                          out.string() + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(std::filesystem::exists(out / "extract.jsonl"));
}

TEST_SUITE_END();
