// pipeline.hpp - end-to-end composition: dataset -> features -> functional
// connectivity -> persistence decomposition -> embeddings -> evaluation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topofc/embed.hpp"
#include "topofc/eval.hpp"
#include "topofc/features.hpp"
#include "topofc/graph.hpp"

namespace topofc {

struct GraphTopology {
  int graph_id = 0;
  int num_nodes = 0;
  PersistenceDecomposition decomposition;
  int zero_variance_rows = 0;
};

// Per-graph decompositions of the functional connectivity graphs, ordered
// by graph id regardless of worker count.
std::vector<GraphTopology> extract_topology(const Dataset& ds,
                                            const FeaturePolicy& features, int workers);

struct DatasetEmbeddings {
  int m = 0;
  int n = 0;
  std::vector<TopoEmbedding> embeddings;  // one per graph, by graph id
  std::vector<GraphTopology> topology;
};

DatasetEmbeddings compute_embeddings(const Dataset& ds, const FeaturePolicy& features,
                                     const MnPolicy& mn, int workers);

struct PipelineConfig {
  FeaturePolicy features = FeaturePolicy::ldp();
  MnPolicy mn = MnPolicy::avg();
  Protocol protocol{Protocol::Kind::kfold, 5};
  int hidden_dim = 64;
  double lr = 1e-3;
  double weight_decay = 1e-5;
  double dropout = 0.3;
  int epochs = 200;
  int batch_size = 64;
  bool standardize = true;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Full standalone-classifier evaluation over a dataset.
EvalReport run_crossval(const Dataset& ds, const PipelineConfig& cfg);

}  // namespace topofc
