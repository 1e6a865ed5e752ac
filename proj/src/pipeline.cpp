// pipeline.cpp - dataset-level composition of the feature, connectivity,
// homology and embedding stages.
#include "topofc/pipeline.hpp"

#include "topofc/fconn.hpp"
#include "topofc/workers.hpp"

namespace topofc {

std::vector<GraphTopology> extract_topology(const Dataset& ds,
                                            const FeaturePolicy& features, int workers) {
  const std::vector<int> alphabet = node_label_alphabet(ds);
  std::vector<GraphTopology> out(ds.graphs.size());
  parallel_for(ds.graphs.size(), workers, [&](std::size_t gi) {
    const Graph& g = ds.graphs[gi];
    GraphTopology& topo = out[gi];
    topo.graph_id = static_cast<int>(gi);
    topo.num_nodes = g.num_nodes;
    try {
      FeatureMatrix X = node_features(g, features, alphabet);
      FcMatrix fc = functional_connectivity(X);
      topo.zero_variance_rows = static_cast<int>(fc.zero_variance_rows.size());
      topo.decomposition = decompose(WeightedGraph::from_fc(fc));
    } catch (const Error& e) {
      throw Error(e.category(),
                  "graph " + std::to_string(gi) + ": " + e.what());
    }
  });
  return out;
}

DatasetEmbeddings compute_embeddings(const Dataset& ds, const FeaturePolicy& features,
                                     const MnPolicy& mn, int workers) {
  DatasetEmbeddings out;
  out.topology = extract_topology(ds, features, workers);

  std::vector<GraphSetStats> stats;
  stats.reserve(out.topology.size());
  for (const GraphTopology& t : out.topology)
    stats.push_back({t.num_nodes,
                     static_cast<std::int64_t>(t.decomposition.births.size()),
                     static_cast<std::int64_t>(t.decomposition.deaths.size())});
  auto [m, n] = select_mn(stats, mn);
  out.m = m;
  out.n = n;

  out.embeddings.resize(out.topology.size());
  parallel_for(out.topology.size(), workers, [&](std::size_t gi) {
    out.embeddings[gi] = embed(out.topology[gi].decomposition, m, n);
  });
  return out;
}

EvalReport run_crossval(const Dataset& ds, const PipelineConfig& cfg) {
  DatasetEmbeddings emb = compute_embeddings(ds, cfg.features, cfg.mn, cfg.workers);

  std::vector<std::vector<double>> X;
  X.reserve(emb.embeddings.size());
  for (const TopoEmbedding& e : emb.embeddings) X.push_back(e.concat());

  MlpConfig mlp;
  mlp.input_dim = emb.m + emb.n;
  mlp.hidden_dim = cfg.hidden_dim;
  mlp.num_classes = ds.num_classes();
  mlp.dropout = cfg.dropout;
  mlp.lr = cfg.lr;
  mlp.weight_decay = cfg.weight_decay;
  mlp.epochs = cfg.epochs;
  mlp.batch_size = cfg.batch_size;
  mlp.seed = cfg.seed;

  CrossvalOptions options;
  options.protocol = cfg.protocol;
  options.standardize = cfg.standardize;
  options.workers = cfg.workers;
  return crossval(X, ds.labels, mlp, options);
}

}  // namespace topofc
