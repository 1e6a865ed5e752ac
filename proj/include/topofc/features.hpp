// features.hpp - node feature synthesis (featsynth module).
//
// Produces the |V| x d feature matrix consumed by the correlation stage,
// either from intrinsic attributes, one-hot node labels, the local degree
// profile, or a concatenation of those.
#pragma once

#include <string>
#include <vector>

#include "topofc/graph.hpp"
#include "topofc/matrix.hpp"

namespace topofc {

using FeatureMatrix = Matrix;

struct FeaturePolicy {
  enum class Kind { intrinsic, label_onehot, ldp, concat };

  Kind kind = Kind::ldp;
  std::vector<FeaturePolicy> parts;  // non-empty iff kind == concat

  static FeaturePolicy intrinsic() { return {Kind::intrinsic, {}}; }
  static FeaturePolicy label_onehot() { return {Kind::label_onehot, {}}; }
  static FeaturePolicy ldp() { return {Kind::ldp, {}}; }
  static FeaturePolicy concat(std::vector<FeaturePolicy> parts);

  // Accepts the CLI spellings: intrinsic, labels, ldp, intrinsic+ldp,
  // labels+ldp (any '+'-joined combination of the three atoms).
  static FeaturePolicy parse(const std::string& text);
  std::string to_string() const;
};

// 5-dim local degree profile per node: (degree, min, max, mean, population
// std of neighbor degrees). Isolated nodes get all zeros.
FeatureMatrix ldp(const Graph& g);

// Feature matrix for one graph under the policy. label_onehot uses
// label_alphabet when non-empty (dataset-wide encoding); otherwise the
// graph's own distinct labels. Throws PolicyError when the policy is not
// applicable and DegenerateFeatureError when the resulting d < 2.
FeatureMatrix node_features(const Graph& g, const FeaturePolicy& policy,
                            const std::vector<int>& label_alphabet = {});

}  // namespace topofc
