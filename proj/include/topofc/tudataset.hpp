// tudataset.hpp - loader and writer for the TUDataset on-disk format.
//
// Files under <root>/: {name}_A.txt (directed edge list "i, j", 1-based,
// each undirected edge listed twice), {name}_graph_indicator.txt (graph id
// per node), {name}_graph_labels.txt, optional {name}_node_labels.txt and
// {name}_node_attributes.txt. LF and CRLF both accepted.
#pragma once

#include <filesystem>
#include <string>

#include "topofc/graph.hpp"

namespace topofc {

Dataset parse_tudataset(const std::filesystem::path& root_dir, const std::string& name);

// Writes ds back out in the same format, deterministically: edges of each
// graph sorted, each listed in both directions, raw labels restored from the
// alphabet. Round-trips through parse_tudataset.
void write_tudataset(const Dataset& ds, const std::filesystem::path& root_dir);

// Canonical single-string serialization (concatenated file bodies). Two
// parses of the same directory always produce identical strings.
std::string canonical_serialization(const Dataset& ds);

}  // namespace topofc
