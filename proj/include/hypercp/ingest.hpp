#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypercp/hypergraph.hpp"

namespace hypercp {

// Canonical edge-list text format: one hyperedge per line, whitespace
// separated node labels, optional trailing "# w=<float>" weight; lines
// starting with '%' are comments and blank lines are skipped. Labels get
// dense ids in first-appearance order.
LabeledHypergraph read_edge_list(std::istream& in);
/// File variant; gzip-compressed files are decompressed transparently.
LabeledHypergraph read_edge_list_file(const std::string& path);

// Writes every edge with labels in ascending dense-id order and the weight
// always printed (shortest round-trip form).
void write_edge_list(std::ostream& out, const LabeledHypergraph& h);

struct SimplexImport {
  LabeledHypergraph hypergraph;
  std::size_t simplices = 0;          // simplices in the stream
  std::size_t dropped_singletons = 0;  // simplices with < 2 distinct nodes
};

// nverts stream: one simplex size per line. simplices stream: one node label
// per line, sum(nverts) lines. Identical simplices (as sets) merge into one
// hyperedge weighted by multiplicity; the times stream, when given, is only
// checked for length.
SimplexImport read_simplex_stream(std::istream& nverts, std::istream& simplices,
                                  std::istream* times = nullptr);
SimplexImport read_simplex_stream_files(const std::string& nverts_path,
                                        const std::string& simplices_path,
                                        const std::string& times_path = {});

struct CoreSetImport {
  std::vector<NodeId> nodes;
  std::vector<std::string> unmatched;
};

/// Reads a whitespace-separated label list and resolves it against `labels`.
CoreSetImport read_core_set(std::istream& in, const std::vector<std::string>& labels);
CoreSetImport read_core_set_file(const std::string& path, const std::vector<std::string>& labels);

/// Whole file contents; gzip input is detected and inflated.
std::string read_text_file(const std::string& path);

}  // namespace hypercp
