#include "hypercp/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hypercp/numeric.hpp"

namespace hypercp {

namespace {

class LabelIndex {
 public:
  NodeId intern(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string> take() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_weight(const std::string& text, std::size_t line_no) {
  std::string t = trim(text);
  if (t.rfind("w=", 0) != 0)
    throw Error("line " + std::to_string(line_no) + ": expected '# w=<float>' annotation");
  t = t.substr(2);
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), w);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw Error("line " + std::to_string(line_no) + ": malformed weight '" + t + "'");
  if (!(w > 0.0) || !std::isfinite(w))
    throw Error("line " + std::to_string(line_no) + ": weight must be positive and finite");
  return w;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::unique_ptr<gzFile_s, decltype(&gzclose)> gz(gzopen(path.c_str(), "rb"), &gzclose);
  if (!gz) throw Error("cannot open '" + path + "'");
  std::string out;
  std::array<char, 1 << 16> buf{};
  while (true) {
    int got = gzread(gz.get(), buf.data(), static_cast<unsigned>(buf.size()));
    if (got < 0) throw Error("read error in '" + path + "'");
    if (got == 0) break;
    out.append(buf.data(), static_cast<std::size_t>(got));
  }
  return out;
}

LabeledHypergraph read_edge_list(std::istream& in) {
  LabelIndex index;
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '%') continue;
    double w = 1.0;
    if (auto hash = body.find('#'); hash != std::string::npos) {
      w = parse_weight(body.substr(hash + 1), line_no);
      body = body.substr(0, hash);
    }
    std::istringstream tokens(body);
    std::vector<NodeId> edge;
    for (std::string tok; tokens >> tok;) edge.push_back(index.intern(tok));
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.size() < 2)
      throw Error("line " + std::to_string(line_no) + ": hyperedge needs at least 2 distinct labels");
    edges.push_back(std::move(edge));
    weights.push_back(w);
  }
  if (index.size() == 0) throw Error("edge list contains no hyperedges");
  LabeledHypergraph out;
  out.graph = Hypergraph::build(index.size(), edges, weights);
  out.labels = index.take();
  return out;
}

LabeledHypergraph read_edge_list_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  try {
    return read_edge_list(in);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const LabeledHypergraph& h) {
  const auto& g = h.graph;
  if (h.labels.size() != g.num_nodes()) throw Error("label dictionary does not match node count");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    bool first = true;
    for (NodeId v : g.edge(e)) {
      if (!first) out << ' ';
      out << h.labels[v];
      first = false;
    }
    out << " # w=" << format_double(g.weight(e)) << '\n';
  }
}

SimplexImport read_simplex_stream(std::istream& nverts, std::istream& simplices,
                                  std::istream* times) {
  SimplexImport out;
  LabelIndex index;
  std::map<std::vector<NodeId>, std::size_t> position;
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;

  std::size_t label_lines = 0;
  std::string token;
  for (long long size; nverts >> size;) {
    if (size < 1) throw Error("nverts entry " + std::to_string(out.simplices + 1) + " is not positive");
    ++out.simplices;
    std::vector<NodeId> simplex;
    for (long long k = 0; k < size; ++k) {
      if (!(simplices >> token))
        throw Error("simplices stream ended after " + std::to_string(label_lines) +
                    " labels; nverts requires more");
      ++label_lines;
      simplex.push_back(index.intern(token));
    }
    std::sort(simplex.begin(), simplex.end());
    simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
    if (simplex.size() < 2) {
      ++out.dropped_singletons;
      continue;
    }
    auto [it, inserted] = position.try_emplace(simplex, edges.size());
    if (inserted) {
      edges.push_back(std::move(simplex));
      weights.push_back(1.0);
    } else {
      weights[it->second] += 1.0;
    }
  }
  if (!nverts.eof()) throw Error("nverts stream contains a non-integer entry");
  if (simplices >> token)
    throw Error("simplices stream has more labels than the " + std::to_string(label_lines) +
                " required by nverts");
  if (times != nullptr) {
    std::size_t count = 0;
    for (std::string t; *times >> t;) ++count;
    if (count != out.simplices)
      throw Error("times stream has " + std::to_string(count) + " entries, expected " +
                  std::to_string(out.simplices));
  }
  if (index.size() == 0) throw Error("simplex stream is empty");

  // Dense ids follow sorted label order (numeric when every label is an
  // integer) and edges are sorted, so the result ignores stream order.
  std::vector<std::string> labels = index.take();
  bool numeric = std::all_of(labels.begin(), labels.end(), [](const std::string& l) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(l.data(), l.data() + l.size(), v);
    return ec == std::errc() && ptr == l.data() + l.size();
  });
  std::vector<NodeId> order(labels.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (numeric) return std::stoll(labels[a]) < std::stoll(labels[b]);
    return labels[a] < labels[b];
  });
  std::vector<NodeId> relabel(labels.size());
  std::vector<std::string> sorted_labels(labels.size());
  for (NodeId k = 0; k < order.size(); ++k) {
    relabel[order[k]] = k;
    sorted_labels[k] = labels[order[k]];
  }
  std::vector<std::pair<std::vector<NodeId>, double>> canon;
  canon.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (NodeId& v : edges[k]) v = relabel[v];
    std::sort(edges[k].begin(), edges[k].end());
    canon.emplace_back(std::move(edges[k]), weights[k]);
  }
  std::sort(canon.begin(), canon.end());
  edges.clear();
  weights.clear();
  for (auto& [e, w] : canon) {
    edges.push_back(std::move(e));
    weights.push_back(w);
  }

  out.hypergraph.graph = Hypergraph::build(sorted_labels.size(), edges, weights);
  out.hypergraph.labels = std::move(sorted_labels);
  return out;
}

SimplexImport read_simplex_stream_files(const std::string& nverts_path,
                                        const std::string& simplices_path,
                                        const std::string& times_path) {
  std::istringstream nv(read_text_file(nverts_path));
  std::istringstream sx(read_text_file(simplices_path));
  if (times_path.empty()) return read_simplex_stream(nv, sx);
  std::istringstream tm(read_text_file(times_path));
  return read_simplex_stream(nv, sx, &tm);
}

CoreSetImport read_core_set(std::istream& in, const std::vector<std::string>& labels) {
  std::unordered_map<std::string, NodeId> ids;
  for (NodeId i = 0; i < labels.size(); ++i) ids.emplace(labels[i], i);
  CoreSetImport out;
  std::vector<bool> seen(labels.size(), false);
  for (std::string tok; in >> tok;) {
    if (tok[0] == '%') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    auto it = ids.find(tok);
    if (it == ids.end()) {
      out.unmatched.push_back(tok);
    } else if (!seen[it->second]) {
      seen[it->second] = true;
      out.nodes.push_back(it->second);
    }
  }
  return out;
}

CoreSetImport read_core_set_file(const std::string& path, const std::vector<std::string>& labels) {
  std::istringstream in(read_text_file(path));
  return read_core_set(in, labels);
}

}  // namespace hypercp
