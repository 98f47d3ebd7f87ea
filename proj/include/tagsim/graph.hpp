#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tagsim/records.hpp"

namespace tagsim {

struct Edge {
  int a = 0;
  int b = 0;  // a < b
  double sim = 0.0;
  bool operator==(const Edge&) const = default;
};

// Undirected song-song similarity graph. Symmetric by construction, no
// self-loops, weights in [0,1]. Adjacency lists are sorted by neighbor id.
class SimilarityGraph {
public:
  SimilarityGraph() = default;

  // Edges must be canonical (a < b) and unique; weights in [0,1].
  static SimilarityGraph from_edges(std::vector<Edge> edges);

  bool empty() const { return adjacency_.empty(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t node_count() const { return adjacency_.size(); }

  std::span<const std::pair<int, double>> neighbors(int id) const;
  std::size_t degree(int id) const { return neighbors(id).size(); }

  // Node ids in ascending order.
  std::vector<int> nodes() const;

  // Unique edges in (a, b) ascending order.
  std::vector<Edge> edges() const;

private:
  std::map<int, std::vector<std::pair<int, double>>> adjacency_;
  std::size_t edge_count_ = 0;
};

// sum(x*y) / (sqrt(sum x^2) * sqrt(sum y^2)); 0 when either norm is zero.
double cosine_similarity(std::span<const double> x, std::span<const double> y);

// Ground-truth similarity: cosine over binary user-incidence vectors.
// Pairs that never co-occur get no edge.
SimilarityGraph build_similarity_graph(const std::vector<UserHistory>& histories);

// Keeps edges with sim >= min_similarity.
SimilarityGraph filter_graph(const SimilarityGraph& g, double min_similarity);

struct SimilarityCsvResult {
  SimilarityGraph graph;
  std::size_t rejected = 0;  // malformed rows or sim outside [0,1]
};

// Rows `id1,id2,sim`, no header. Duplicate pairs keep the last value,
// self-pairs are ignored, out-of-range similarities are rejected.
SimilarityCsvResult parse_similarity_csv(std::istream& in);

void write_similarity_csv(std::ostream& out, const SimilarityGraph& g);

}  // namespace tagsim
