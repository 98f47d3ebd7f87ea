#include "tagsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tagsim/errors.hpp"
#include "tagsim/io_util.hpp"

namespace tagsim {

SimilarityGraph SimilarityGraph::from_edges(std::vector<Edge> edges) {
  SimilarityGraph g;
  for (const auto& e : edges) {
    if (e.a >= e.b) throw std::invalid_argument("edge not canonical: a must be < b");
    if (e.sim < 0.0 || e.sim > 1.0) throw std::invalid_argument("edge weight outside [0,1]");
    g.adjacency_[e.a].emplace_back(e.b, e.sim);
    g.adjacency_[e.b].emplace_back(e.a, e.sim);
  }
  for (auto& [node, nbrs] : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  g.edge_count_ = edges.size();
  return g;
}

std::span<const std::pair<int, double>> SimilarityGraph::neighbors(int id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) return {};
  return it->second;
}

std::vector<int> SimilarityGraph::nodes() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& [node, nbrs] : adjacency_) out.push_back(node);
  return out;
}

std::vector<Edge> SimilarityGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [node, nbrs] : adjacency_) {
    for (const auto& [nbr, sim] : nbrs) {
      if (node < nbr) out.push_back({node, nbr, sim});
    }
  }
  return out;
}

double cosine_similarity(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("cosine_similarity: length mismatch");
  double dot = 0.0, xx = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    xx += x[i] * x[i];
    yy += y[i] * y[i];
  }
  if (xx == 0.0 || yy == 0.0) return 0.0;
  return dot / (std::sqrt(xx) * std::sqrt(yy));
}

SimilarityGraph build_similarity_graph(const std::vector<UserHistory>& histories) {
  std::unordered_map<int, double> user_counts;  // song -> |users|
  std::unordered_map<std::uint64_t, double> pair_counts;
  for (const auto& h : histories) {
    const auto& ids = h.song_ids;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      user_counts[ids[i]] += 1.0;
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ids[i])) << 32) |
                            static_cast<std::uint32_t>(ids[j]);
        pair_counts[key] += 1.0;
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pair_counts.size());
  for (const auto& [key, count] : pair_counts) {
    int a = static_cast<int>(key >> 32);
    int b = static_cast<int>(key & 0xFFFFFFFFu);
    // Same arithmetic as cosine_similarity on binary incidence vectors.
    double sim = count / (std::sqrt(user_counts[a]) * std::sqrt(user_counts[b]));
    edges.push_back({a, b, sim});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return SimilarityGraph::from_edges(std::move(edges));
}

SimilarityGraph filter_graph(const SimilarityGraph& g, double min_similarity) {
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (e.sim >= min_similarity) kept.push_back(e);
  }
  return SimilarityGraph::from_edges(std::move(kept));
}

SimilarityCsvResult parse_similarity_csv(std::istream& in) {
  SimilarityCsvResult result;
  std::map<std::pair<int, int>, double> weights;  // last value wins
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 3) {
      ++result.rejected;
      continue;
    }
    int a, b;
    double sim;
    try {
      a = static_cast<int>(parse_int(fields[0]));
      b = static_cast<int>(parse_int(fields[1]));
      sim = parse_double(fields[2]);
    } catch (const DataError&) {
      ++result.rejected;
      continue;
    }
    if (sim < 0.0 || sim > 1.0) {
      ++result.rejected;
      continue;
    }
    if (a == b) continue;  // self-pairs ignored
    weights[{std::min(a, b), std::max(a, b)}] = sim;
  }
  std::vector<Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [key, sim] : weights) edges.push_back({key.first, key.second, sim});
  result.graph = SimilarityGraph::from_edges(std::move(edges));
  return result;
}

void write_similarity_csv(std::ostream& out, const SimilarityGraph& g) {
  for (const auto& e : g.edges()) {
    out << e.a << ',' << e.b << ',' << fmt17(e.sim) << '\n';
  }
}

}  // namespace tagsim
