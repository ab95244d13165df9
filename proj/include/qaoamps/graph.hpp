#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qaoamps {

enum class GraphFamily { Regular3Unit, CompleteUniform, Explicit };

const char* family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

struct Edge {
  int i = 0;
  int j = 0;
  double w = 1.0;
};

// Weighted undirected graph defining the Max-Cut cost operator
// C = sum_{(i,j) in E} w_ij Z_i Z_j.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;  // i < j, unique pairs, w > 0
  GraphFamily family = GraphFamily::Explicit;
  std::string id;
  uint64_t seed = 0;

  size_t n_edges() const { return edges.size(); }
  std::vector<int> degrees() const;
  bool is_connected() const;
  // Throws Error(InvalidArgument) if any structural invariant is violated.
  void validate() const;
};

using BitString = std::vector<uint8_t>;

BitString bitstring_from_index(uint64_t index, int n);
uint64_t bitstring_to_index(const BitString& s);
BitString complement(const BitString& s);

struct BruteForceResult {
  double c_min = 0.0;
  std::vector<BitString> minimizers;
  int n_s = 0;
};

// Simple d-regular graph with unit weights via the configuration (pairing)
// model; full restart on self-loop/multi-edge collisions, 1e4 retry budget.
Graph gen_random_regular(int n, int d, uint64_t seed);

// Complete graph with i.i.d. uniform (0,1] weights.
Graph gen_random_complete(int n, uint64_t seed);

double bitstring_cost(const Graph& g, const BitString& s);

inline constexpr int kDefaultEnumerationCap = 24;
BruteForceResult brute_force_solve(const Graph& g, int cap = kDefaultEnumerationCap);

// One representative per isomorphism class of connected 3-regular simple
// graphs on n vertices; n even, n <= 10.
std::vector<Graph> enumerate_cubic_graphs(int n);

// Lexicographically minimal upper-triangle adjacency bitstring over all
// vertex permutations (exhaustive with branch-and-bound pruning; n <= 10).
std::vector<uint8_t> canonical_adjacency(const Graph& g);

}  // namespace qaoamps
