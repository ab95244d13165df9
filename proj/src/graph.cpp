#include "qaoamps/graph.hpp"

#include "qaoamps/common.hpp"
#include "qaoamps/rng.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace qaoamps {

const char* family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::Regular3Unit: return "regular3";
    case GraphFamily::CompleteUniform: return "complete";
    case GraphFamily::Explicit: return "explicit";
  }
  return "explicit";
}

GraphFamily family_from_name(const std::string& name) {
  if (name == "regular3") return GraphFamily::Regular3Unit;
  if (name == "complete") return GraphFamily::CompleteUniform;
  if (name == "explicit") return GraphFamily::Explicit;
  throw Error(ErrorKind::InvalidArgument, "unknown graph family '" + name + "'");
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) {
    deg[e.i]++;
    deg[e.j]++;
  }
  return deg;
}

bool Graph::is_connected() const {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        count++;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

void Graph::validate() const {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "graph must have n > 0");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (!(0 <= e.i && e.i < e.j && e.j < n)) {
      throw Error(ErrorKind::InvalidArgument, "edge indices must satisfy 0 <= i < j < n");
    }
    if (!(e.w > 0)) {
      throw Error(ErrorKind::InvalidArgument, "edge weights must be positive");
    }
    if (!seen.insert({e.i, e.j}).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate edge");
    }
  }
  if (family == GraphFamily::Regular3Unit) {
    for (const auto& e : edges) {
      if (e.w != 1.0) throw Error(ErrorKind::InvalidArgument, "regular3 requires unit weights");
    }
    for (int d : degrees()) {
      if (d != 3) throw Error(ErrorKind::InvalidArgument, "regular3 requires degree 3 everywhere");
    }
  }
  if (family == GraphFamily::CompleteUniform) {
    if (edges.size() != static_cast<size_t>(n) * (n - 1) / 2) {
      throw Error(ErrorKind::InvalidArgument, "complete graph must have n(n-1)/2 edges");
    }
  }
}

BitString bitstring_from_index(uint64_t index, int n) {
  BitString s(n);
  for (int i = 0; i < n; ++i) s[i] = (index >> i) & 1u;
  return s;
}

uint64_t bitstring_to_index(const BitString& s) {
  uint64_t idx = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i]) idx |= (1ull << i);
  }
  return idx;
}

BitString complement(const BitString& s) {
  BitString c(s.size());
  for (size_t i = 0; i < s.size(); ++i) c[i] = s[i] ? 0 : 1;
  return c;
}

Graph gen_random_regular(int n, int d, uint64_t seed) {
  if (n <= 0 || d <= 0) throw Error(ErrorKind::InvalidArgument, "n and d must be positive");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "n*d must be even for a d-regular graph");
  }
  if (d >= n) throw Error(ErrorKind::InvalidArgument, "need d < n");

  constexpr int kRetryBudget = 10000;
  Rng rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * d);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> pairs;
    bool ok = true;
    for (size_t t = 0; t + 1 < stubs.size(); t += 2) {
      int a = stubs[t], b = stubs[t + 1];
      if (a == b) { ok = false; break; }
      auto p = std::minmax(a, b);
      if (!pairs.insert({p.first, p.second}).second) { ok = false; break; }
    }
    if (!ok) continue;

    Graph g;
    g.n = n;
    g.family = (d == 3) ? GraphFamily::Regular3Unit : GraphFamily::Explicit;
    g.seed = seed;
    g.id = "regular" + std::to_string(d) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
    for (const auto& [i, j] : pairs) g.edges.push_back({i, j, 1.0});
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    return g;
  }
  throw Error(ErrorKind::GenerationFailure,
              "pairing model exhausted retry budget (seed=" + std::to_string(seed) + ")");
}

Graph gen_random_complete(int n, uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "complete graph needs n >= 2");
  Rng rng(seed);
  Graph g;
  g.n = n;
  g.family = GraphFamily::CompleteUniform;
  g.seed = seed;
  g.id = "complete-n" + std::to_string(n) + "-s" + std::to_string(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.edges.push_back({i, j, 1.0 - rng.uniform()});  // uniform on (0, 1]
    }
  }
  return g;
}

double bitstring_cost(const Graph& g, const BitString& s) {
  if (static_cast<int>(s.size()) != g.n) {
    throw Error(ErrorKind::InvalidArgument, "bitstring length does not match graph");
  }
  double c = 0.0;
  for (const auto& e : g.edges) {
    c += (s[e.i] == s[e.j]) ? e.w : -e.w;
  }
  return c;
}

BruteForceResult brute_force_solve(const Graph& g, int cap) {
  if (g.n > cap) {
    throw Error(ErrorKind::ResourceLimit,
                "brute force capped at N=" + std::to_string(cap));
  }
  const uint64_t total = 1ull << g.n;
  BruteForceResult res;
  res.c_min = std::numeric_limits<double>::infinity();
  std::vector<uint64_t> min_indices;
  for (uint64_t idx = 0; idx < total; ++idx) {
    double c = 0.0;
    for (const auto& e : g.edges) {
      c += (((idx >> e.i) ^ (idx >> e.j)) & 1u) ? -e.w : e.w;
    }
    if (c < res.c_min) {
      res.c_min = c;
      min_indices.clear();
    }
    if (c == res.c_min) min_indices.push_back(idx);
  }
  for (uint64_t idx : min_indices) {
    res.minimizers.push_back(bitstring_from_index(idx, g.n));
  }
  res.n_s = static_cast<int>(res.minimizers.size());
  return res;
}

std::vector<uint8_t> canonical_adjacency(const Graph& g) {
  const int n = g.n;
  if (n > 10) {
    throw Error(ErrorKind::ResourceLimit, "canonical form capped at n=10");
  }
  std::vector<std::vector<uint8_t>> adj(n, std::vector<uint8_t>(n, 0));
  for (const auto& e : g.edges) adj[e.i][e.j] = adj[e.j][e.i] = 1;

  const size_t total_bits = static_cast<size_t>(n) * (n - 1) / 2;
  std::vector<uint8_t> best;
  std::vector<uint8_t> current(total_bits, 0);
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);

  // Place vertices one position at a time; the bits fixed by position k are
  // adj(perm[0..k-1], perm[k]), appended in that order. Prune whenever the
  // prefix already exceeds the best known string.
  std::function<void(int, size_t, bool)> dfs = [&](int k, size_t prefix, bool tight) {
    if (k == n) {
      best = current;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      bool next_tight = tight;
      for (int i = 0; i < k; ++i) {
        uint8_t bit = adj[perm[i]][v];
        current[prefix + i] = bit;
        if (next_tight && !best.empty()) {
          uint8_t bbit = best[prefix + i];
          if (bit > bbit) { ok = false; break; }
          if (bit < bbit) next_tight = false;
        }
      }
      if (!ok) continue;
      perm[k] = v;
      used[v] = 1;
      dfs(k + 1, prefix + k, next_tight && !best.empty());
      used[v] = 0;
    }
  };
  dfs(0, 0, true);
  return best;
}

namespace {

// Backtracking over candidate edges among vertices 1..n-1 (vertex 0's
// neighborhood is pinned to {1,2,3}, which every isomorphism class of
// connected cubic graphs can realize).
void enumerate_cubic_impl(int n, std::vector<Graph>& out) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<int> deg(n, 0);
  std::vector<char> take(pairs.size(), 0);
  deg[0] = 3;
  deg[1] = deg[2] = deg[3] = 1;

  std::set<std::vector<uint8_t>> seen;

  std::function<void(size_t)> dfs = [&](size_t idx) {
    if (idx == pairs.size()) {
      for (int v = 0; v < n; ++v) {
        if (deg[v] != 3) return;
      }
      Graph g;
      g.n = n;
      g.family = GraphFamily::Regular3Unit;
      g.edges.push_back({0, 1, 1.0});
      g.edges.push_back({0, 2, 1.0});
      g.edges.push_back({0, 3, 1.0});
      for (size_t t = 0; t < pairs.size(); ++t) {
        if (take[t]) g.edges.push_back({pairs[t].first, pairs[t].second, 1.0});
      }
      if (!g.is_connected()) return;
      auto key = canonical_adjacency(g);
      if (seen.insert(key).second) {
        g.id = "cubic-n" + std::to_string(n) + "-c" + std::to_string(seen.size() - 1);
        out.push_back(std::move(g));
      }
      return;
    }
    auto [i, j] = pairs[idx];
    // remaining pairs that can still raise deg[i]: (i, j..n-1)
    if (deg[i] + (n - j) < 3) return;  // vertex i can no longer reach degree 3
    if (idx > 0 && pairs[idx - 1].first != i && deg[pairs[idx - 1].first] != 3) return;

    if (deg[i] < 3 && deg[j] < 3) {
      take[idx] = 1;
      deg[i]++;
      deg[j]++;
      dfs(idx + 1);
      deg[i]--;
      deg[j]--;
      take[idx] = 0;
    }
    dfs(idx + 1);
  };
  dfs(0);
}

}  // namespace

std::vector<Graph> enumerate_cubic_graphs(int n) {
  if (n > 10) {
    throw Error(ErrorKind::ResourceLimit, "cubic enumeration capped at n=10");
  }
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "need even n >= 4 for cubic graphs");
  }
  std::vector<Graph> out;
  enumerate_cubic_impl(n, out);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_adjacency(a) < canonical_adjacency(b);
  });
  for (size_t k = 0; k < out.size(); ++k) {
    out[k].id = "cubic-n" + std::to_string(n) + "-c" + std::to_string(k);
  }
  return out;
}

}  // namespace qaoamps
