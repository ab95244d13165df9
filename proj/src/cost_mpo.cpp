#include "qaoamps/cost_mpo.hpp"

#include "qaoamps/common.hpp"

#include <algorithm>
#include <cmath>

namespace qaoamps {

CostLayerMpo::CostLayerMpo(const Graph& g, const std::vector<int>& vertex_to_site,
                           long bond_cap) {
  const int n = g.n;
  if (static_cast<int>(vertex_to_site.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "ordering length does not match graph");
  }

  // edges in site coordinates, attached to their later endpoint
  std::vector<std::vector<std::pair<int, double>>> edges_at(n);  // (earlier site, w)
  std::vector<int> last_reach(n, -1);  // furthest site an edge from this site reaches
  for (const auto& e : g.edges) {
    int si = vertex_to_site[e.i];
    int sj = vertex_to_site[e.j];
    if (si > sj) std::swap(si, sj);
    edges_at[sj].push_back({si, e.w});
    last_reach[si] = std::max(last_reach[si], sj);
  }

  sites_.resize(n);
  std::vector<int> active;  // frontier after the previous site, ascending
  for (int k = 0; k < n; ++k) {
    // position of each active site in the frontier list
    std::vector<int> pos(n, -1);
    for (size_t t = 0; t < active.size(); ++t) pos[active[t]] = static_cast<int>(t);

    std::vector<int> next_active;
    for (int s : active) {
      if (last_reach[s] > k) next_active.push_back(s);
    }
    if (last_reach[k] > k) next_active.push_back(k);

    const long n_from = 1l << active.size();
    const long n_to = 1l << next_active.size();
    if (n_from > bond_cap || n_to > bond_cap) {
      throw Error(ErrorKind::ResourceLimit,
                  "cost-layer MPO bond exceeds cap " + std::to_string(bond_cap));
    }

    Site& site = sites_[k];
    site.n_from = n_from;
    site.n_to = n_to;
    site.to.resize(2 * n_from);
    site.signed_weight.resize(2 * n_from);
    max_bond_ = std::max({max_bond_, n_from, n_to});

    for (long f = 0; f < n_from; ++f) {
      for (int s = 0; s < 2; ++s) {
        double wsum = 0.0;
        for (const auto& [src, w] : edges_at[k]) {
          int bit = (f >> pos[src]) & 1;
          wsum += (bit == s) ? w : -w;
        }
        long f_next = 0;
        for (size_t t = 0; t < next_active.size(); ++t) {
          int q = next_active[t];
          int bit = (q == k) ? s : ((f >> pos[q]) & 1);
          if (bit) f_next |= 1l << t;
        }
        site.to[f * 2 + s] = f_next;
        site.signed_weight[f * 2 + s] = wsum;
      }
    }
    active = std::move(next_active);
  }
}

void CostLayerMpo::fill_phases(int k, double gamma,
                               std::vector<std::complex<double>>& out) const {
  const Site& site = sites_[k];
  out.resize(site.to.size());
  for (size_t t = 0; t < site.to.size(); ++t) {
    out[t] = std::polar(1.0, -0.5 * gamma * site.signed_weight[t]);
  }
}

}  // namespace qaoamps
