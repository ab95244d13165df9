#pragma once

#include "qaoamps/graph.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qaoamps {

inline constexpr long kDefaultMpoBondCap = 1 << 12;

// Matrix product operator for the diagonal cost layer exp(-i gamma C / 2),
// i.e. the product over edges of the bond-2 factors exp(-i gamma w Z_i Z_j / 2).
//
// The product is built in closed form as a deterministic automaton over
// "frontier" configurations: at the cut after site k the bond states are the
// spin assignments of the sites <= k that still have an edge reaching past
// the cut. Each edge's phase is accounted at its later endpoint, so the
// operator equals the per-edge product exactly; the bond dimension at a cut,
// 2^(#frontier sites), is the generic rank of that product (compressing at
// 1e-12 would not shrink it away from measure-zero angles).
//
// The automaton depends only on (graph, ordering); the gamma-dependent phases
// are filled per application, which keeps repeated evaluations cheap.
class CostLayerMpo {
 public:
  CostLayerMpo(const Graph& g, const std::vector<int>& vertex_to_site,
               long bond_cap = kDefaultMpoBondCap);

  struct Site {
    long n_from = 1;
    long n_to = 1;
    // transition t = from * 2 + s  ->  target bond state and signed weight sum;
    // the phase of the transition is exp(-i gamma w_signed / 2)
    std::vector<long> to;
    std::vector<double> signed_weight;
  };

  int n_sites() const { return static_cast<int>(sites_.size()); }
  const Site& site(int k) const { return sites_[k]; }
  long max_bond() const { return max_bond_; }

  // Phases for one site at a given gamma, indexed like Site::to.
  void fill_phases(int k, double gamma, std::vector<std::complex<double>>& out) const;

 private:
  std::vector<Site> sites_;
  long max_bond_ = 1;
};

}  // namespace qaoamps
