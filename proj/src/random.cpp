#include "bclab/random.hpp"

#include <stdexcept>
#include <vector>

namespace bclab {

Graph gnp_sample(const GnpParams& params) {
  if (params.n < 0) throw std::invalid_argument("gnp_sample: negative n");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("gnp_sample: p outside [0,1]");
  SplitMix64 rng(params.seed);
  std::vector<Edge> edges;
  for (int u = 0; u < params.n; ++u)
    for (int v = u + 1; v < params.n; ++v)
      if (rng.next_unit() < params.p) edges.push_back({u, v});
  return Graph::from_edges(params.n, edges);
}

}  // namespace bclab
