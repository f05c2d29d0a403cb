#include "octa/coloring.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "octa/error.hpp"

namespace octa {

Coloring three_color(const SimplicialPolytope& p) {
  return three_color(p, {1, 2, 3});
}

Coloring three_color(const SimplicialPolytope& p, const std::array<int, 3>& seed) {
  Coloring kappa;
  kappa.color.assign(p.vertices.size(), 0);

  std::map<std::pair<int, int>, std::vector<int>> edge_facets;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      edge_facets[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
    }
  }

  // Seed: lowest-index facet, sorted vertex order.
  std::array<int, 3> sv = p.facets[0];
  std::sort(sv.begin(), sv.end());
  for (int i = 0; i < 3; ++i) kappa.color[sv[i]] = seed[i];

  auto force = [&](const std::array<int, 3>& f) {
    int unknown = -1, sum = 0, known = 0;
    for (int v : f) {
      if (kappa.color[v] == 0)
        unknown = v;
      else {
        sum += kappa.color[v];
        ++known;
      }
    }
    if (known == 2 && unknown >= 0) {
      int c = 6 - sum;
      if (c < 1 || c > 3) throw NotBalanced("propagation: adjacent colors collide");
      kappa.color[unknown] = c;
    }
  };

  std::vector<char> visited(p.facets.size(), 0);
  std::queue<int> queue;
  queue.push(0);
  visited[0] = 1;
  while (!queue.empty()) {
    int fi = queue.front();
    queue.pop();
    force(p.facets[fi]);
    const auto& f = p.facets[fi];
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      for (int g : edge_facets[{std::min(a, b), std::max(a, b)}])
        if (!visited[g]) {
          visited[g] = 1;
          queue.push(g);
        }
    }
  }

  // Propagation only ever sets colors; a contradiction shows up as a facet
  // whose three colors are not {1,2,3}.
  for (const auto& f : p.facets) {
    int mask = 0;
    for (int v : f) {
      if (kappa.color[v] == 0) throw NotBalanced("propagation left a vertex uncolored");
      mask |= 1 << kappa.color[v];
    }
    if (mask != 0b1110) throw NotBalanced("no proper 3-coloring exists");
  }
  return kappa;
}

}  // namespace octa
