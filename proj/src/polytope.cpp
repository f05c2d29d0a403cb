#include "octa/polytope.hpp"

#include <map>
#include <set>
#include <string>

#include "octa/error.hpp"

namespace octa {

int SimplicialPolytope::f1() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : facets)
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  return static_cast<int>(edges.size());
}

void validate_polytope(const SimplicialPolytope& p) {
  const int n = p.f0();
  if (n < 4) throw InvalidPolytope("fewer than 4 vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.vertices[i] == p.vertices[j])
        throw InvalidPolytope("duplicate vertex points " + std::to_string(i) + "," +
                              std::to_string(j));

  std::vector<int> degree(n, 0);
  std::map<std::pair<int, int>, std::vector<int>> edge_facets;
  std::map<std::pair<int, int>, int> directed;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw InvalidPolytope("facet " + std::to_string(fi) + " has bad indices");
      edge_facets[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
      if (++directed[{a, b}] > 1)
        throw InvalidPolytope("directed edge repeated; orientation inconsistent");
    }
    for (int v : f) degree[v]++;
  }
  for (int v = 0; v < n; ++v)
    if (degree[v] < 3) throw InvalidPolytope("vertex " + std::to_string(v) + " in < 3 facets");
  for (auto& [e, fs] : edge_facets) {
    if (fs.size() != 2)
      throw InvalidPolytope("edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") in " + std::to_string(fs.size()) +
                            " facets");
  }

  // Connectivity over facet adjacency.
  std::vector<std::vector<int>> adj(p.facets.size());
  for (auto& [e, fs] : edge_facets) {
    (void)e;
    adj[fs[0]].push_back(fs[1]);
    adj[fs[1]].push_back(fs[0]);
  }
  std::vector<char> seen(p.facets.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f])
      if (!seen[g]) {
        seen[g] = 1;
        stack.push_back(g);
      }
  }
  for (char s : seen)
    if (!s) throw InvalidPolytope("facet graph disconnected");

  // Convexity with outward orientation: every non-facet vertex strictly inside.
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    for (int v = 0; v < n; ++v) {
      if (v == f[0] || v == f[1] || v == f[2]) continue;
      int s = orient(p.vertices[f[0]], p.vertices[f[1]], p.vertices[f[2]], p.vertices[v]);
      if (s >= 0)
        throw InvalidPolytope("facet " + std::to_string(fi) +
                              " not strictly supporting (vertex " + std::to_string(v) +
                              (s == 0 ? " on plane)" : " outside)"));
    }
  }

  int f0 = n, f1 = p.f1(), f2 = p.f2();
  if (f0 - f1 + f2 != 2) throw InvalidPolytope("Euler relation violated");
  if (f2 != 2 * (f0 - 2)) throw InvalidPolytope("f2 != 2(f0-2)");
}

Rat polytope_volume(const SimplicialPolytope& p) {
  Point ref = barycenter(p.vertices);
  Rat six(6);
  Rat total(0);
  for (const auto& f : p.facets)
    total += dot(cross(p.vertices[f[0]] - ref, p.vertices[f[1]] - ref),
                 p.vertices[f[2]] - ref) /
             six;
  return total;
}

}  // namespace octa
