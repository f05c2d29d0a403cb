#include "octa/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "octa/hull.hpp"

namespace octa {

namespace {

std::array<int, 3> sorted3(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

struct SkeletonGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
};

SkeletonGraph skeleton_of(const CrossPolytopalComplex& c) {
  SkeletonGraph g;
  g.n = static_cast<int>(c.vertices.size());
  std::set<std::array<int, 3>> tris;
  for (const auto& cell : c.cells) {
    for (const auto& e : cell_edges(cell))
      g.edges.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    for (const auto& t : cell_triangles(cell)) tris.insert(sorted3(t));
  }
  g.triangles.assign(tris.begin(), tris.end());
  return g;
}

// Triangle-propagation 3-coloring decision. Forced moves are applied to a
// fixpoint; when nothing is forced the lowest uncolored vertex branches.
bool color_3(const SkeletonGraph& g, std::vector<int>& col) {
  for (;;) {
    bool changed = false;
    for (const auto& t : g.triangles) {
      int unknown = -1, sum = 0, known = 0;
      for (int v : t) {
        if (col[v] == 0)
          unknown = v;
        else {
          sum += col[v];
          ++known;
        }
      }
      if (known == 3) {
        if (col[t[0]] == col[t[1]] || col[t[1]] == col[t[2]] || col[t[0]] == col[t[2]])
          return false;
      } else if (known == 2) {
        int forced = 6 - sum;
        if (forced < 1 || forced > 3) return false;
        col[unknown] = forced;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& [a, b] : g.edges)
    if (col[a] != 0 && col[a] == col[b]) return false;

  int pick = -1;
  for (int v = 0; v < g.n && pick < 0; ++v)
    if (col[v] == 0) pick = v;
  if (pick < 0) return true;
  for (int c = 1; c <= 3; ++c) {
    std::vector<int> trial = col;
    trial[pick] = c;
    if (color_3(g, trial)) {
      col = trial;
      return true;
    }
  }
  return false;
}

}  // namespace

CheckResult check_balanced_skeleton(const CrossPolytopalComplex& c) {
  SkeletonGraph g = skeleton_of(c);
  std::vector<int> col(g.n, 0);
  bool ok = color_3(g, col);
  return {"balanced_skeleton", ok,
          ok ? "proper 3-coloring found" : "skeleton graph is not 3-chromatic"};
}

CheckResult check_even_links(const CrossPolytopalComplex& c) {
  // Vertices of the refined complex: pool points then one center per cell.
  const int n = static_cast<int>(c.vertices.size());
  struct Tet {
    std::array<int, 4> v;  // v[0] = center
  };
  std::vector<Tet> tets;
  for (size_t ci = 0; ci < c.cells.size(); ++ci) {
    int center = n + static_cast<int>(ci);
    for (const auto& t : cell_triangles(c.cells[ci]))
      tets.push_back({{center, t[0], t[1], t[2]}});
  }

  // Boundary edges of the refinement = edges of boundary triangles of c.
  std::set<std::pair<int, int>> boundary_edges;
  for (const auto& t : boundary_of(c))
    for (int e = 0; e < 3; ++e) {
      int a = t[e], b = t[(e + 1) % 3];
      boundary_edges.insert({std::min(a, b), std::max(a, b)});
    }

  // Gather the link edges of every edge of the refinement.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> link;
  for (const auto& tet : tets) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        int a = tet.v[i], b = tet.v[j];
        int x = -1, y = -1;
        for (int k = 0; k < 4; ++k)
          if (k != i && k != j) (x < 0 ? x : y) = tet.v[k];
        link[{std::min(a, b), std::max(a, b)}].push_back({x, y});
      }
  }

  // How many cells contain each original edge (for the expected 2k length).
  std::map<std::pair<int, int>, int> edge_cells;
  for (const auto& cell : c.cells)
    for (const auto& e : cell_edges(cell))
      edge_cells[{std::min(e[0], e[1]), std::max(e[0], e[1])}]++;

  int checked = 0;
  for (auto& [edge, opp] : link) {
    if (edge.second < n && boundary_edges.count(edge)) continue;  // boundary edge
    // Walk the link: it must be one closed cycle of even length.
    std::map<int, std::vector<int>> adj;
    for (auto& [x, y] : opp) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    for (auto& [v, nb] : adj) {
      (void)v;
      if (nb.size() != 2)
        return {"even_links", false,
                "link of an interior edge is not a closed cycle"};
    }
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    size_t len = 0;
    do {
      int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
      if (len > adj.size()) break;
    } while (cur != start);
    if (cur != start || len != adj.size())
      return {"even_links", false, "link of an interior edge is disconnected"};
    if (len % 2 != 0)
      return {"even_links", false, "odd link cycle of length " + std::to_string(len)};
    bool has_center = edge.second >= n;
    if (has_center && len != 4)
      return {"even_links", false, "center edge link is not a 4-cycle"};
    if (!has_center) {
      long k = edge_cells[{edge.first, edge.second}];
      if (static_cast<long>(len) != 2 * k)
        return {"even_links", false,
                "edge in " + std::to_string(k) + " cells has link of length " +
                    std::to_string(len)};
    }
    ++checked;
  }
  return {"even_links", true, std::to_string(checked) + " interior edge links even"};
}

CheckResult check_proper(const CrossPolytopalComplex& c, const SimplicialPolytope& p) {
  using TriPts = std::array<Point, 3>;
  auto key = [](TriPts t) {
    std::sort(t.begin(), t.end(), [](const Point& a, const Point& b) {
      return PointLess()(a, b);
    });
    return t;
  };
  struct TriLess {
    bool operator()(const TriPts& a, const TriPts& b) const {
      PointLess less;
      for (int i = 0; i < 3; ++i) {
        if (less(a[i], b[i])) return true;
        if (less(b[i], a[i])) return false;
      }
      return false;
    }
  };
  std::set<TriPts, TriLess> want, have;
  for (const auto& f : p.facets)
    want.insert(key({p.vertices[f[0]], p.vertices[f[1]], p.vertices[f[2]]}));
  for (const auto& t : boundary_of(c))
    have.insert(key({c.pt(t[0]), c.pt(t[1]), c.pt(t[2])}));
  if (want == have)
    return {"proper", true,
            "boundary matches the input facet complex (" +
                std::to_string(want.size()) + " triangles)"};
  return {"proper", false,
          "boundary has " + std::to_string(have.size()) + " triangles, input has " +
              std::to_string(want.size()) + ", or triangles differ"};
}

CheckResult check_counts_and_volume(const CrossPolytopalComplex& c,
                                    const SimplicialPolytope& p) {
  long f0 = p.f0(), f2 = p.f2();
  long f3 = static_cast<long>(c.cells.size());
  if (f2 % 2 != 0) return {"counts_and_volume", false, "f2 of the input polytope is odd"};
  if (f2 != 2 * (f0 - 2))
    return {"counts_and_volume", false, "input f2 != 2(f0-2)"};
  if (f3 != 23 * (f0 - 2))
    return {"counts_and_volume", false,
            "f3 = " + std::to_string(f3) + ", expected " + std::to_string(23 * (f0 - 2))};
  Rat vp = polytope_volume(p);
  Rat vc = total_volume(c);
  if (vp != vc)
    return {"counts_and_volume", false,
            "volume mismatch: cells sum to " + rat_str(vc) + ", polytope is " + rat_str(vp)};
  return {"counts_and_volume", true,
          "f3 = " + std::to_string(f3) + ", volume " + rat_str(vp) + " conserved"};
}

VerificationReport verify_complex(const CrossPolytopalComplex& c,
                                  const SimplicialPolytope* against, ValidateLevel level) {
  VerificationReport rep;
  ValidationReport val = validate_complex(c, level);
  rep.checks.push_back({level == ValidateLevel::full ? "validate_full" : "validate_fast",
                        val.ok(), val.summary()});
  if (!val.ok()) return rep;  // the remaining checks assume a valid complex
  rep.checks.push_back(check_balanced_skeleton(c));
  rep.checks.push_back(check_even_links(c));
  if (against) {
    rep.checks.push_back(check_proper(c, *against));
    rep.checks.push_back(check_counts_and_volume(c, *against));
  }
  return rep;
}

}  // namespace octa
