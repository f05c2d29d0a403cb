// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact equality throughout) and prints one pass/fail line per criterion.
//
// Usage: acceptance [path-to-octa-binary [scratch-dir]]
// The CLI-level criteria (9b, 10) are skipped with a failure if the binary
// path is not supplied.

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "octa/error.hpp"
#include "octa/off_io.hpp"
#include "octa/shapes.hpp"
#include "octa/subdivide.hpp"
#include "octa/verify.hpp"
#include "octa/xpc_io.hpp"
#include "oracles.hpp"

using namespace octa;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - "
            << detail << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

struct Fixture {
  std::string name;
  SimplicialPolytope polytope;
};

int run_cli(const std::string& bin, const std::string& args) {
  std::string cmd = bin + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  std::string octa_bin = argc > 1 ? argv[1] : "";
  fs::path scratch = argc > 2 ? argv[2] : fs::temp_directory_path() / "octa-acceptance";
  fs::create_directories(scratch);

  std::vector<Fixture> fixtures;
  fixtures.push_back({"octahedron", make_regular_octahedron()});
  for (int k = 2; k <= 6; ++k)
    fixtures.push_back({"bipyramid2k k=" + std::to_string(k), make_bipyramid_2k(k)});

  // Criteria 1, 2, 7 (positive half), 8 share one full-verification sweep.
  auto t0 = std::chrono::steady_clock::now();
  bool counts_ok = true, proper_ok = true, skel_ok = true, volume_ok = true;
  std::string counts_detail, proper_detail, skel_detail, volume_detail;
  std::vector<CrossPolytopalComplex> outputs;
  for (const auto& fx : fixtures) {
    CrossPolytopalComplex c = octahedralize(fx.polytope);
    long expect = 23L * (fx.polytope.f0() - 2);
    if (static_cast<long>(c.cells.size()) != expect) {
      counts_ok = false;
      counts_detail += fx.name + " has " + std::to_string(c.cells.size()) + " cells; ";
    }
    VerificationReport rep = verify_complex(c, &fx.polytope, ValidateLevel::full);
    for (const auto& ch : rep.checks) {
      if (ch.name == "validate_full" && !ch.pass) {
        counts_ok = false;
        counts_detail += fx.name + " failed validation; ";
      }
      if (ch.name == "proper" && !ch.pass) {
        proper_ok = false;
        proper_detail += fx.name + ": " + ch.detail + "; ";
      }
      if ((ch.name == "balanced_skeleton" || ch.name == "even_links") && !ch.pass) {
        skel_ok = false;
        skel_detail += fx.name + ": " + ch.name + " failed; ";
      }
      if (ch.name == "counts_and_volume" && !ch.pass) {
        volume_ok = false;
        volume_detail += fx.name + ": " + ch.detail + "; ";
      }
    }
    outputs.push_back(std::move(c));
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  if (elapsed >= 300) {
    counts_ok = false;
    counts_detail += "runtime " + std::to_string(elapsed) + "s exceeds 5 minutes; ";
  }
  report(1, counts_ok,
         counts_ok ? "cell counts 92/92/138/184/230/276 with full verification in " +
                         std::to_string(elapsed) + "s"
                   : counts_detail);
  report(2, proper_ok,
         proper_ok ? "every output boundary equals its input facet complex"
                   : proper_detail);

  // Criterion 3: per-bipyramid decomposition on two fixtures.
  {
    bool ok = true;
    std::string detail;
    int bip_count = 0;
    for (const std::string& which : {std::string("octahedron"), std::string("hexagonal")}) {
      SimplicialPolytope p =
          which == "octahedron" ? make_regular_octahedron() : make_bipyramid_2k(3);
      auto bips = match_bipyramids(cone_triangulate(p, three_color(p)));
      for (const auto& b : bips) {
        CrossPolytopalComplex c = subdivide_frame(b.frame);
        std::map<int, int> census;
        for (const auto& cell : c.cells) census[cell.type]++;
        bool cell_ok = c.cells.size() == 23 && census[1] == 8 && census[2] == 8 &&
                       census[3] == 6 && census[4] == 1 && boundary_is_octahedral(c) &&
                       validate_complex(c, ValidateLevel::full).ok() &&
                       total_volume(c) == b.volume();
        if (!cell_ok) {
          ok = false;
          detail += which + " bipyramid " + std::to_string(b.id) + " failed; ";
        }
        ++bip_count;
      }
    }
    report(3, ok,
           ok ? std::to_string(bip_count) +
                    " bipyramids each give 23 certified cells, census 8/8/6/1, "
                    "octahedral boundary"
              : detail);
  }

  // Criterion 4: the unit tetrahedron.
  {
    auto t = make_unit_tetrahedron();
    CrossPolytopalComplex c = subdivide_tetrahedron(
        {t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]});
    bool ok = c.cells.size() == 23 && boundary_is_octahedral(c) &&
              validate_complex(c, ValidateLevel::full).ok() &&
              total_volume(c) == rat(1, 6);
    report(4, ok,
           ok ? "23 certified cells, boundary is the cross-polytope boundary, volume 1/6"
              : "tetrahedron subdivision failed");
  }

  // Criterion 5: the Schlegel reference.
  {
    CrossPolytopalComplex c = schlegel_24cell_reference();
    bool ok = c.cells.size() == 23 && validate_complex(c, ValidateLevel::full).ok() &&
              total_volume(c) == rat(4, 3);
    report(5, ok, ok ? "23 cells, full validation, volume 4/3" : "reference failed");
  }

  // Criterion 6: oracle equivalence on >= 1000 random configurations.
  {
    oracle::RatGen gen(20260810);
    const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {2, 3}, {4, 5}}};
    int disagreements = 0, positives = 0, total = 0;
    for (int it = 0; it < 700; ++it) {
      std::array<Point, 6> pts;
      for (auto& p : pts) p = gen.point();
      bool mine = is_cross_polytope(pts, pairs);
      if (mine != oracle::brute_force_is_octahedron(pts, pairs)) ++disagreements;
      if (mine) ++positives;
      ++total;
    }
    std::array<Point, 6> base = {Point(1, 0, 0), Point(-1, 0, 0), Point(0, 1, 0),
                                 Point(0, -1, 0), Point(0, 0, 1), Point(0, 0, -1)};
    for (int it = 0; it < 300; ++it) {
      Point c1 = gen.point(), c2 = gen.point(), c3 = gen.point(), t = gen.point();
      if (orient(Point(0, 0, 0), c1, c2, c3) == 0) continue;
      std::array<Point, 6> pts;
      for (int i = 0; i < 6; ++i)
        pts[i] = Point(base[i].x * c1.x + base[i].y * c2.x + base[i].z * c3.x,
                       base[i].x * c1.y + base[i].y * c2.y + base[i].z * c3.y,
                       base[i].x * c1.z + base[i].y * c2.z + base[i].z * c3.z) +
                 t;
      bool mine = is_cross_polytope(pts, pairs);
      if (mine != oracle::brute_force_is_octahedron(pts, pairs)) ++disagreements;
      if (mine) ++positives;
      ++total;
    }
    bool ok = disagreements == 0 && total >= 1000;
    report(6, ok,
           std::to_string(total) + " configurations, " + std::to_string(positives) +
               " octahedra, " + std::to_string(disagreements) + " disagreements");
  }

  // Criterion 7: necessity checks pass on pipeline outputs (gathered above);
  // a deliberately corrupted complex fails certification.
  {
    bool ok = skel_ok;
    std::string detail = skel_detail;
    CrossPolytopalComplex corrupted = schlegel_24cell_reference();
    std::swap(corrupted.cells[0].v[1], corrupted.cells[0].v[2]);
    if (validate_complex(corrupted, ValidateLevel::fast).ok()) {
      ok = false;
      detail += "corrupted pairing was not caught; ";
    }
    report(7, ok,
           ok ? "skeleton 3-colorable and links even on all outputs; swapped pairing "
                "fails certification"
              : detail);
  }

  report(8, volume_ok,
         volume_ok ? "exact volume conservation on every fixture" : volume_detail);

  // Criterion 9: determinism, in-process and through the CLI.
  {
    bool ok = true;
    std::string detail;
    auto p = make_bipyramid_2k(3);
    std::ostringstream a, b;
    write_xpc(a, octahedralize(p));
    write_xpc(b, octahedralize(p));
    if (a.str() != b.str()) {
      ok = false;
      detail += "library runs differ; ";
    }
    if (!octa_bin.empty()) {
      fs::path off = scratch / "hexa.off";
      {
        std::ofstream out(off);
        write_off(out, p);
      }
      fs::path x1 = scratch / "d1.xpc", x2 = scratch / "d2.xpc";
      int r1 = run_cli(octa_bin, "subdivide " + off.string() + " --out " + x1.string());
      int r2 = run_cli(octa_bin, "subdivide " + off.string() + " --out " + x2.string());
      auto slurp = [](const fs::path& f) {
        std::ifstream in(f);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
      };
      if (r1 != 0 || r2 != 0 || slurp(x1).empty() || slurp(x1) != slurp(x2)) {
        ok = false;
        detail += "CLI runs differ or failed; ";
      }
    } else {
      ok = false;
      detail += "octa binary path not supplied; ";
    }
    report(9, ok, ok ? "byte-identical XPC output across runs" : detail);
  }

  // Criterion 10: negative CLI paths exit NotBalanced (= 2).
  {
    bool ok = true;
    std::string detail;
    if (octa_bin.empty()) {
      ok = false;
      detail = "octa binary path not supplied";
    } else {
      fs::path tet = scratch / "tet.off", ico = scratch / "ico.off";
      {
        std::ofstream out(tet);
        write_off(out, make_unit_tetrahedron());
      }
      {
        std::ofstream out(ico);
        write_off(out, make_rational_icosahedron());
      }
      int rt = run_cli(octa_bin, "subdivide " + tet.string());
      int ri = run_cli(octa_bin, "subdivide " + ico.string());
      if (rt != 2) {
        ok = false;
        detail += "tetrahedron exited " + std::to_string(rt) + " (want 2); ";
      }
      if (ri != 2) {
        ok = false;
        detail += "icosahedron exited " + std::to_string(ri) + " (want 2); ";
      }
      int rm = run_cli(octa_bin, "ref nosuch");
      if (rm != 1) {
        ok = false;
        detail += "unknown ref exited " + std::to_string(rm) + " (want 1); ";
      }
    }
    report(10, ok, ok ? "tetrahedron and icosahedron inputs exit NotBalanced" : detail);
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
