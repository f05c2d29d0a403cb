// End-to-end tests of the octa binary and its exit-code contract.
// Usage: test_cli <path-to-octa> <scratch-dir>

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "octa/off_io.hpp"
#include "octa/shapes.hpp"
#include "octa/subdivide.hpp"
#include "octa/xpc_io.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_octa;
fs::path g_scratch;

int run(const std::string& args) {
  std::string cmd = g_octa + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return status < 0 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_text(const std::string& name, const std::string& text) {
  fs::path p = g_scratch / name;
  std::ofstream out(p);
  out << text;
  return p;
}

}  // namespace

TEST_CASE("subdivide with full verification exits 0 and writes 92 cells") {
  fs::path off = g_scratch / "octa.off";
  {
    std::ofstream out(off);
    octa::write_off(out, octa::make_regular_octahedron());
  }
  fs::path xpc = g_scratch / "o.xpc";
  fs::path report = g_scratch / "o.tsv";
  CHECK(run("subdivide " + off.string() + " --out " + xpc.string() +
            " --verify full --report " + report.string()) == 0);
  auto c = octa::read_xpc_file(xpc.string());
  CHECK(c.cells.size() == 92);

  // Machine-readable report: name TAB pass/fail TAB detail, all passing.
  std::istringstream rep(slurp(report));
  std::string line;
  int lines = 0;
  while (std::getline(rep, line)) {
    ++lines;
    auto tab1 = line.find('\t');
    auto tab2 = line.find('\t', tab1 + 1);
    REQUIRE(tab1 != std::string::npos);
    REQUIRE(tab2 != std::string::npos);
    CHECK(line.substr(tab1 + 1, tab2 - tab1 - 1) == "pass");
  }
  CHECK(lines == 5);  // validate, skeleton, links, proper, counts

  // And the verify subcommand agrees end to end.
  CHECK(run("verify " + xpc.string() + " --against " + off.string() + " --level full") ==
        0);
}

TEST_CASE("exit codes: parse error 1, NotBalanced 2, verification failure 3") {
  fs::path bad = write_text("malformed.off", "OFF\n4 4 6\n0 0 zebra\n");
  CHECK(run("subdivide " + bad.string()) == 1);

  fs::path tet = g_scratch / "tet.off";
  {
    std::ofstream out(tet);
    octa::write_off(out, octa::make_unit_tetrahedron());
  }
  CHECK(run("subdivide " + tet.string()) == 2);

  // Corrupt one pairing of a valid complex: certification must fail.
  auto ref = octa::schlegel_24cell_reference();
  std::swap(ref.cells[0].v[1], ref.cells[0].v[2]);
  fs::path corrupted = g_scratch / "corrupted.xpc";
  octa::write_xpc_file(corrupted.string(), ref);
  CHECK(run("verify " + corrupted.string()) == 3);
}

TEST_CASE("ref subcommand: both references, unknown name rejected") {
  fs::path s = g_scratch / "s.xpc";
  CHECK(run("ref schlegel24 --out " + s.string()) == 0);
  CHECK(octa::read_xpc_file(s.string()).cells.size() == 23);

  fs::path t = g_scratch / "t.xpc";
  CHECK(run("ref tetra23 --out " + t.string()) == 0);
  CHECK(octa::read_xpc_file(t.string()).cells.size() == 23);

  CHECK(run("ref nosuch") == 1);
}

TEST_CASE("gen subcommand produces a parseable balanced fixture") {
  fs::path off = g_scratch / "b10.off";
  CHECK(run("gen bipyramid2k --k 5 --out " + off.string()) == 0);
  auto p = octa::read_off_file(off.string());
  CHECK(p.f0() == 12);
  CHECK(run("gen bipyramid2k --k 1") == 1);
  CHECK(run("gen nosuch --k 3") == 1);
}

TEST_CASE("verifying the non-proper tetrahedron reference against its input fails") {
  fs::path xpc = g_scratch / "t23.xpc";
  REQUIRE(run("ref tetra23 --out " + xpc.string()) == 0);
  fs::path tet = g_scratch / "tet4.off";
  {
    std::ofstream out(tet);
    octa::write_off(out, octa::make_unit_tetrahedron());
  }
  // Properness fails by design: the boundary subdivides the tetrahedron's.
  CHECK(run("verify " + xpc.string() + " --against " + tet.string() + " --level full") ==
        3);
  // Without the comparison the complex itself is fine.
  CHECK(run("verify " + xpc.string() + " --level full") == 0);
}

TEST_CASE("OCTA_SEARCH_CAP drives the searches into exit 4") {
  // Stretching one vertex far out makes the first slice candidates fail, so
  // a zero cap exhausts while the default cap succeeds.
  auto p = octa::make_regular_octahedron();
  p.vertices[0] = octa::Point(1000, 0, 0);
  fs::path off = g_scratch / "stretched.off";
  {
    std::ofstream out(off);
    octa::write_off(out, p);
  }
  CHECK(run("subdivide " + off.string()) == 0);
  std::string cmd = "OCTA_SEARCH_CAP=1 " + g_octa + " subdivide " + off.string() +
                    " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 4);
}

TEST_CASE("export writes an OBJ mesh") {
  fs::path xpc = g_scratch / "ref.xpc";
  REQUIRE(run("ref schlegel24 --out " + xpc.string()) == 0);
  fs::path obj = g_scratch / "ref.obj";
  CHECK(run("export " + xpc.string() + " --out " + obj.string()) == 0);
  std::istringstream in(slurp(obj));
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  CHECK(f == 8 * 23);
  CHECK(v > 0);
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: test_cli <octa-binary> <scratch-dir>\n");
    return 1;
  }
  g_octa = argv[1];
  g_scratch = argv[2];
  fs::create_directories(g_scratch);
  doctest::Context ctx;
  return ctx.run();
}
