// Command-line front end: subdivide balanced polytopes into certified
// octahedral complexes, emit reference decompositions and fixtures, verify
// complexes, and export meshes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "octa/error.hpp"
#include "octa/obj_io.hpp"
#include "octa/off_io.hpp"
#include "octa/shapes.hpp"
#include "octa/subdivide.hpp"
#include "octa/verify.hpp"
#include "octa/xpc_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotBalanced = 2;
constexpr int kExitVerification = 3;
constexpr int kExitSearch = 4;

octa::SearchConfig config_from_env() {
  octa::SearchConfig cfg;
  if (const char* cap = std::getenv("OCTA_SEARCH_CAP")) {
    int v = std::atoi(cap);
    if (v > 0) cfg.halving_cap = v;
  }
  return cfg;
}

void emit_report(const octa::VerificationReport& rep, const std::string& report_path) {
  std::string text;
  for (const auto& c : rep.checks)
    text += c.name + "\t" + (c.pass ? "pass" : "fail") + "\t" + c.detail + "\n";
  std::cout << text;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << text;
  }
}

octa::ValidateLevel parse_level(const std::string& s) {
  return s == "full" ? octa::ValidateLevel::full : octa::ValidateLevel::fast;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-polytopal subdivision of balanced 3-polytopes"};
  app.require_subcommand(1);

  std::string input, out_path, report_path, against;
  std::string level = "fast";
  std::string name, family;
  int k = 0;

  auto* sub = app.add_subcommand("subdivide", "octahedralize a balanced polytope (OFF in)");
  sub->add_option("input", input, "input OFF file")->required();
  sub->add_option("--out", out_path, "output XPC file");
  sub->add_option("--verify", level, "verification level: fast|full")
      ->check(CLI::IsMember({"fast", "full"}));
  sub->add_option("--report", report_path, "write the TSV report here");

  auto* ref = app.add_subcommand("ref", "emit a reference 23-cell complex");
  ref->add_option("name", name, "schlegel24 | tetra23")->required();
  ref->add_option("--out", out_path, "output XPC file");

  auto* gen = app.add_subcommand("gen", "generate a balanced fixture polytope");
  gen->add_option("family", family, "bipyramid2k")->required();
  gen->add_option("--k", k, "half the number of equator vertices")->required();
  gen->add_option("--out", out_path, "output OFF file");

  auto* exp = app.add_subcommand("export", "export an XPC complex as OBJ");
  exp->add_option("input", input, "input XPC file")->required();
  exp->add_option("--out", out_path, "output OBJ file")->required();

  auto* ver = app.add_subcommand("verify", "verify an XPC complex");
  ver->add_option("input", input, "input XPC file")->required();
  ver->add_option("--against", against, "OFF polytope to check properness against");
  ver->add_option("--level", level, "validation level: fast|full")
      ->check(CLI::IsMember({"fast", "full"}));
  ver->add_option("--report", report_path, "write the TSV report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (sub->parsed()) {
      octa::SimplicialPolytope p = octa::read_off_file(input);
      octa::CrossPolytopalComplex c = octa::octahedralize(p, config_from_env());
      if (!out_path.empty()) octa::write_xpc_file(out_path, c);
      octa::VerificationReport rep = octa::verify_complex(c, &p, parse_level(level));
      emit_report(rep, report_path);
      return rep.overall() ? kExitOk : kExitVerification;
    }
    if (ref->parsed()) {
      octa::CrossPolytopalComplex c;
      if (name == "schlegel24") {
        c = octa::schlegel_24cell_reference(config_from_env());
      } else if (name == "tetra23") {
        auto t = octa::make_unit_tetrahedron();
        c = octa::subdivide_tetrahedron(
            {t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]},
            config_from_env());
      } else {
        std::cerr << "error: unknown reference \"" << name << "\"\n";
        return kExitParse;
      }
      if (!out_path.empty())
        octa::write_xpc_file(out_path, c);
      else
        octa::write_xpc(std::cout, c);
      return kExitOk;
    }
    if (gen->parsed()) {
      if (family != "bipyramid2k") {
        std::cerr << "error: unknown family \"" << family << "\"\n";
        return kExitParse;
      }
      if (k < 2) {
        std::cerr << "error: bipyramid2k needs --k >= 2\n";
        return kExitParse;
      }
      octa::SimplicialPolytope p = octa::make_bipyramid_2k(k);
      if (out_path.empty()) {
        octa::write_off(std::cout, p);
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot open " << out_path << "\n";
          return kExitParse;
        }
        octa::write_off(out, p);
      }
      return kExitOk;
    }
    if (exp->parsed()) {
      octa::CrossPolytopalComplex c = octa::read_xpc_file(input);
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return kExitParse;
      }
      octa::write_obj(out, c);
      return kExitOk;
    }
    if (ver->parsed()) {
      octa::CrossPolytopalComplex c = octa::read_xpc_file(input);
      std::optional<octa::SimplicialPolytope> p;
      if (!against.empty()) p = octa::read_off_file(against);
      octa::VerificationReport rep =
          octa::verify_complex(c, p ? &*p : nullptr, parse_level(level));
      emit_report(rep, report_path);
      return rep.overall() ? kExitOk : kExitVerification;
    }
  } catch (const octa::NotBalanced& e) {
    std::cerr << "NotBalanced: " << e.what() << "\n";
    return kExitNotBalanced;
  } catch (const octa::SearchExhausted& e) {
    std::cerr << "SearchExhausted: " << e.what() << "\n";
    return kExitSearch;
  } catch (const octa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const octa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
