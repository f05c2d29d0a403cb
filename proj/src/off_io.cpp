#include "octa/off_io.hpp"

#include <fstream>
#include <sstream>

#include "octa/error.hpp"

namespace octa {

namespace {

// Line reader that skips blanks and '#' comments and tracks line numbers.
struct LineSource {
  std::istream& in;
  int line = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      std::istringstream probe(raw);
      std::string tok;
      if (probe >> tok) {
        out = raw;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

SimplicialPolytope read_off(std::istream& in) {
  LineSource src{in};
  std::string line;
  if (!src.next(line)) throw ParseError(src.line, "empty file");
  {
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok != "OFF") throw ParseError(src.line, "expected OFF header");
    std::string extra;
    if (ls >> extra) throw ParseError(src.line, "unexpected token after OFF");
  }
  if (!src.next(line)) throw ParseError(src.line, "missing counts line");
  long nv = -1, nf = -1, ne = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> nv >> nf)) throw ParseError(src.line, "expected vertex and facet counts");
    ls >> ne;  // edge count is customary and ignored
    if (nv < 0 || nf < 0) throw ParseError(src.line, "negative counts");
    if (nv > 100000 || nf > 200000) throw ParseError(src.line, "counts out of range");
  }
  SimplicialPolytope p;
  for (long i = 0; i < nv; ++i) {
    if (!src.next(line)) throw ParseError(src.line, "unexpected end of file in vertex block");
    std::istringstream ls(line);
    std::string tx, ty, tz, extra;
    if (!(ls >> tx >> ty >> tz)) throw ParseError(src.line, "expected three coordinates");
    if (ls >> extra) throw ParseError(src.line, "unexpected token after coordinates");
    auto x = parse_rat(tx), y = parse_rat(ty), z = parse_rat(tz);
    if (!x || !y || !z) throw ParseError(src.line, "bad coordinate token");
    p.vertices.push_back({*x, *y, *z});
  }
  for (long i = 0; i < nf; ++i) {
    if (!src.next(line)) throw ParseError(src.line, "unexpected end of file in facet block");
    std::istringstream ls(line);
    long cnt, a, b, c;
    if (!(ls >> cnt)) throw ParseError(src.line, "expected facet vertex count");
    if (cnt != 3) throw ParseError(src.line, "only triangular facets are supported");
    if (!(ls >> a >> b >> c)) throw ParseError(src.line, "expected three vertex indices");
    std::string extra;
    if (ls >> extra) throw ParseError(src.line, "unexpected token after facet");
    if (a < 0 || a >= nv || b < 0 || b >= nv || c < 0 || c >= nv)
      throw ParseError(src.line, "facet index out of range");
    p.facets.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
  }
  if (src.next(line)) throw ParseError(src.line, "trailing content after facet block");
  validate_polytope(p);
  return p;
}

SimplicialPolytope read_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_off(in);
}

void write_off(std::ostream& out, const SimplicialPolytope& p) {
  out << "OFF\n" << p.f0() << " " << p.f2() << " " << p.f1() << "\n";
  for (const Point& v : p.vertices)
    out << rat_pq(v.x) << " " << rat_pq(v.y) << " " << rat_pq(v.z) << "\n";
  for (const auto& f : p.facets) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

}  // namespace octa
