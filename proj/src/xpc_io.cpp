#include "octa/xpc_io.hpp"

#include <fstream>
#include <sstream>

#include "octa/error.hpp"

namespace octa {

void write_xpc(std::ostream& out, const CrossPolytopalComplex& c) {
  out << "xpc 1\n";
  out << "vertices " << c.vertices.size() << "\n";
  for (const Point& v : c.vertices)
    out << rat_pq(v.x) << " " << rat_pq(v.y) << " " << rat_pq(v.z) << "\n";
  out << "cells " << c.cells.size() << "\n";
  for (const OctaCell& cell : c.cells) {
    for (int i = 0; i < 6; ++i) out << cell.v[i] << (i < 5 ? " " : "");
    if (cell.type != 0) out << " " << cell.type;
    out << "\n";
  }
  auto boundary = boundary_of(c);
  out << "boundary " << boundary.size() << "\n";
  for (const auto& t : boundary) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

void write_xpc_file(const std::string& path, const CrossPolytopalComplex& c) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot open " + path + " for writing");
  write_xpc(out, c);
}

CrossPolytopalComplex read_xpc(std::istream& in) {
  int line = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line;
      if (!out.empty()) return true;
    }
    return false;
  };
  std::string l;
  if (!next_line(l) || l != "xpc 1") throw ParseError(line, "expected \"xpc 1\" header");

  CrossPolytopalComplex c;
  if (!next_line(l)) throw ParseError(line, "missing vertex block");
  long nv = -1;
  {
    std::istringstream ls(l);
    std::string kw;
    if (!(ls >> kw >> nv) || kw != "vertices" || nv < 0)
      throw ParseError(line, "expected \"vertices N\"");
  }
  for (long i = 0; i < nv; ++i) {
    if (!next_line(l)) throw ParseError(line, "unexpected end of vertex block");
    std::istringstream ls(l);
    std::string tx, ty, tz, extra;
    if (!(ls >> tx >> ty >> tz) || (ls >> extra))
      throw ParseError(line, "expected three rational coordinates");
    auto x = parse_rat(tx), y = parse_rat(ty), z = parse_rat(tz);
    if (!x || !y || !z) throw ParseError(line, "bad rational token");
    c.vertices.push_back({*x, *y, *z});
  }
  if (!next_line(l)) throw ParseError(line, "missing cell block");
  long nc = -1;
  {
    std::istringstream ls(l);
    std::string kw;
    if (!(ls >> kw >> nc) || kw != "cells" || nc < 0)
      throw ParseError(line, "expected \"cells N\"");
  }
  for (long i = 0; i < nc; ++i) {
    if (!next_line(l)) throw ParseError(line, "unexpected end of cell block");
    std::istringstream ls(l);
    OctaCell cell;
    for (int k = 0; k < 6; ++k) {
      long v;
      if (!(ls >> v) || v < 0 || v >= nv) throw ParseError(line, "bad cell vertex index");
      cell.v[k] = static_cast<int>(v);
    }
    long type = 0;
    if (ls >> type) {
      if (type < 1 || type > 4) throw ParseError(line, "bad cell type tag");
      std::string extra;
      if (ls >> extra) throw ParseError(line, "unexpected token after cell");
    }
    cell.type = static_cast<int>(type);
    c.cells.push_back(cell);
  }
  // Optional derived boundary block; contents are checked for shape only.
  if (next_line(l)) {
    std::istringstream ls(l);
    std::string kw;
    long nb = -1;
    if (!(ls >> kw >> nb) || kw != "boundary" || nb < 0)
      throw ParseError(line, "expected \"boundary N\"");
    for (long i = 0; i < nb; ++i) {
      if (!next_line(l)) throw ParseError(line, "unexpected end of boundary block");
      std::istringstream bs(l);
      long a, b, d;
      if (!(bs >> a >> b >> d)) throw ParseError(line, "bad boundary triangle");
    }
    if (next_line(l)) throw ParseError(line, "trailing content");
  }
  return c;
}

CrossPolytopalComplex read_xpc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_xpc(in);
}

}  // namespace octa
