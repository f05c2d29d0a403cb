#include "octa/obj_io.hpp"

#include <ostream>

namespace octa {

void write_obj(std::ostream& out, const CrossPolytopalComplex& c) {
  for (const Point& v : c.vertices)
    out << "v " << shortest_double(v.x.get_d()) << " " << shortest_double(v.y.get_d())
        << " " << shortest_double(v.z.get_d()) << "\n";
  for (const OctaCell& cell : c.cells)
    for (const auto& t : cell_triangles(cell))
      out << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
}

}  // namespace octa
