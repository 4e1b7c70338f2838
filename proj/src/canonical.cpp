#include <algorithm>
#include <deque>

#include "polytrunc/polytope.hpp"

namespace polytrunc {

namespace {

// Breadth-first code of the map seen from `start`, walking each vertex's
// darts with rot (forward) or rot_inv (mirror). A vertex's walk starts at the
// dart through which it was discovered.
std::vector<std::uint16_t> bfs_code(const Polytope3& p, DartId start, bool mirror) {
  const std::size_t n = p.vertex_count();
  std::vector<std::uint16_t> label(n, 0);
  std::vector<std::uint16_t> code;
  code.reserve(3 * n);
  std::deque<DartId> queue{start};
  std::uint16_t next = 1;
  label[Polytope3::origin(start).value] = next++;
  while (!queue.empty()) {
    DartId entry = queue.front();
    queue.pop_front();
    DartId d = entry;
    for (int i = 0; i < 3; ++i) {
      VertexId w = p.target(d);
      if (label[w.value] == 0) {
        label[w.value] = next++;
        queue.push_back(p.twin(d));
      }
      code.push_back(label[w.value]);
      d = mirror ? Polytope3::rot_inv(d) : Polytope3::rot(d);
    }
  }
  return code;
}

void append_u16(std::string& out, std::size_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

}  // namespace

std::string canonical_form(const Polytope3& p) {
  std::vector<std::uint16_t> best;
  for (bool mirror : {false, true}) {
    for (std::uint32_t d = 0; d < p.dart_count(); ++d) {
      auto code = bfs_code(p, DartId{d}, mirror);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  std::string out;
  out.reserve(2 + 2 * best.size());
  append_u16(out, p.vertex_count());
  for (auto label : best) append_u16(out, label);
  return out;
}

bool is_isomorphic(const Polytope3& a, const Polytope3& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (p_vector(a) != p_vector(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace polytrunc
