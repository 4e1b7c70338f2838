#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polytrunc/eberhard.hpp"
#include "polytrunc/flag.hpp"
#include "polytrunc/io.hpp"
#include "polytrunc/sweep.hpp"
#include "polytrunc/truncation.hpp"

namespace py = pybind11;
using namespace polytrunc;

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::map<int, std::uint64_t> pvector_dict(const PVector& pv) { return pv.counts(); }

std::vector<std::uint32_t> ids(const auto& xs) {
  std::vector<std::uint32_t> out;
  for (auto x : xs) out.push_back(x.value);
  return out;
}

Pair edge_pair(const Polytope3& p, EdgeId e) {
  auto [u, v] = p.endpoints(e);
  return std::minmax(u.value, v.value);
}

EdgeSubgraph subgraph(const Polytope3& p, const std::optional<std::vector<Pair>>& edges) {
  if (!edges) return EdgeSubgraph::all_edges(p);
  return EdgeSubgraph::from_vertex_pairs(p, *edges);
}

py::dict truncation_dict(const Polytope3& host, const TruncationResult& r) {
  py::dict facets, edges;
  for (auto [f, nf] : r.face_of_facet) facets[py::int_(f.value)] = nf.value;
  for (auto [e, nf] : r.face_of_edge) edges[py::cast(edge_pair(host, e))] = nf.value;
  py::dict out;
  out["polytope"] = r.polytope;
  out["face_of_facet"] = facets;
  out["face_of_edge"] = edges;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simple 3-polytopes as cubic rotation systems: truncation, flagness, p-vectors";

  // Raised with .kind set to the error kind name, e.g. "NotCubic".
  static py::handle error = py::exception<Error>(m, "PolytruncError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Polytope3>(m, "Polytope3")
      .def(py::init(&Polytope3::from_rotation), py::arg("rotation"))
      .def_static(
          "from_faces",
          [](std::size_t n, const std::vector<std::vector<std::uint32_t>>& faces) {
            return Polytope3::from_faces(n, faces, Polytope3::Orientation::normalize);
          },
          py::arg("vertex_count"), py::arg("faces"))
      .def_property_readonly("vertex_count", &Polytope3::vertex_count)
      .def_property_readonly("edge_count", &Polytope3::edge_count)
      .def_property_readonly("face_count", &Polytope3::face_count)
      .def("rotation", &Polytope3::rotation)
      .def("faces",
           [](const Polytope3& p) {
             std::vector<std::vector<std::uint32_t>> out;
             for (std::uint32_t f = 0; f < p.face_count(); ++f) out.push_back(ids(p.face_vertices(FaceId{f})));
             return out;
           })
      .def("edges",
           [](const Polytope3& p) {
             std::vector<Pair> out;
             for (EdgeId e : p.edges()) out.push_back(edge_pair(p, e));
             return out;
           })
      .def("neighbors", [](const Polytope3& p, std::uint32_t v) { return ids(p.neighbors(VertexId{v})); })
      .def("p_vector", [](const Polytope3& p) { return pvector_dict(p_vector(p)); })
      .def("canonical_form", [](const Polytope3& p) { return py::bytes(canonical_form(p)); })
      .def("is_isomorphic", [](const Polytope3& a, const Polytope3& b) { return is_isomorphic(a, b); })
      .def("__repr__", [](const Polytope3& p) {
        return "<Polytope3 f0=" + std::to_string(p.vertex_count()) + " f1=" + std::to_string(p.edge_count()) +
               " f2=" + std::to_string(p.face_count()) + " " + p_vector(p).to_string() + ">";
      });

  m.def("catalog", [](std::string_view name) { return catalog(name); }, py::arg("name"));
  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (auto& e : catalog_entries()) out.push_back(e.name);
    return out;
  });
  m.def("find_in_catalog", &find_in_catalog);

  m.def("parse_canonical_text", [](std::string_view text) { return parse_canonical_text(text); });
  m.def("write_canonical_text", &write_canonical_text);
  m.def("parse_planar_code", [](py::bytes data) {
    std::string raw = data;
    std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
    py::list out;
    for (auto& r : parse_planar_code(bytes)) {
      if (r.polytope) {
        out.append(*r.polytope);
      } else {
        out.append(py::make_tuple(to_string(*r.error), r.message));
      }
    }
    return out;
  }, "Valid records become Polytope3; invalid ones (kind, message) tuples.");
  m.def("write_planar_code", [](const std::vector<Polytope3>& ps) {
    auto bytes = write_planar_code(std::span<const Polytope3>(ps));
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  });

  m.def("valency_profile", [](const Polytope3& p, const std::vector<Pair>& edges) {
    return valency_profile(EdgeSubgraph::from_vertex_pairs(p, edges));
  });
  m.def("admits_simple_truncation", [](const Polytope3& p, const std::vector<Pair>& edges) {
    return admits_simple_truncation(EdgeSubgraph::from_vertex_pairs(p, edges));
  });
  m.def(
      "truncate",
      [](const Polytope3& p, const std::optional<std::vector<Pair>>& edges) {
        return truncation_dict(p, truncate(subgraph(p, edges)));
      },
      py::arg("polytope"), py::arg("edges") = py::none(),
      "Cut off the given edges (all edges when omitted).");
  m.def(
      "flag_criterion",
      [](const Polytope3& p, const std::vector<Pair>& edges, bool simplex_exception) {
        return flag_criterion(EdgeSubgraph::from_vertex_pairs(p, edges),
                              simplex_exception ? CriterionMode::with_simplex_exception
                                                : CriterionMode::clauses_only);
      },
      py::arg("polytope"), py::arg("edges"), py::arg("simplex_exception") = true);

  m.def("is_flag", &is_flag);
  m.def("is_flag_oracle", &is_flag_oracle);
  m.def("three_belts", [](const Polytope3& p) {
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& b : enumerate_3belts(p)) out.push_back(ids(b.faces));
    return out;
  });
  m.def("missing_faces", [](const Polytope3& p) {
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& mf : missing_faces(p)) out.push_back(ids(mf.faces));
    return out;
  });

  m.def("flagify", [](const Polytope3& p) { return flagify(p).polytope; });
  m.def("transformed_pvector", [](const Polytope3& p) { return pvector_dict(transformed_pvector(p)); });
  m.def("check_star_identity",
        [](const std::map<int, std::uint64_t>& pv) { return check_star_identity(PVector(pv)); });
  m.def("check_flag_sequence",
        [](std::string_view seq) { return check_flag_sequence(SparsePSequence::parse(seq)); });
  m.def(
      "scan",
      [](const std::vector<Polytope3>& stream, std::string_view target, bool flagify_matches) {
        py::list out;
        for (auto& match : scan_for_sequence(stream, SparsePSequence::parse(target), flagify_matches)) {
          out.append(py::make_tuple(match.index, pvector_dict(match.pvector),
                                    match.flagified ? py::cast(*match.flagified) : py::none()));
        }
        return out;
      },
      py::arg("polytopes"), py::arg("target"), py::arg("flagify") = false,
      "(index, p-vector, flagified or None) for each match; p6 is free.");

  m.def(
      "verify",
      [](const Polytope3& p, std::optional<std::uint64_t> samples, std::uint64_t seed) {
        auto rep = samples ? sweep_sampled(p, *samples, seed) : sweep_exhaustive(p);
        const auto& s = rep.summary;
        py::dict out;
        out["subsets_examined"] = s.subsets_examined;
        out["draws"] = s.draws;
        out["admissible"] = s.admissible;
        out["agreements"] = s.agreements;
        out["disagreements"] = s.disagreements;
        out["literal_disagreements"] = s.literal_disagreements;
        out["flag_outputs"] = s.flag_outputs;
        out["clean"] = s.clean();
        return out;
      },
      py::arg("polytope"), py::arg("samples") = py::none(), py::arg("seed") = 0,
      "Sweep edge subgraphs comparing the criterion with the oracle; summary counts.");
}
