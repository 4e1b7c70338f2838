#include "polytrunc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace polytrunc {

// ---------------------------------------------------------------------------
// Canonical text

Polytope3 parse_canonical_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows;  // (line, numbers)
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::uint32_t> numbers;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc{} || ptr == line.data() + i) {
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line_no) + ": expected a nonnegative integer");
      }
      i = static_cast<std::size_t>(ptr - line.data());
      if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line_no) + ": unexpected character");
      }
      numbers.push_back(value);
    }
    if (!numbers.empty()) rows.emplace_back(line_no, std::move(numbers));
  }

  if (rows.empty()) throw Error(ErrorKind::SyntaxError, "line 1: missing vertex count");
  if (rows[0].second.size() != 1) {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(rows[0].first) + ": expected a single vertex count");
  }
  const std::size_t n = rows[0].second[0];
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(n) + " vertices");
  }
  if (rows.size() != n + 1) {
    std::size_t where = rows.size() > n + 1 ? rows[n + 1].first : line_no;
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(where) + ": expected " +
                                            std::to_string(n) + " vertex lines, found " +
                                            std::to_string(rows.size() - 1));
  }
  RotationSpec spec;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& [ln, numbers] = rows[v + 1];
    if (numbers.size() != 3) {
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(ln) + ": expected 3 neighbors, found " +
                                              std::to_string(numbers.size()));
    }
    spec.push_back(numbers);
  }
  return build_from_rotation(spec);
}

std::string write_canonical_text(const Polytope3& p) {
  std::ostringstream out;
  out << p.vertex_count() << '\n';
  for (std::uint32_t v = 0; v < p.vertex_count(); ++v) {
    auto nb = p.neighbors(VertexId{v});
    auto first = std::min_element(nb.begin(), nb.end());
    std::rotate(nb.begin(), first, nb.end());
    out << nb[0].value << ' ' << nb[1].value << ' ' << nb[2].value << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// planar_code

std::vector<PlanarCodeRecord> parse_planar_code(std::span<const std::uint8_t> bytes) {
  const std::size_t header = kPlanarCodeHeader.size();
  if (bytes.size() < header ||
      !std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin())) {
    throw Error(ErrorKind::BadHeader, "missing >>planar_code<< header");
  }
  std::vector<PlanarCodeRecord> records;
  std::size_t pos = header;
  while (pos < bytes.size()) {
    const std::size_t index = records.size();
    const std::size_t n = bytes[pos++];
    if (n == 0) {
      throw Error(ErrorKind::SyntaxError,
                  "record " + std::to_string(index) + ": two-byte planar_code is not supported");
    }
    RotationSpec spec(n);
    std::optional<std::string> range_error;
    for (std::size_t v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) {
          throw Error(ErrorKind::TruncatedRecord,
                      "record " + std::to_string(index) + " ends inside vertex " + std::to_string(v));
        }
        std::uint8_t b = bytes[pos++];
        if (b == 0) break;
        if (b > n && !range_error) {
          range_error = "vertex " + std::to_string(v + 1) + " lists neighbor " + std::to_string(b);
        }
        spec[v].push_back(static_cast<std::uint32_t>(b) - 1);
      }
    }
    PlanarCodeRecord record{index, std::nullopt, std::nullopt, {}};
    if (range_error) {
      record.error = ErrorKind::VertexOutOfRange;
      record.message = *range_error;
    } else {
      try {
        record.polytope = build_from_rotation(spec);
      } catch (const Error& e) {
        record.error = e.kind();
        record.message = e.what();
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<Polytope3> valid_polytopes(const std::vector<PlanarCodeRecord>& records) {
  std::vector<Polytope3> out;
  for (const auto& r : records) {
    if (r.polytope) out.push_back(*r.polytope);
  }
  return out;
}

std::vector<std::uint8_t> write_planar_code(std::span<const RotationSpec> specs) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& spec : specs) {
    if (spec.empty() || spec.size() > kPlanarCodeMaxVertices) {
      throw Error(ErrorKind::TooManyVertices,
                  "planar_code records hold 1 to 255 vertices, got " + std::to_string(spec.size()));
    }
    out.push_back(static_cast<std::uint8_t>(spec.size()));
    for (const auto& nb : spec) {
      for (auto w : nb) out.push_back(static_cast<std::uint8_t>(w + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::vector<std::uint8_t> write_planar_code(std::span<const Polytope3> polytopes) {
  std::vector<RotationSpec> specs;
  for (const auto& p : polytopes) specs.push_back(p.rotation());
  return write_planar_code(std::span<const RotationSpec>(specs));
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

using Faces = std::vector<std::vector<std::uint32_t>>;

Polytope3 make_prism(std::uint32_t k) {
  Faces faces;
  std::vector<std::uint32_t> top, bottom;
  for (std::uint32_t i = 0; i < k; ++i) {
    top.push_back(i);
    bottom.push_back(2 * k - 1 - i);
    std::uint32_t j = (i + 1) % k;
    faces.push_back({j, i, k + i, k + j});
  }
  faces.insert(faces.begin(), bottom);
  faces.insert(faces.begin(), top);
  return Polytope3::from_faces(2 * k, faces);
}

Polytope3 make_tetrahedron() {
  return Polytope3::from_faces(4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
}

// Layers: top pentagon t_i = i, upper ring u_i = 5+i, lower ring l_i = 10+i,
// bottom pentagon b_i = 15+i. Ring edges zigzag u_i - l_i - u_{i+1}.
Polytope3 make_dodecahedron() {
  Faces faces{{0, 1, 2, 3, 4}, {15, 16, 17, 18, 19}};
  for (std::uint32_t i = 0; i < 5; ++i) {
    std::uint32_t j = (i + 1) % 5;
    faces.push_back({i, j, 5 + j, 10 + i, 5 + i});
    faces.push_back({10 + i, 5 + j, 10 + j, 15 + j, 15 + i});
  }
  return Polytope3::from_faces(20, faces);
}

std::optional<std::uint32_t> prism_arity(std::string_view name) {
  constexpr std::string_view prefix = "k_prism(";
  if (!name.starts_with(prefix) || !name.ends_with(")")) return std::nullopt;
  std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  std::uint32_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    return std::nullopt;
  }
  return k;
}

PVector prism_pvector(std::uint32_t k) {
  PVector pv;
  pv.add(4, k);
  pv.add(static_cast<int>(k), 2);
  return pv;
}

}  // namespace

CatalogEntry catalog_entry(std::string_view name) {
  std::string key(name);
  if (name == "tetrahedron") return {key, make_tetrahedron(), PVector{{3, 4}}};
  if (name == "triangular_prism") return {key, make_prism(3), PVector{{3, 2}, {4, 3}}};
  if (name == "cube") return {key, make_prism(4), PVector{{4, 6}}};
  if (name == "pentagonal_prism") return {key, make_prism(5), PVector{{4, 5}, {5, 2}}};
  if (name == "dodecahedron") return {key, make_dodecahedron(), PVector{{5, 12}}};
  if (auto k = prism_arity(name); k && *k >= 3 && *k <= 20) {
    return {key, make_prism(*k), prism_pvector(*k)};
  }
  throw Error(ErrorKind::UnknownName, "no catalog entry named '" + key + "'");
}

Polytope3 catalog(std::string_view name) { return catalog_entry(name).polytope; }

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (auto name : {"tetrahedron", "triangular_prism", "cube", "pentagonal_prism", "dodecahedron"}) {
    out.push_back(catalog_entry(name));
  }
  for (int k = 3; k <= 20; ++k) out.push_back(catalog_entry("k_prism(" + std::to_string(k) + ")"));
  return out;
}

std::optional<std::string> find_in_catalog(const Polytope3& p) {
  const std::string form = canonical_form(p);
  const PVector pv = p_vector(p);
  for (const auto& entry : catalog_entries()) {
    if (entry.known_pvector == pv && canonical_form(entry.polytope) == form) return entry.name;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Files

std::vector<PlanarCodeRecord> load_polytope_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (bytes.size() >= kPlanarCodeHeader.size() &&
      std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin())) {
    return parse_planar_code(bytes);
  }
  std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  PlanarCodeRecord record{0, std::nullopt, std::nullopt, {}};
  try {
    record.polytope = parse_canonical_text(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SyntaxError) throw;
    record.error = e.kind();
    record.message = e.what();
  }
  return {std::move(record)};
}

}  // namespace polytrunc
