#ifndef POLYTRUNC_IO_HPP
#define POLYTRUNC_IO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polytrunc/polytope.hpp"

namespace polytrunc {

// Canonical text format:
//
//   # comment
//   4
//   1 2 3
//   0 3 2
//   ...
//
// The first non-blank line holds the vertex count n; then n lines, line i
// listing the three 0-based neighbors of vertex i counterclockwise. '#'
// starts a comment that runs to the end of the line.

/// Throws SyntaxError (message carries the line number) or any construction
/// error.
Polytope3 parse_canonical_text(std::string_view text);

/// Vertices in id order, each neighbor list rotated to start at its smallest
/// entry. LF line endings.
std::string write_canonical_text(const Polytope3& p);

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";
inline constexpr std::size_t kPlanarCodeMaxVertices = 255;

struct PlanarCodeRecord {
  std::size_t index;  // 0-based position in the file
  std::optional<Polytope3> polytope;
  std::optional<ErrorKind> error;
  std::string message;
};

/// One entry per record. Records failing validation carry the error and are
/// not fatal. Throws BadHeader / TruncatedRecord for malformed framing.
std::vector<PlanarCodeRecord> parse_planar_code(std::span<const std::uint8_t> bytes);

/// Only the valid polytopes of parse_planar_code.
std::vector<Polytope3> valid_polytopes(const std::vector<PlanarCodeRecord>& records);

/// Header followed by one record per polytope; neighbor lists in rotation
/// order, 1-based. Throws TooManyVertices above 255 vertices.
std::vector<std::uint8_t> write_planar_code(std::span<const Polytope3> polytopes);

/// Writes raw records from rotation lists of any degree (test and tooling
/// helper; no validation).
std::vector<std::uint8_t> write_planar_code(std::span<const RotationSpec> specs);

struct CatalogEntry {
  std::string name;
  Polytope3 polytope;
  PVector known_pvector;
};

/// Names: tetrahedron, triangular_prism, cube, pentagonal_prism,
/// dodecahedron, k_prism(k) for 3 <= k <= 20. Throws UnknownName.
Polytope3 catalog(std::string_view name);
CatalogEntry catalog_entry(std::string_view name);

/// Every catalog entry, named ones first, then k_prism(3..20).
std::vector<CatalogEntry> catalog_entries();

/// Name of a catalog entry isomorphic to p, if any.
std::optional<std::string> find_in_catalog(const Polytope3& p);

/// Loads a file in either format (planar_code is recognized by its header).
/// Canonical text files yield exactly one record.
std::vector<PlanarCodeRecord> load_polytope_file(const std::string& path);

}  // namespace polytrunc

#endif  // POLYTRUNC_IO_HPP
