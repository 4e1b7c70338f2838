#ifndef POLYTRUNC_SWEEP_HPP
#define POLYTRUNC_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polytrunc/polytope.hpp"
#include "polytrunc/truncation.hpp"

namespace polytrunc {

/// Everything checked for one subgraph of a sweep.
struct SweepRecord {
  std::string gamma;  // EdgeSubgraph::encoding()
  std::size_t gamma_size = 0;
  std::vector<unsigned> valency;
  bool admissible = false;
  // truncate threw exactly when a valency-2 vertex exists
  bool simplicity_ok = false;

  // The fields below are meaningful only for admissible subgraphs.
  bool criterion = false;          // with the simplex exception
  bool criterion_literal = false;  // clauses only
  bool oracle = false;             // is_flag_oracle on the truncation
  bool belt_flag = false;          // is_flag on the truncation
  bool missing_all_pairs = false;  // all missing faces have cardinality 2
  bool face_sizes_ok = false;      // predicted == actual, f2 grew by |gamma|
  bool vertex_count_ok = false;    // f0 grew by #val1 + 3 #val3
  bool star_ok = false;
  bool no_triangles_if_flag = false;
  std::size_t f0 = 0, f1 = 0, f2 = 0;

  bool agrees() const { return !admissible || criterion == oracle; }
  bool triangulated() const {
    return !admissible || (belt_flag == oracle && missing_all_pairs == oracle);
  }
  bool all_ok() const {
    return simplicity_ok &&
           (!admissible || (agrees() && triangulated() && face_sizes_ok && vertex_count_ok &&
                            star_ok && no_triangles_if_flag));
  }
};

struct SweepSummary {
  std::uint64_t subsets_examined = 0;  // exhaustive: 2^f1, empty set included
  std::uint64_t draws = 0;             // sampled: random subsets drawn
  std::uint64_t admissible = 0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t literal_disagreements = 0;
  std::uint64_t triangulation_failures = 0;
  std::uint64_t simplicity_failures = 0;
  std::uint64_t face_size_failures = 0;
  std::uint64_t star_failures = 0;
  std::uint64_t flag_outputs = 0;

  bool clean() const {
    return disagreements == 0 && triangulation_failures == 0 && simplicity_failures == 0 &&
           face_size_failures == 0 && star_failures == 0;
  }
};

struct SweepReport {
  SweepSummary summary;
  std::vector<SweepRecord> records;  // sorted by gamma encoding
};

/// Called for every successful truncation, in unspecified order.
using TruncationVisitor = std::function<void(const EdgeSubgraph&, const TruncationResult&)>;

/// Largest edge count accepted by sweep_exhaustive.
inline constexpr std::size_t kMaxExhaustiveEdges = 24;

/// Checks one subgraph. Never throws for valency-2 subgraphs; those are
/// recorded as inadmissible after confirming that truncate rejects them.
SweepRecord check_subgraph(const EdgeSubgraph& gamma, const TruncationVisitor& visit = {});

/// Every nonempty edge subset. Records cover the nonempty subsets; the empty
/// set is counted in subsets_examined but has nothing to check.
SweepReport sweep_exhaustive(const Polytope3& p, const TruncationVisitor& visit = {},
                             bool keep_inadmissible = false);

/// `samples` subgraphs drawn uniformly from the nonempty admissible ones
/// (rejection sampling over all edge subsets, std::mt19937_64 seeded with
/// `seed`). Duplicates are kept.
SweepReport sweep_sampled(const Polytope3& p, std::uint64_t samples, std::uint64_t seed,
                          const TruncationVisitor& visit = {});

}  // namespace polytrunc

#endif  // POLYTRUNC_SWEEP_HPP
