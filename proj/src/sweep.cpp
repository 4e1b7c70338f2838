#include "polytrunc/sweep.hpp"

#include <algorithm>
#include <random>

#include "polytrunc/flag.hpp"

namespace polytrunc {

SweepRecord check_subgraph(const EdgeSubgraph& gamma, const TruncationVisitor& visit) {
  const Polytope3& p = gamma.host();
  SweepRecord rec;
  rec.gamma = gamma.encoding();
  rec.gamma_size = gamma.size();
  rec.valency = valency_profile(gamma);
  rec.admissible = admits_simple_truncation(gamma);

  if (!rec.admissible) {
    try {
      truncate(gamma);
      rec.simplicity_ok = false;
    } catch (const Error& e) {
      rec.simplicity_ok = e.kind() == ErrorKind::NonSimpleResult;
    }
    return rec;
  }

  std::optional<TruncationResult> result;
  try {
    result.emplace(truncate(gamma));
    rec.simplicity_ok = true;
  } catch (const Error&) {
    rec.simplicity_ok = false;
    return rec;
  }
  const Polytope3& q = result->polytope;
  rec.f0 = q.vertex_count();
  rec.f1 = q.edge_count();
  rec.f2 = q.face_count();

  rec.criterion = flag_criterion(gamma);
  rec.criterion_literal = flag_criterion(gamma, CriterionMode::clauses_only);
  rec.oracle = is_flag_oracle(q);
  rec.belt_flag = is_flag(q);
  auto missing = missing_faces(q);
  rec.missing_all_pairs = std::all_of(missing.begin(), missing.end(),
                                      [](const MissingFace& m) { return m.faces.size() == 2; });

  const auto predicted = predicted_face_sizes(gamma);
  bool sizes = q.face_count() == p.face_count() + gamma.size();
  for (auto [f, size] : predicted.of_facet) {
    sizes = sizes && q.face_size(result->face_of_facet.at(f)) == size;
  }
  for (auto [e, size] : predicted.of_edge) {
    sizes = sizes && q.face_size(result->face_of_edge.at(e)) == size;
  }
  rec.face_sizes_ok = sizes;

  std::size_t ones = std::count(rec.valency.begin(), rec.valency.end(), 1u);
  std::size_t threes = std::count(rec.valency.begin(), rec.valency.end(), 3u);
  rec.vertex_count_ok = q.vertex_count() == p.vertex_count() + ones + 3 * threes &&
                        2 * q.edge_count() == 3 * q.vertex_count();

  const PVector pv = p_vector(q);
  rec.star_ok = check_star_identity(pv);
  rec.no_triangles_if_flag = !rec.oracle || pv[3] == 0;

  if (visit) visit(gamma, *result);
  return rec;
}

namespace {

void tally(SweepSummary& s, const SweepRecord& r) {
  if (!r.simplicity_ok) ++s.simplicity_failures;
  if (!r.admissible) return;
  ++s.admissible;
  if (!r.simplicity_ok) return;
  if (r.criterion == r.oracle)
    ++s.agreements;
  else
    ++s.disagreements;
  if (r.criterion_literal != r.oracle) ++s.literal_disagreements;
  if (!r.triangulated()) ++s.triangulation_failures;
  if (!r.face_sizes_ok || !r.vertex_count_ok) ++s.face_size_failures;
  if (!r.star_ok || !r.no_triangles_if_flag) ++s.star_failures;
  if (r.oracle) ++s.flag_outputs;
}

void sort_records(std::vector<SweepRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.gamma < b.gamma; });
}

// Valency test on a packed edge mask, bailing out at the first vertex of
// valency 2.
class ValencyFilter {
 public:
  explicit ValencyFilter(const Polytope3& p) : incident_(p.vertex_count()) {
    for (std::uint32_t v = 0; v < p.vertex_count(); ++v) {
      for (unsigned s = 0; s < 3; ++s) {
        incident_[v][s] = p.edge_index(p.edge_of(Polytope3::dart_at(VertexId{v}, s)));
      }
    }
  }

  bool admissible(const std::vector<std::uint64_t>& words) const {
    auto bit = [&](std::size_t i) { return static_cast<unsigned>((words[i / 64] >> (i % 64)) & 1); };
    for (const auto& inc : incident_) {
      if (bit(inc[0]) + bit(inc[1]) + bit(inc[2]) == 2) return false;
    }
    return true;
  }

 private:
  std::vector<std::array<std::size_t, 3>> incident_;
};

}  // namespace

SweepReport sweep_exhaustive(const Polytope3& p, const TruncationVisitor& visit,
                             bool keep_inadmissible) {
  const std::size_t m = p.edge_count();
  if (m > kMaxExhaustiveEdges) {
    throw Error(ErrorKind::InvalidSequence, "exhaustive sweep over " + std::to_string(m) +
                                                " edges is too large; sample instead");
  }
  SweepReport report;
  const std::uint64_t total = std::uint64_t{1} << m;
  report.summary.subsets_examined = total;
  std::vector<bool> mask(m);
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    for (std::size_t i = 0; i < m; ++i) mask[i] = (bits >> i) & 1;
    SweepRecord rec = check_subgraph(EdgeSubgraph::from_mask(p, mask), visit);
    tally(report.summary, rec);
    if (rec.admissible || keep_inadmissible || !rec.simplicity_ok) {
      report.records.push_back(std::move(rec));
    }
  }
  sort_records(report.records);
  return report;
}

SweepReport sweep_sampled(const Polytope3& p, std::uint64_t samples, std::uint64_t seed,
                          const TruncationVisitor& visit) {
  const std::size_t m = p.edge_count();
  const ValencyFilter filter(p);
  std::mt19937_64 rng(seed);
  SweepReport report;
  std::vector<std::uint64_t> words((m + 63) / 64);
  const std::uint64_t tail = m % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (m % 64)) - 1;
  std::vector<bool> mask(m);
  while (report.summary.admissible < samples) {
    bool any = false;
    for (std::size_t w = 0; w < words.size(); ++w) {
      words[w] = rng();
      if (w + 1 == words.size()) words[w] &= tail;
      any = any || words[w] != 0;
    }
    ++report.summary.draws;
    if (!any || !filter.admissible(words)) continue;
    for (std::size_t i = 0; i < m; ++i) mask[i] = (words[i / 64] >> (i % 64)) & 1;
    SweepRecord rec = check_subgraph(EdgeSubgraph::from_mask(p, mask), visit);
    tally(report.summary, rec);
    report.records.push_back(std::move(rec));
  }
  sort_records(report.records);
  return report;
}

}  // namespace polytrunc
