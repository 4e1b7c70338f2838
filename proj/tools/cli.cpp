#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "polytrunc/eberhard.hpp"
#include "polytrunc/flag.hpp"
#include "polytrunc/io.hpp"
#include "polytrunc/sweep.hpp"
#include "polytrunc/truncation.hpp"

namespace polytrunc::cli {

namespace {

using Json = nlohmann::ordered_json;

// Human-readable lines first, then one JSON record per item, then summary
// key/value lines.
class Report {
 public:
  Report(std::ostream& out, const std::vector<std::string>& args) : out_(out) {
    out_ << "# polytrunc";
    for (const auto& a : args) out_ << ' ' << a;
    out_ << '\n';
  }

  std::ostream& text() { return out_; }

  void record(Json item) {
    Json rec;
    rec["schema"] = kReportSchema;
    for (auto& [k, v] : item.items()) rec[k] = v;
    records_.push_back(std::move(rec));
  }

  template <class T>
  void summary(const std::string& key, const T& value) {
    std::ostringstream s;
    s << std::boolalpha << value;
    summary_.emplace_back(key, s.str());
  }

  void finish() {
    out_ << "## records " << kReportSchema << '\n';
    for (const auto& r : records_) out_ << r.dump() << '\n';
    out_ << "## summary\n";
    for (const auto& [k, v] : summary_) out_ << k << ": " << v << '\n';
  }

 private:
  std::ostream& out_;
  std::vector<Json> records_;
  std::vector<std::pair<std::string, std::string>> summary_;
};

// Exit-code aware failure raised inside command handlers.
struct CommandError {
  int code;
  std::string message;
};

Json f_vector(const Polytope3& p) {
  return Json::array({p.vertex_count(), p.edge_count(), p.face_count()});
}

Json pvector_json(const PVector& pv) {
  Json obj = Json::object();
  for (auto [k, c] : pv.counts()) obj[std::to_string(k)] = c;
  return obj;
}

Json faces_json(const Polytope3& p) {
  Json faces = Json::array();
  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    Json cyc = Json::array();
    for (VertexId v : p.face_vertices(FaceId{f})) cyc.push_back(v.value);
    faces.push_back(cyc);
  }
  return faces;
}

std::string edge_name(const Polytope3& p, EdgeId e) {
  auto [u, v] = p.endpoints(e);
  return std::to_string(std::min(u.value, v.value)) + "-" + std::to_string(std::max(u.value, v.value));
}

std::string valency_string(const std::vector<unsigned>& valency) {
  std::string s;
  for (unsigned k : valency) s.push_back(static_cast<char>('0' + k));
  return s;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::string_view rest = text;
  auto number = [&](std::string_view tok) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw CommandError{kExitUsage, "bad vertex id '" + std::string(tok) + "' in --edges"};
    }
    return value;
  };
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw CommandError{kExitUsage, "expected u-v in --edges, got '" + std::string(item) + "'"};
    }
    pairs.emplace_back(number(item.substr(0, dash)), number(item.substr(dash + 1)));
  }
  if (pairs.empty()) throw CommandError{kExitUsage, "--edges is empty"};
  return pairs;
}

std::vector<PlanarCodeRecord> load(const std::string& path) {
  try {
    return load_polytope_file(path);
  } catch (const Error& e) {
    throw CommandError{kExitUsage, path + ": " + e.what()};
  }
}

// The single polytope a per-polytope command works on.
Polytope3 load_one(const std::string& path, std::size_t index) {
  auto records = load(path);
  if (index >= records.size()) {
    throw CommandError{kExitUsage, path + ": no record " + std::to_string(index)};
  }
  auto& rec = records[index];
  if (!rec.polytope) throw CommandError{kExitUsage, path + ": record " + std::to_string(index) + ": " + rec.message};
  return *rec.polytope;
}

Polytope3 resolve_polytope(const std::string& name_or_file) {
  try {
    return catalog(name_or_file);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnknownName) throw;
  }
  return load_one(name_or_file, 0);
}

EdgeSubgraph make_subgraph(const Polytope3& p, const std::string& edges, bool all_edges) {
  try {
    if (all_edges) return EdgeSubgraph::all_edges(p);
    auto pairs = parse_edge_list(edges);
    return EdgeSubgraph::from_vertex_pairs(p, pairs);
  } catch (const Error& e) {
    throw CommandError{kExitUsage, e.what()};
  }
}

// ---------------------------------------------------------------------------

int cmd_validate(Report& report, const std::string& path) {
  auto records = load(path);
  std::size_t valid = 0;
  for (const auto& rec : records) {
    Json item{{"kind", "validate"}, {"polytope", path + "#" + std::to_string(rec.index)}};
    if (rec.polytope) {
      ++valid;
      item["valid"] = true;
      item["f"] = f_vector(*rec.polytope);
      report.text() << "record " << rec.index << ": valid (f0,f1,f2)=(" << rec.polytope->vertex_count()
                    << ',' << rec.polytope->edge_count() << ',' << rec.polytope->face_count() << ")\n";
    } else {
      item["valid"] = false;
      item["error"] = std::string(to_string(*rec.error));
      item["message"] = rec.message;
      report.text() << "record " << rec.index << ": invalid: " << rec.message << '\n';
    }
    report.record(std::move(item));
  }
  report.summary("records", records.size());
  report.summary("valid", valid);
  report.summary("invalid", records.size() - valid);
  return valid == records.size() ? kExitOk : kExitUsage;
}

int cmd_pvector(Report& report, const std::string& path) {
  auto records = load(path);
  int code = kExitOk;
  std::size_t star_failures = 0;
  for (const auto& rec : records) {
    Json item{{"kind", "pvector"}, {"polytope", path + "#" + std::to_string(rec.index)}};
    if (!rec.polytope) {
      item["error"] = std::string(to_string(*rec.error));
      report.text() << "record " << rec.index << ": invalid: " << rec.message << '\n';
      report.record(std::move(item));
      code = std::max(code, kExitUsage);
      continue;
    }
    PVector pv = p_vector(*rec.polytope);
    bool star = check_star_identity(pv);
    if (!star) ++star_failures;
    item["pvector"] = pvector_json(pv);
    item["star_identity"] = star;
    report.text() << "record " << rec.index << ": p=" << pv.to_string()
                  << " star_identity=" << (star ? "holds" : "FAILS") << '\n';
    report.record(std::move(item));
  }
  report.summary("records", records.size());
  report.summary("star_failures", star_failures);
  return star_failures > 0 ? kExitViolation : code;
}

int cmd_belts(Report& report, const std::string& path) {
  auto records = load(path);
  int code = kExitOk;
  std::size_t mismatches = 0;
  for (const auto& rec : records) {
    Json item{{"kind", "belts"}, {"polytope", path + "#" + std::to_string(rec.index)}};
    if (!rec.polytope) {
      item["error"] = std::string(to_string(*rec.error));
      report.text() << "record " << rec.index << ": invalid: " << rec.message << '\n';
      report.record(std::move(item));
      code = std::max(code, kExitUsage);
      continue;
    }
    const Polytope3& p = *rec.polytope;
    auto belts = enumerate_3belts(p);
    bool flag = is_flag(p);
    bool oracle = is_flag_oracle(p);
    if (flag != oracle) ++mismatches;
    Json list = Json::array();
    report.text() << "record " << rec.index << ": " << belts.size() << " 3-belt(s)\n";
    for (const auto& b : belts) {
      list.push_back(Json::array({b.faces[0].value, b.faces[1].value, b.faces[2].value}));
      report.text() << "  belt faces " << b.faces[0].value << ' ' << b.faces[1].value << ' '
                    << b.faces[2].value << '\n';
    }
    report.text() << "  flag (belts)=" << std::boolalpha << flag << " flag (definition)=" << oracle
                  << (flag == oracle ? "" : "  MISMATCH") << '\n';
    item["belts"] = list;
    item["faces"] = faces_json(p);
    item["is_flag"] = flag;
    item["is_flag_oracle"] = oracle;
    report.record(std::move(item));
  }
  report.summary("records", records.size());
  report.summary("mismatches", mismatches);
  return mismatches > 0 ? kExitViolation : code;
}

int cmd_truncate(Report& report, const std::string& path, std::size_t index, const std::string& edges,
                 bool all_edges, const std::string& output) {
  const Polytope3 p = load_one(path, index);
  const EdgeSubgraph gamma = make_subgraph(p, edges, all_edges);
  std::optional<TruncationResult> result;
  try {
    result.emplace(truncate(gamma));
  } catch (const Error& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  const Polytope3& q = result->polytope;
  const auto predicted = predicted_face_sizes(gamma);

  report.text() << "gamma: " << gamma.encoding() << " (" << gamma.size() << " edges)\n";
  report.text() << "valency: " << valency_string(valency_profile(gamma)) << '\n';
  report.text() << "result (f0,f1,f2)=(" << q.vertex_count() << ',' << q.edge_count() << ','
                << q.face_count() << ") p=" << p_vector(q).to_string() << '\n';
  std::size_t mismatches = 0;
  for (auto [f, nf] : result->face_of_facet) {
    std::size_t want = predicted.of_facet.at(f), got = q.face_size(nf);
    if (want != got) ++mismatches;
    report.text() << "  facet " << f.value << " -> face " << nf.value << " size " << got
                  << " (predicted " << want << ")\n";
    report.record({{"kind", "provenance"}, {"source", "facet"}, {"facet", f.value}, {"face", nf.value},
                   {"size", got}, {"predicted", want}});
  }
  for (auto [e, nf] : result->face_of_edge) {
    std::size_t want = predicted.of_edge.at(e), got = q.face_size(nf);
    if (want != got) ++mismatches;
    report.text() << "  edge " << edge_name(p, e) << " -> face " << nf.value << " size " << got
                  << " (predicted " << want << ")\n";
    report.record({{"kind", "provenance"}, {"source", "edge"}, {"edge", edge_name(p, e)},
                   {"face", nf.value}, {"size", got}, {"predicted", want}});
  }
  auto match = find_in_catalog(q);
  report.text() << (match ? "isomorphic to catalog entry " + *match : std::string("no catalog match"))
                << '\n';

  const std::string text = write_canonical_text(q);
  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw CommandError{kExitUsage, "cannot write " + output};
    file << text;
    report.text() << "wrote " << output << '\n';
  } else {
    report.text() << "## polytope\n" << text;
  }
  report.summary("f", "(" + std::to_string(q.vertex_count()) + "," + std::to_string(q.edge_count()) +
                          "," + std::to_string(q.face_count()) + ")");
  report.summary("isomorphic_to", match.value_or("none"));
  report.summary("face_size_mismatches", mismatches);
  return mismatches > 0 ? kExitViolation : kExitOk;
}

int cmd_flagcheck(Report& report, const std::string& path, std::size_t index, const std::string& edges,
                  bool all_edges, bool verify) {
  const Polytope3 p = load_one(path, index);
  const EdgeSubgraph gamma = make_subgraph(p, edges, all_edges);
  bool criterion = false;
  try {
    criterion = flag_criterion(gamma);
  } catch (const Error& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  Json item{{"kind", "flagcheck"}, {"polytope", path + "#" + std::to_string(index)},
            {"gamma", gamma.encoding()}, {"valency", valency_string(valency_profile(gamma))},
            {"criterion", criterion}};
  report.text() << "gamma: " << gamma.encoding() << '\n';
  report.text() << "criterion: " << (criterion ? "flag" : "not flag") << '\n';
  int code = kExitOk;
  if (verify) {
    const Polytope3 q = truncate(gamma).polytope;
    bool oracle = is_flag_oracle(q);
    item["oracle"] = oracle;
    item["f"] = f_vector(q);
    report.text() << "oracle on truncation: " << (oracle ? "flag" : "not flag")
                  << (oracle == criterion ? "" : "  MISMATCH") << '\n';
    report.summary("agree", oracle == criterion);
    if (oracle != criterion) code = kExitViolation;
  }
  report.record(std::move(item));
  report.summary("criterion", criterion);
  return code;
}

int cmd_flagify(Report& report, const std::string& path, const std::string& output) {
  auto records = load(path);
  int code = kExitOk;
  std::vector<Polytope3> produced;
  for (const auto& rec : records) {
    Json item{{"kind", "flagify"}, {"polytope", path + "#" + std::to_string(rec.index)}};
    if (!rec.polytope) {
      item["error"] = std::string(to_string(*rec.error));
      report.text() << "record " << rec.index << ": invalid: " << rec.message << '\n';
      report.record(std::move(item));
      code = std::max(code, kExitUsage);
      continue;
    }
    const Polytope3& p = *rec.polytope;
    try {
      const Polytope3 q = flagify(p).polytope;
      PVector predicted = transformed_pvector(p);
      PVector actual = p_vector(q);
      bool flag = is_flag(q);
      bool oracle = is_flag_oracle(q);
      bool ok = predicted == actual && flag && oracle;
      item["pvector"] = pvector_json(actual);
      item["transformed_pvector"] = pvector_json(predicted);
      item["is_flag"] = flag;
      item["is_flag_oracle"] = oracle;
      item["f"] = f_vector(q);
      report.text() << "record " << rec.index << ": " << p_vector(p).to_string() << " -> "
                    << actual.to_string() << " (transformed " << predicted.to_string()
                    << ") flag=" << std::boolalpha << (flag && oracle) << (ok ? "" : "  VIOLATION")
                    << '\n';
      if (!ok) code = kExitViolation;
      produced.push_back(q);
    } catch (const Error& e) {
      item["error"] = std::string(to_string(e.kind()));
      report.text() << "record " << rec.index << ": " << e.what() << '\n';
      code = std::max(code, kExitUsage);
    }
    report.record(std::move(item));
  }
  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw CommandError{kExitUsage, "cannot write " + output};
    if (produced.size() == 1) {
      file << write_canonical_text(produced.front());
    } else {
      auto bytes = write_planar_code(std::span<const Polytope3>(produced));
      file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
  }
  report.summary("records", records.size());
  report.summary("flagified", produced.size());
  return code;
}

int cmd_verify(Report& report, const std::string& target, bool exhaustive, std::optional<std::uint64_t> sample,
               std::optional<std::uint64_t> seed, bool summary_only) {
  const Polytope3 p = resolve_polytope(target);
  if (sample && exhaustive) throw CommandError{kExitUsage, "--exhaustive and --sample are exclusive"};
  if (sample && !seed) throw CommandError{kExitUsage, "--sample requires an explicit --seed"};
  if (!sample) {
    if (p.edge_count() > 16) {
      throw CommandError{kExitUsage, "polytope has " + std::to_string(p.edge_count()) +
                                         " edges; exhaustive sweeps need f1 <= 16, use --sample N --seed S"};
    }
    exhaustive = true;
  }
  report.text() << "polytope: " << target << " (f0,f1,f2)=(" << p.vertex_count() << ',' << p.edge_count()
                << ',' << p.face_count() << ")\n";
  SweepReport sweep;
  if (exhaustive) {
    report.text() << "mode: exhaustive\n";
    sweep = sweep_exhaustive(p);
  } else {
    report.text() << "mode: sample " << *sample << " seed " << *seed << '\n';
    sweep = sweep_sampled(p, *sample, *seed);
  }
  const auto& s = sweep.summary;
  if (!summary_only) {
    for (const auto& r : sweep.records) {
      Json item{{"kind", "verify"}, {"polytope", target}, {"gamma", r.gamma},
                {"valency", valency_string(r.valency)}, {"admissible", r.admissible}};
      if (r.admissible) {
        item["criterion"] = r.criterion;
        item["oracle"] = r.oracle;
        item["f"] = Json::array({r.f0, r.f1, r.f2});
      }
      item["ok"] = r.all_ok();
      report.record(std::move(item));
    }
  }
  for (const auto& r : sweep.records) {
    if (!r.all_ok()) report.text() << "FAILED gamma " << r.gamma << '\n';
  }
  if (exhaustive) {
    report.text() << s.subsets_examined << " subgraphs examined, " << s.admissible << " admissible\n";
  } else {
    report.text() << s.draws << " subsets drawn, " << s.admissible << " admissible\n";
  }
  double pct = s.admissible == 0 ? 100.0 : 100.0 * static_cast<double>(s.agreements) / static_cast<double>(s.admissible);
  report.text() << "agreements " << s.agreements << '/' << s.admissible << " (" << pct << "%)\n";

  report.summary("mode", exhaustive ? "exhaustive" : "sample");
  if (!exhaustive) report.summary("seed", *seed);
  report.summary("subsets_examined", exhaustive ? s.subsets_examined : s.draws);
  report.summary("admissible", s.admissible);
  report.summary("agreements", s.agreements);
  report.summary("disagreements", s.disagreements);
  report.summary("literal_clause_disagreements", s.literal_disagreements);
  report.summary("triangulation_failures", s.triangulation_failures);
  report.summary("simplicity_failures", s.simplicity_failures);
  report.summary("face_size_failures", s.face_size_failures);
  report.summary("star_failures", s.star_failures);
  return s.clean() ? kExitOk : kExitViolation;
}

int cmd_scan(Report& report, const std::string& path, bool with_catalog, const std::string& target_text,
             bool emit_flagified) {
  SparsePSequence target;
  try {
    target = SparsePSequence::parse(target_text);
  } catch (const Error& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  std::vector<Polytope3> stream;
  std::vector<std::string> names;
  if (!path.empty()) {
    for (const auto& rec : load(path)) {
      if (rec.polytope) {
        stream.push_back(*rec.polytope);
        names.push_back(path + "#" + std::to_string(rec.index));
      } else {
        report.text() << "skipping record " << rec.index << ": " << rec.message << '\n';
      }
    }
  }
  if (with_catalog) {
    for (auto& entry : catalog_entries()) {
      stream.push_back(entry.polytope);
      names.push_back(entry.name);
    }
  }
  bool star = check_star_identity(target);
  bool flag_seq = check_flag_sequence(target);
  report.text() << "target: " << target.to_string() << " (p6 free)\n";
  report.text() << "star identity " << (star ? "holds" : "fails") << ", flag sequence: " << std::boolalpha
                << flag_seq << '\n';
  auto matches = scan_for_sequence(stream, target, emit_flagified);
  for (const auto& m : matches) {
    Json item{{"kind", "scan"}, {"polytope", names[m.index]}, {"pvector", pvector_json(m.pvector)}};
    report.text() << "match " << names[m.index] << ": " << m.pvector.to_string();
    if (m.flagified) {
      PVector fp = p_vector(*m.flagified);
      bool flag = is_flag(*m.flagified);
      item["flagified_pvector"] = pvector_json(fp);
      item["flagified_is_flag"] = flag;
      report.text() << " -> flagified " << fp.to_string() << " flag=" << flag;
    }
    report.text() << '\n';
    report.record(std::move(item));
  }
  report.summary("scanned", stream.size());
  report.summary("matches", matches.size());
  report.summary("star_identity", star);
  report.summary("flag_sequence", flag_seq);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-truncation toolkit for simple 3-polytopes", "polytrunc"};
  app.require_subcommand(1);

  std::string file, edges, output, target, polytope;
  std::size_t index = 0;
  bool all_edges = false, verify = false, exhaustive = false, summary_only = false, with_catalog = false,
       emit_flagified = false;
  std::optional<std::uint64_t> sample, seed;

  auto* validate = app.add_subcommand("validate", "Validate every record of a polytope file");
  validate->add_option("file", file, "canonical text or planar_code file")->required();

  auto* pvector = app.add_subcommand("pvector", "Face-size counts and the face-count identity");
  pvector->add_option("file", file)->required();

  auto* belts = app.add_subcommand("belts", "3-belts and flagness by both checkers");
  belts->add_option("file", file)->required();

  auto add_edges = [&](CLI::App* cmd) {
    auto* e = cmd->add_option("--edges", edges, "comma-separated u-v vertex pairs");
    auto* a = cmd->add_flag("--all-edges", all_edges, "use the whole edge graph");
    e->excludes(a);
    cmd->add_option("--index", index, "record index in multi-record files");
  };

  auto* trunc = app.add_subcommand("truncate", "Cut off a set of edges");
  trunc->add_option("file", file)->required();
  add_edges(trunc);
  trunc->add_option("-o,--output", output, "write the result here (canonical text)");

  auto* flagcheck = app.add_subcommand("flagcheck", "Predict flagness of a truncation");
  flagcheck->add_option("file", file)->required();
  add_edges(flagcheck);
  flagcheck->add_flag("--verify", verify, "also decide flagness of the actual truncation");

  auto* flagify_cmd = app.add_subcommand("flagify", "Truncate along the whole edge graph");
  flagify_cmd->add_option("file", file)->required();
  flagify_cmd->add_option("-o,--output", output, "write the flagified polytope(s) here");

  auto* verify_cmd = app.add_subcommand("verify", "Sweep subgraphs and compare criterion with oracle");
  verify_cmd->add_option("--polytope", polytope, "catalog name or file")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "every edge subset (f1 <= 16)");
  verify_cmd->add_option("--sample", sample, "number of admissible subgraphs to sample");
  verify_cmd->add_option("--seed", seed, "random seed for --sample");
  verify_cmd->add_flag("--summary-only", summary_only, "omit per-subgraph records");

  auto* scan = app.add_subcommand("scan", "Find polytopes matching a p-vector (p6 free)");
  scan->add_option("file", file, "polytope file to scan");
  scan->add_option("--target", target, "k=c,k=c,...")->required();
  scan->add_flag("--catalog", with_catalog, "also scan the built-in catalog");
  scan->add_flag("--flagify", emit_flagified, "flagify matches without triangles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "polytrunc: " << e.what() << '\n';
    return kExitUsage;
  }

  Report report(out, args);
  int code = kExitOk;
  try {
    if (validate->parsed()) {
      code = cmd_validate(report, file);
    } else if (pvector->parsed()) {
      code = cmd_pvector(report, file);
    } else if (belts->parsed()) {
      code = cmd_belts(report, file);
    } else if (trunc->parsed() || flagcheck->parsed()) {
      if (edges.empty() && !all_edges) throw CommandError{kExitUsage, "one of --edges or --all-edges is required"};
      code = trunc->parsed() ? cmd_truncate(report, file, index, edges, all_edges, output)
                             : cmd_flagcheck(report, file, index, edges, all_edges, verify);
    } else if (flagify_cmd->parsed()) {
      code = cmd_flagify(report, file, output);
    } else if (verify_cmd->parsed()) {
      code = cmd_verify(report, polytope, exhaustive, sample, seed, summary_only);
    } else if (scan->parsed()) {
      if (file.empty() && !with_catalog) throw CommandError{kExitUsage, "scan needs a file or --catalog"};
      code = cmd_scan(report, file, with_catalog, target, emit_flagified);
    }
  } catch (const CommandError& e) {
    err << "polytrunc: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "polytrunc: " << e.what() << '\n';
    return kExitUsage;
  }
  report.finish();
  return code;
}

}  // namespace polytrunc::cli
