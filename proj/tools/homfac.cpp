// homfac: command-line front end.
//
// Exit codes: 0 success, 1 failed identity check, 2 input error,
// 3 internal inconsistency.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homfac/factorization.hpp"
#include "homfac/graph.hpp"
#include "homfac/identities.hpp"
#include "homfac/jaeger.hpp"
#include "homfac/knotdb.hpp"
#include "homfac/parallel.hpp"
#include "homfac/tutte.hpp"

using json = nlohmann::ordered_json;
using namespace homfac;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kInconsistent = 3;

struct Common {
  std::string input;
  std::string output;
  int jobs = 1;
  /// Empty means the command's default: JSON, or a text matrix for
  /// verify-identities.
  std::string format;
  std::uint64_t seed = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json condition_json(const Condition& c) {
  return {{"holds", c.holds}, {"kind", c.derived ? "derived" : "paper-stated"}, {"detail", c.detail}};
}

json certificate_json(const Certificate& c) {
  return {{"graph", c.graph},
          {"|V|", c.vertices},
          {"|E|", c.edges},
          {"h1", c.h1},
          {"conditions",
           {{"edge_parity", condition_json(c.edge_parity)},
            {"sq10", condition_json(c.sq10)},
            {"sq01", condition_json(c.sq01)},
            {"paper_V_parity", condition_json(c.paper_v_parity)},
            {"paper_Tx1_square", condition_json(c.paper_tx1_square)}}},
          {"verdict", to_string(c.verdict)}};
}

std::string factor_product(const std::vector<FactorRef>& fs) {
  std::string s;
  for (const auto& f : fs) {
    if (!s.empty()) s += " * ";
    s += (f.mirrored ? "m" : "") + f.name;
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

// --- factor-db ---------------------------------------------------------------

struct FactorDbArgs {
  int max_crossings = 0;
  std::string convention = "knotinfo";
};

int cmd_factor_db(const Common& common, const FactorDbArgs& args) {
  const SourceConvention conv =
      args.convention == "literal" ? SourceConvention::Literal : SourceConvention::KnotInfo;
  if (conv == SourceConvention::KnotInfo) {
    std::cerr << "note: KnotInfo convention, applying sign adaptor c*v^m*z^n -> (-1)^((m-n)/2)*c*v^m*z^n\n";
  }
  std::vector<KnotRecord> db;
  try {
    db = load_knots_file(common.input, conv);
  } catch (const IngestionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (args.max_crossings > 0) {
    std::erase_if(db, [&](const KnotRecord& r) { return r.crossing_number > args.max_crossings; });
  }

  std::vector<FactorReport> reports;
  try {
    reports = find_factorizations(std::move(db), common.jobs);
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }

  Output out(common.output);
  if (common.format == "csv") {
    out.get() << "name,status,factors,irreducible_factor_count,repeated_factor,residual\n";
    for (const auto& r : reports) {
      out.get() << csv_field(r.name) << ',' << to_string(r.status) << ',' << csv_field(factor_product(r.factors))
                << ',' << r.irreducible_factor_count << ',' << (r.repeated_factor ? "true" : "false") << ','
                << csv_field(r.residual ? r.residual->to_string() : "") << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& r : reports) {
      json factors = json::array();
      for (const auto& f : r.factors) {
        factors.push_back({{"name", f.name}, {"mirrored", f.mirrored}, {"multiplicity", f.multiplicity}});
      }
      arr.push_back({{"name", r.name},
                     {"status", to_string(r.status)},
                     {"factors", factors},
                     {"residual", r.residual ? json(r.residual->to_string()) : json(nullptr)},
                     {"irreducible_factor_count", r.irreducible_factor_count},
                     {"repeated_factor", r.repeated_factor}});
    }
    out.get() << arr.dump(2) << '\n';
  }

  int factored = 0;
  for (const auto& r : reports) factored += r.status == FactorStatus::Factored;
  std::cerr << reports.size() << " knots, " << factored << " reducible\n";
  return kOk;
}

// --- check-graph -------------------------------------------------------------

std::vector<MultiGraph> read_graphs(std::istream& in) {
  std::vector<MultiGraph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      int n = j.at("vertices").get<int>();
      std::vector<MultiGraph::Edge> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string();
      graphs.emplace_back(n, std::move(edges), std::move(name));
    } catch (const std::exception& e) {
      throw IngestionError(std::string("malformed graph: ") + e.what(), lineno);
    }
  }
  return graphs;
}

json check_one(const MultiGraph& g, int threshold) {
  const std::string id = g.name().empty() ? g.describe() : g.name();
  if (!is_2connected(g)) return {{"graph", id}, {"error", "not 2-connected"}};
  const BivarPoly t = tutte(g);
  const LaurentPoly h = homfly_from_tutte(t, g.vertex_count(), g.edge_count());
  const Certificate c = irreducibility_certificate(g);
  json j{{"graph", id},
         {"|V|", g.vertex_count()},
         {"|E|", g.edge_count()},
         {"tutte", to_string(t)},
         {"homfly", h.to_string()},
         {"certificate", certificate_json(c)}};
  if (g.edge_count() <= threshold) {
    const int count = factor_homogeneous_laurent(h).factor_count();
    const bool consistent = c.verdict == Verdict::Inconclusive || count == 1;
    j["factorization"] = {{"irreducible_factor_count", count}, {"consistent_with_certificate", consistent}};
  } else {
    j["factorization"] = nullptr;
  }
  return j;
}

int cmd_check_graph(const Common& common, int threshold) {
  std::vector<MultiGraph> graphs;
  try {
    if (common.input.empty() || common.input == "-") {
      graphs = read_graphs(std::cin);
    } else {
      std::ifstream in(common.input);
      if (!in) throw IngestionError("cannot open " + common.input, 0);
      graphs = read_graphs(in);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::vector<json> results(graphs.size());
  parallel_for(graphs.size(), common.jobs, [&](std::size_t i) {
    try {
      results[i] = check_one(graphs[i], threshold);
    } catch (const std::exception& e) {
      results[i] = {{"graph", graphs[i].name().empty() ? graphs[i].describe() : graphs[i].name()},
                    {"error", e.what()}};
    }
  });
  Output out(common.output);
  out.get() << json(results).dump(2) << '\n';
  return kOk;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
  int max_vertices = 8;
  int max_edges = 12;
  bool simple_only = false;
  bool no_planar_filter = false;
  bool dedupe = false;
};

int cmd_search(const Common& common, const SearchArgs& args) {
  Output out(common.output);
  SearchSummary s;
  long hits = 0;
  if (args.max_vertices < 3) {
    std::cerr << "warning: --max-vertices " << args.max_vertices << " is below 3, nothing to examine\n";
  } else {
    SearchOptions opts;
    opts.enumeration.max_vertices = args.max_vertices;
    opts.enumeration.max_edges = args.max_edges;
    opts.enumeration.simple_only = args.simple_only;
    opts.enumeration.dedupe = args.dedupe;
    opts.planar_filter = !args.no_planar_filter;
    opts.jobs = common.jobs;
    s = search_counterexamples(opts, [&](const Certificate& c) {
      ++hits;
      out.get() << certificate_json(c).dump() << '\n';
      std::cerr << "INCONCLUSIVE: " << c.graph << " (|V|=" << c.vertices << ", |E|=" << c.edges << ")\n";
    });
  }
  json summary{{"summary",
                {{"max_vertices", args.max_vertices},
                 {"max_edges", args.max_edges},
                 {"simple_only", args.simple_only},
                 {"planar_filter", !args.no_planar_filter},
                 {"dedupe", args.dedupe},
                 {"enumerated", s.enumerated},
                 {"nonplanar_skipped", s.nonplanar_skipped},
                 {"examined", s.examined},
                 {"certified", s.certified},
                 {"inconclusive", s.inconclusive},
                 {"readings_disagree", s.readings_disagree}}}};
  out.get() << summary.dump() << '\n';
  if (hits) std::cerr << "found " << hits << " inconclusive certificate(s)\n";
  return kOk;
}

// --- verify-identities -------------------------------------------------------

int cmd_verify_identities(const Common& common, const std::string& convention) {
  IdentityOptions opts;
  opts.seed = common.seed;
  std::vector<IdentityRow> rows = verify_identities(opts);

  if (!common.input.empty()) {
    try {
      auto db = load_knots_file(common.input, convention == "literal" ? SourceConvention::Literal
                                                                       : SourceConvention::KnotInfo);
      for (const auto& c : verify_table1(db)) {
        IdentityRow r{"table_" + c.row.target, c.passed, c.row.target + " = " + factor_product(c.row.factors)};
        if (c.difference) r.detail += "; difference " + c.difference->to_string();
        rows.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

  Output out(common.output);
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out.get() << arr.dump(2) << '\n';
  } else if (common.format == "csv") {
    out.get() << "check,passed,detail\n";
    for (const auto& r : rows) {
      out.get() << r.name << ',' << (r.passed ? "true" : "false") << ',' << csv_field(r.detail) << '\n';
    }
  } else {
    for (const auto& r : rows) out.get() << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << '\n';
  }
  bool all = true;
  for (const auto& r : rows) all = all && r.passed;
  int passed = 0;
  for (const auto& r : rows) passed += r.passed;
  std::cerr << passed << "/" << rows.size() << " identities hold\n";
  return all ? kOk : kCheckFailed;
}

// --- convert -----------------------------------------------------------------

int cmd_convert(const Common& common, const std::vector<std::string>& polys, const std::string& convention) {
  const SourceConvention conv = convention == "literal" ? SourceConvention::Literal : SourceConvention::KnotInfo;
  json arr = json::array();
  auto emit = [&](const std::string& name, const LaurentPoly& literal) {
    const LaurentPoly p = convert_to_homogeneous(literal);
    const LaurentPoly ki = adapt_knotinfo_signs(literal);
    arr.push_back({{"name", name},
                   {"knotinfo", ki.to_string()},
                   {"literal", literal.to_string()},
                   {"homogeneous", p.to_string()},
                   {"mirror", mirror(p).to_string()}});
  };
  try {
    if (!common.input.empty()) {
      for (const auto& r : load_knots_file(common.input, conv)) emit(r.name, r.homfly_ki);
    }
    for (const auto& text : polys) {
      const LaurentPoly p = parse_homfly(text);
      emit(text, conv == SourceConvention::KnotInfo ? adapt_knotinfo_signs(p) : p);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  Output out(common.output);
  out.get() << arr.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY polynomial factorization and Jaeger link irreducibility tools"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input,-i", common.input, "input file");
    if (input_required) in->required();
    sub->add_option("--output,-o", common.output, "output file (default stdout)");
    sub->add_option("--jobs,-j", common.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", common.seed, "random seed");
  };

  FactorDbArgs fdb;
  auto* factor_db = app.add_subcommand("factor-db", "find factorizations of knot HOMFLY polynomials");
  add_common(factor_db, true);
  factor_db->add_option("--max-crossings", fdb.max_crossings, "ignore knots above this crossing number");
  factor_db->add_option("--convention", fdb.convention, "knotinfo or literal")
      ->check(CLI::IsMember({"knotinfo", "literal"}));

  int threshold = 6;
  auto* check_graph = app.add_subcommand("check-graph", "Tutte, HOMFLY and certificate for graphs (JSON lines)");
  add_common(check_graph, false);
  check_graph->add_option("--threshold-factor-edges", threshold, "full factorization up to this many edges");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "look for graphs the irreducibility certificate cannot decide");
  add_common(search, false);
  search->add_option("--max-vertices", sa.max_vertices, "largest vertex count (default 8)");
  search->add_option("--max-edges", sa.max_edges, "largest edge count (default 12)");
  search->add_flag("--simple-only", sa.simple_only, "skip multigraphs");
  search->add_flag("--no-planar-filter", sa.no_planar_filter, "examine nonplanar graphs too");
  search->add_flag("--dedupe", sa.dedupe, "drop isomorphic multigraphs");

  std::string id_convention = "knotinfo";
  auto* verify = app.add_subcommand("verify-identities", "run the identity checks");
  add_common(verify, false);
  verify->add_option("--convention", id_convention)->check(CLI::IsMember({"knotinfo", "literal"}));

  std::vector<std::string> polys;
  std::string conv_convention = "knotinfo";
  auto* convert = app.add_subcommand("convert", "convert (v,z) HOMFLY polynomials to the homogeneous form");
  add_common(convert, false);
  convert->add_option("polynomials", polys, "polynomials in v and z");
  convert->add_option("--convention", conv_convention)->check(CLI::IsMember({"knotinfo", "literal"}));

  CLI11_PARSE(app, argc, argv);

  if (common.format == "csv" && !*factor_db && !*verify) {
    std::cerr << "error: csv output is only available for factor-db and verify-identities\n";
    return kInputError;
  }
  try {
    if (*factor_db) return cmd_factor_db(common, fdb);
    if (*check_graph) return cmd_check_graph(common, threshold);
    if (*search) return cmd_search(common, sa);
    if (*verify) return cmd_verify_identities(common, id_convention);
    if (*convert) return cmd_convert(common, polys, conv_convention);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
