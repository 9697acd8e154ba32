#include "homfac/knotdb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "homfac/factorization.hpp"
#include "homfac/jaeger.hpp"
#include "homfac/parallel.hpp"
#include "json.hpp"

namespace homfac {

const VarList& knotinfo_vars() {
  static const VarList vars = make_vars({"v", "z"});
  return vars;
}

LaurentPoly parse_homfly(std::string_view s) { return parse_laurent(s, knotinfo_vars()); }

namespace {

int sign_of_half(int k) { return (k / 2) % 2 == 0 ? 1 : -1; }

void require_knotinfo_vars(const LaurentPoly& p) {
  if (p.variables() != *knotinfo_vars()) throw std::invalid_argument("expected a polynomial in v and z");
}

void require_homfly_vars(const LaurentPoly& p) {
  if (p.variables() != *homfly_vars()) throw std::invalid_argument("expected a polynomial in x, y and z");
}

}  // namespace

LaurentPoly adapt_knotinfo_signs(const LaurentPoly& p) {
  require_knotinfo_vars(p);
  LaurentPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    const int m = e[0], n = e[1];
    if ((m - n) % 2 != 0) {
      throw std::domain_error("term v^" + std::to_string(m) + "*z^" + std::to_string(n) + " has odd parity");
    }
    r.add_term(e, sign_of_half(m - n) > 0 ? c : Integer(-c));
  }
  return r;
}

LaurentPoly to_knotinfo(const LaurentPoly& homogeneous) {
  require_homfly_vars(homogeneous);
  const Monomial images[] = {{1, {-1, 0}}, {1, {1, 0}}, {-1, {0, 1}}};
  return substitute_monomials(homogeneous, images, knotinfo_vars());
}

LaurentPoly convert_to_homogeneous(const LaurentPoly& p) {
  require_knotinfo_vars(p);
  // x^a y^b z^n -> (-1)^n v^(b-a) z^n; degree 0 forces a + b = -n, so
  // a = (-m-n)/2 and b = (m-n)/2 for the image term v^m z^n.
  LaurentPoly r(homfly_vars());
  for (const auto& [e, c] : p.terms()) {
    const int m = e[0], n = e[1];
    if ((m + n) % 2 != 0) {
      throw std::domain_error("term " + c.get_str() + "*v^" + std::to_string(m) + "*z^" + std::to_string(n) +
                              " has no degree-0 preimage (odd parity)");
    }
    r.add_term({(-m - n) / 2, (m - n) / 2, n}, n % 2 == 0 ? c : Integer(-c));
  }
  if (!(to_knotinfo(r) == p)) throw std::logic_error("conversion round trip failed");
  return r;
}

LaurentPoly mirror(const LaurentPoly& p) {
  require_homfly_vars(p);
  const Monomial images[] = {{1, {0, 1, 0}}, {1, {1, 0, 0}}, {1, {0, 0, 1}}};
  return substitute_monomials(p, images, p.vars());
}

int crossing_number_from_name(std::string_view name) {
  std::size_t i = 0;
  int n = 0;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
    n = n * 10 + (name[i] - '0');
    ++i;
  }
  if (i == 0) throw std::invalid_argument("knot name without crossing number: " + std::string(name));
  return n;
}

KnotRecord make_record(std::string name, std::string_view homfly_text, SourceConvention convention) {
  KnotRecord r;
  r.crossing_number = crossing_number_from_name(name);
  r.name = std::move(name);
  std::string_view text = homfly_text;
  LaurentPoly source = text.find_first_not_of(" \t") == std::string_view::npos
                           ? LaurentPoly::constant(knotinfo_vars(), 1)
                           : parse_homfly(text);
  r.homfly_ki = convention == SourceConvention::KnotInfo ? adapt_knotinfo_signs(source) : source;
  r.homfly = convert_to_homogeneous(r.homfly_ki);
  if (!is_homogeneous_of_degree(r.homfly, 0)) throw std::logic_error("converted polynomial is not of degree 0");
  return r;
}

IngestionError::IngestionError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string trim(std::string s) {
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

KnotRecord record_at(const std::string& name, const std::string& text, SourceConvention convention,
                     std::size_t line) {
  if (name.empty()) throw IngestionError("empty knot name", line);
  try {
    return make_record(name, text, convention);
  } catch (const ParseError& e) {
    throw IngestionError(name + ": " + e.what() + " at offset " + std::to_string(e.position()), line);
  } catch (const std::exception& e) {
    throw IngestionError(name + ": " + e.what(), line);
  }
}

}  // namespace

std::vector<KnotRecord> load_knots_csv(std::istream& in, SourceConvention convention) {
  std::vector<KnotRecord> out;
  std::string line;
  std::size_t lineno = 0;
  int name_col = -1, homfly_col = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (name_col < 0) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "name") name_col = static_cast<int>(i);
        if (fields[i] == "homfly") homfly_col = static_cast<int>(i);
      }
      if (name_col < 0 || homfly_col < 0) throw IngestionError("header must contain name and homfly columns", lineno);
      continue;
    }
    if (static_cast<int>(fields.size()) <= std::max(name_col, homfly_col)) {
      throw IngestionError("too few fields", lineno);
    }
    out.push_back(record_at(fields[name_col], fields[homfly_col], convention, lineno));
  }
  return out;
}

std::vector<KnotRecord> load_knots_jsonl(std::istream& in, SourceConvention convention) {
  std::vector<KnotRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw IngestionError(std::string("malformed JSON: ") + e.what(), lineno);
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("homfly") || !j["name"].is_string() ||
        !j["homfly"].is_string()) {
      throw IngestionError("expected {\"name\": string, \"homfly\": string}", lineno);
    }
    out.push_back(record_at(j["name"].get<std::string>(), j["homfly"].get<std::string>(), convention, lineno));
  }
  return out;
}

std::vector<KnotRecord> load_knots_file(const std::string& path, SourceConvention convention) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open " + path, 0);
  const bool json = path.size() >= 5 && (path.ends_with(".jsonl") || path.ends_with(".json"));
  return json ? load_knots_jsonl(in, convention) : load_knots_csv(in, convention);
}

namespace {

std::tuple<int, char, int, std::string> knot_key(const std::string& name) {
  int crossing = 0;
  char family = ' ';
  int index = 0;
  std::size_t i = 0;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) crossing = crossing * 10 + (name[i++] - '0');
  if (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) family = name[i++];
  if (i < name.size() && name[i] == '_') ++i;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) index = index * 10 + (name[i++] - '0');
  return {crossing, family, index, name};
}

}  // namespace

void sort_knots(std::vector<KnotRecord>& db) {
  std::stable_sort(db.begin(), db.end(),
                   [](const KnotRecord& a, const KnotRecord& b) { return knot_key(a.name) < knot_key(b.name); });
}

std::string to_string(FactorStatus s) {
  switch (s) {
    case FactorStatus::Irreducible:
      return "Irreducible";
    case FactorStatus::Factored:
      return "Factored";
    case FactorStatus::Unit:
      return "Unit";
  }
  return "?";
}

namespace {

struct Candidate {
  std::size_t record;
  bool mirrored;
  LaurentPoly poly;
  std::vector<int> span;  // max - min exponent per variable
};

std::vector<int> exponent_span(const LaurentPoly& p) {
  std::vector<int> s(p.num_variables());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = p.max_degree(i) - p.min_degree(i);
  return s;
}

bool fits(const std::vector<int>& cand, const std::vector<int>& target) {
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (cand[i] > target[i]) return false;
  }
  return true;
}

struct TrialResult {
  std::vector<std::size_t> chosen;  // candidate indices, non-decreasing
  LaurentPoly rest;
  bool complete = false;
};

// Depth-first trial division. A complete factorization leaves a unit; the
// first one found (in candidate order) wins. Otherwise the deepest partial
// one is kept.
void trial(const std::vector<Candidate>& cands, std::size_t limit, const LaurentPoly& rest, std::size_t start,
           std::vector<std::size_t>& path, TrialResult& best) {
  const auto span = exponent_span(rest);
  for (std::size_t i = start; i < limit && !best.complete; ++i) {
    const Candidate& c = cands[i];
    if (!fits(c.span, span)) continue;
    auto q = divide_exact(rest, c.poly);
    if (!q) continue;
    path.push_back(i);
    if (q->is_unit()) {
      // A unit quotient at the top level only says the target equals a
      // candidate up to a unit, which is not a factorization.
      if (path.size() >= 2) {
        best = {path, *q, true};
      }
    } else {
      if (path.size() > best.chosen.size()) best = {path, *q, false};
      trial(cands, limit, *q, i, path, best);
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<FactorReport> find_factorizations(std::vector<KnotRecord> db, int jobs) {
  sort_knots(db);
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (db[i].homfly.is_unit()) continue;
    cands.push_back({i, false, db[i].homfly, exponent_span(db[i].homfly)});
    LaurentPoly m = mirror(db[i].homfly);
    if (!(m == db[i].homfly)) cands.push_back({i, true, m, exponent_span(m)});
  }

  std::vector<FactorReport> reports(db.size());
  parallel_for(db.size(), jobs, [&](std::size_t t) {
    const KnotRecord& target = db[t];
    FactorReport rep;
    rep.name = target.name;
    if (target.homfly.is_unit()) {
      rep.status = FactorStatus::Unit;
      reports[t] = std::move(rep);
      return;
    }
    // Candidates with crossing number at most the target's, itself excluded.
    std::vector<Candidate> pool;
    for (const auto& c : cands) {
      if (c.record != t && db[c.record].crossing_number <= target.crossing_number) pool.push_back(c);
    }
    TrialResult best{{}, target.homfly, false};
    std::vector<std::size_t> path;
    trial(pool, pool.size(), target.homfly, 0, path, best);

    const LaurentFactorization full = factor_homogeneous_laurent(target.homfly);
    rep.irreducible_factor_count = full.factor_count();
    for (const auto& [f, m] : full.factors) {
      if (m > 1) rep.repeated_factor = true;
    }

    if (!best.chosen.empty()) {
      std::map<std::pair<std::size_t, bool>, int> mult;
      std::vector<std::pair<std::size_t, bool>> order;
      for (std::size_t i : best.chosen) {
        auto key = std::make_pair(pool[i].record, pool[i].mirrored);
        if (mult[key]++ == 0) order.push_back(key);
      }
      for (const auto& key : order) {
        rep.factors.push_back({db[key.first].name, key.second, mult[key]});
        if (mult[key] > 1) rep.repeated_factor = true;
      }
      LaurentPoly one = LaurentPoly::constant(target.homfly.vars(), 1);
      if (!(best.rest == one)) rep.residual = best.rest;
      rep.status = FactorStatus::Factored;
      if (full.factor_count() < static_cast<int>(best.chosen.size()) + (best.complete ? 0 : 1)) {
        throw InconsistencyError(target.name + ": trial division found more factors than the full factorization");
      }
    } else if (full.factor_count() >= 2) {
      // Reducible, but not into database polynomials.
      rep.status = FactorStatus::Factored;
      rep.residual = target.homfly;
    } else {
      rep.status = FactorStatus::Irreducible;
    }
    if (rep.status == FactorStatus::Factored && full.factor_count() < 2) {
      throw InconsistencyError(target.name + ": trial division and full factorization disagree");
    }
    reports[t] = std::move(rep);
  });
  return reports;
}

const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = {
      {"9_12", {{"4_1", false, 1}, {"5_2", false, 1}}},
      {"11a_175", {{"3_1", false, 1}, {"8_16", false, 1}}},
      {"11a_176", {{"3_1", false, 1}, {"8_17", false, 1}}},
      {"11a_220", {{"4_1", false, 1}, {"7_5", false, 1}}},
      {"11a_306", {{"3_1", true, 1}, {"8_16", false, 1}}},
      {"12a_151", {{"5_2", false, 1}, {"7_7", true, 1}}},
      {"12a_165", {{"5_2", false, 1}, {"10_136", true, 1}}},
      {"12a_259", {{"4_1", false, 1}, {"11n_20", true, 1}}},
      {"12a_300", {{"4_1", false, 1}, {"8_14", false, 1}}},
      {"12a_471", {{"4_1", false, 1}, {"8_3", false, 1}}},
      {"12a_505", {{"3_1", true, 1}, {"9_33", false, 1}}},
      {"12a_506", {{"4_1", false, 1}, {"8_17", false, 1}}},
      {"12a_515", {{"3_1", false, 1}, {"11n_124", true, 1}}},
      {"12a_517", {{"4_1", false, 1}, {"10_150", false, 1}}},
      {"12a_535", {{"4_1", false, 1}, {"8_16", false, 1}}},
      {"12n_462", {{"4_1", false, 2}}},
      {"12n_500", {{"3_1", false, 1}, {"7_5", true, 1}}},
  };
  return rows;
}

std::vector<TableCheck> verify_table1(const std::vector<KnotRecord>& db) {
  std::map<std::string, const KnotRecord*> by_name;
  for (const auto& r : db) by_name[r.name] = &r;
  auto lookup = [&](const std::string& name) -> const LaurentPoly& {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw std::out_of_range("knot " + name + " missing from database");
    return it->second->homfly;
  };
  std::vector<TableCheck> out;
  for (const auto& row : table1_rows()) {
    const LaurentPoly& target = lookup(row.target);
    LaurentPoly product = LaurentPoly::constant(target.vars(), 1);
    for (const auto& f : row.factors) {
      const LaurentPoly& p = lookup(f.name);
      product = product * (f.mirrored ? mirror(p) : p).pow(static_cast<unsigned>(f.multiplicity));
    }
    TableCheck c{row, product == target, std::nullopt};
    if (!c.passed) c.difference = target - product;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace homfac
