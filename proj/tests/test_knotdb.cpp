#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "homfac/factorization.hpp"
#include "homfac/jaeger.hpp"
#include "homfac/knotdb.hpp"

using namespace homfac;

namespace {

LaurentPoly H(const std::string& s) { return parse_laurent(s, homfly_vars()); }

const char* kLeftTrefoil = "z^2*y^-2 - 2*x*y^-1 - x^2*y^-2";

// Converted with an independent script that solves P_KI = P(1/v, -v, -z)
// term by term.
const std::vector<std::pair<const char*, const char*>> kFrozenHomogeneous = {
    {"3_1", "-2*y*x^-1 - y^2*x^-2 + z^2*x^-2"},
    {"4_1", "-x*y^-1 - 1 - y*x^-1 + z^2*x^-1*y^-1"},
    {"5_2", "-y*x^-1 + y^2*x^-2 + z^2*x^-2 + y^3*x^-3 - y*z^2*x^-3"},
    {"9_12", "1 - z^2*x^-1*y^-1 - y^2*x^-2 - z^2*x^-2 - 2*y^3*x^-3 + y*z^2*x^-3 + z^4*x^-3*y^-1 - y^4*x^-4 + "
             "2*y^2*z^2*x^-4 - z^4*x^-4"},
};

const std::vector<KnotRecord>& fixture() {
  static const std::vector<KnotRecord> db = load_knots_file(HOMFAC_FIXTURE, SourceConvention::KnotInfo);
  return db;
}

const KnotRecord& knot(const std::string& name) {
  for (const auto& r : fixture()) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(name);
}

std::vector<KnotRecord> subset(std::initializer_list<const char*> names) {
  std::vector<KnotRecord> db;
  for (const char* n : names) db.push_back(knot(n));
  return db;
}

const FactorReport& report_for(const std::vector<FactorReport>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(name);
}

LaurentPoly product(const std::vector<KnotRecord>& db, const std::vector<FactorRef>& fs) {
  LaurentPoly p = LaurentPoly::constant(homfly_vars(), 1);
  for (const auto& f : fs) {
    auto it = std::find_if(db.begin(), db.end(), [&](const KnotRecord& r) { return r.name == f.name; });
    REQUIRE(it != db.end());
    p = p * (f.mirrored ? mirror(it->homfly) : it->homfly).pow(f.multiplicity);
  }
  return p;
}

}  // namespace

TEST_CASE("parse_homfly") {
  const VarList& vz = knotinfo_vars();
  CHECK(parse_homfly("1") == LaurentPoly::constant(vz, 1));
  LaurentPoly p = parse_homfly("z^2*v^-2-2*v^-2-v^-4");
  CHECK(p.coefficient({-2, 2}) == 1);
  CHECK(p.coefficient({-2, 0}) == -2);
  CHECK(p.coefficient({-4, 0}) == -1);
  CHECK(p.size() == 3);
  CHECK_NOTHROW(parse_homfly("v^2 - v + 1"));
  CHECK_THROWS_AS(parse_homfly("v + x"), ParseError);
  CHECK(parse_homfly(p.to_string()) == p);
}

TEST_CASE("convert_to_homogeneous") {
  LaurentPoly left = convert_to_homogeneous(parse_homfly("z^2*v^-2-2*v^-2-v^-4"));
  CHECK(left == H(kLeftTrefoil));
  CHECK(convert_to_homogeneous(parse_homfly("1")) == H("1"));
  try {
    convert_to_homogeneous(parse_homfly("v^2 - v + 1"));
    FAIL("expected parity error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("v^1*z^0") != std::string::npos);
  }
}

TEST_CASE("convert_to_homogeneous inverts the substitution on random input") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> e(-4, 4), c(-6, 6);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p(homfly_vars());
    for (int k = 0; k < 6; ++k) {
      int a = e(rng), b = e(rng);
      p.add_term({a, b, -a - b}, c(rng));
    }
    CHECK(convert_to_homogeneous(to_knotinfo(p)) == p);
  }
}

TEST_CASE("mirror") {
  CHECK(mirror(knot("3_1").homfly) == H(kLeftTrefoil));
  CHECK(mirror(knot("4_1").homfly) == knot("4_1").homfly);
  for (const auto& r : fixture()) CHECK(mirror(mirror(r.homfly)) == r.homfly);
}

TEST_CASE("sign adaptor is an involution and matches frozen conversions") {
  for (const auto& r : fixture()) {
    CHECK(adapt_knotinfo_signs(adapt_knotinfo_signs(r.homfly_ki)) == r.homfly_ki);
  }
  for (auto [name, want] : kFrozenHomogeneous) {
    CAPTURE(name);
    CHECK(knot(name).homfly == H(want));
  }
}

TEST_CASE("fixture records satisfy the round-trip invariant") {
  CHECK(fixture().size() == 104);
  for (const auto& r : fixture()) {
    CAPTURE(r.name);
    CHECK(to_knotinfo(r.homfly) == r.homfly_ki);
    CHECK(is_homogeneous_of_degree(r.homfly, 0));
    CHECK(r.crossing_number == crossing_number_from_name(r.name));
  }
}

TEST_CASE("crossing_number_from_name") {
  CHECK(crossing_number_from_name("9_12") == 9);
  CHECK(crossing_number_from_name("11a_175") == 11);
  CHECK(crossing_number_from_name("12n_462") == 12);
  CHECK_THROWS(crossing_number_from_name("trefoil"));
}

TEST_CASE("load_knots_csv") {
  std::istringstream in("name,extra,homfly\n3_1,x,\"v^2*z^2 - v^4 + 2*v^2\"\n0_1,y,\n");
  auto db = load_knots_csv(in, SourceConvention::KnotInfo);
  REQUIRE(db.size() == 2);
  CHECK(db[0].homfly == knot("3_1").homfly);
  CHECK(db[1].homfly == H("1"));

  std::istringstream empty("");
  CHECK(load_knots_csv(empty, SourceConvention::KnotInfo).empty());

  std::istringstream bad("name,homfly\n3_1,v^2\n4_1,v + w\n");
  try {
    load_knots_csv(bad, SourceConvention::KnotInfo);
    FAIL("expected IngestionError");
  } catch (const IngestionError& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream no_col("name,poly\n3_1,1\n");
  CHECK_THROWS_AS(load_knots_csv(no_col, SourceConvention::KnotInfo), IngestionError);
}

TEST_CASE("load_knots_jsonl") {
  std::istringstream in("{\"name\": \"3_1\", \"homfly\": \"v^2*z^2 - v^4 + 2*v^2\"}\n\n{\"name\": \"4_1\", "
                        "\"homfly\": \"-z^2 + v^2 - 1 + v^-2\"}\n");
  auto db = load_knots_jsonl(in, SourceConvention::KnotInfo);
  REQUIRE(db.size() == 2);
  CHECK(db[1].homfly == knot("4_1").homfly);
  std::istringstream bad("{\"name\": 3}\n");
  CHECK_THROWS_AS(load_knots_jsonl(bad, SourceConvention::KnotInfo), IngestionError);
}

TEST_CASE("literal convention skips the adaptor") {
  auto r = make_record("3_1", "z^2*v^-2-2*v^-2-v^-4", SourceConvention::Literal);
  CHECK(r.homfly == H(kLeftTrefoil));
}

TEST_CASE("find_factorizations examples") {
  auto rs = find_factorizations(subset({"4_1", "5_2", "9_12"}));
  const auto& r912 = report_for(rs, "9_12");
  CHECK(r912.status == FactorStatus::Factored);
  REQUIRE(r912.factors.size() == 2);
  CHECK(r912.factors[0].name == "4_1");
  CHECK(r912.factors[1].name == "5_2");
  CHECK_FALSE(r912.residual.has_value());
  CHECK(report_for(rs, "4_1").status == FactorStatus::Irreducible);

  rs = find_factorizations(subset({"3_1", "8_16", "11a_306"}));
  const auto& r306 = report_for(rs, "11a_306");
  REQUIRE(r306.factors.size() == 2);
  CHECK(r306.factors[0].name == "3_1");
  CHECK(r306.factors[0].mirrored);
  CHECK(r306.factors[1].name == "8_16");
  CHECK_FALSE(r306.factors[1].mirrored);

  rs = find_factorizations(subset({"4_1", "12n_462"}));
  const auto& r462 = report_for(rs, "12n_462");
  REQUIRE(r462.factors.size() == 1);
  CHECK(r462.factors[0].name == "4_1");
  CHECK(r462.factors[0].multiplicity == 2);
  CHECK(r462.repeated_factor);
  CHECK(r462.irreducible_factor_count == 2);
}

TEST_CASE("a reducible polynomial with no database factors keeps a residual") {
  auto rs = find_factorizations(subset({"9_12"}));
  const auto& r = rs.at(0);
  CHECK(r.status == FactorStatus::Factored);
  CHECK(r.factors.empty());
  REQUIRE(r.residual.has_value());
  CHECK(r.irreducible_factor_count == 2);
}

TEST_CASE("the unknot is a unit") {
  std::vector<KnotRecord> db{make_record("0_1", "", SourceConvention::KnotInfo), knot("3_1")};
  auto rs = find_factorizations(db);
  CHECK(report_for(rs, "0_1").status == FactorStatus::Unit);
  CHECK(report_for(rs, "3_1").status == FactorStatus::Irreducible);
}

TEST_CASE("reports are stable under reordering and multiply back exactly") {
  std::vector<KnotRecord> db = fixture();
  std::erase_if(db, [](const KnotRecord& r) { return r.crossing_number > 10; });
  auto a = find_factorizations(db);
  std::mt19937_64 rng(3);
  std::shuffle(db.begin(), db.end(), rng);
  auto b = find_factorizations(db, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].factors.size() == b[i].factors.size());
  }
  for (const auto& r : a) {
    if (r.status != FactorStatus::Factored || r.residual) continue;
    CHECK(product(db, r.factors) == knot(r.name).homfly);
  }
}

TEST_CASE("verify_table1") {
  auto checks = verify_table1(fixture());
  REQUIRE(checks.size() == 17);
  for (const auto& c : checks) {
    CAPTURE(c.row.target);
    CHECK(c.passed);
  }

  std::vector<KnotRecord> missing = fixture();
  std::erase_if(missing, [](const KnotRecord& r) { return r.name == "5_2"; });
  try {
    verify_table1(missing);
    FAIL("expected out_of_range");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("5_2") != std::string::npos);
  }

  std::vector<KnotRecord> corrupt = fixture();
  for (auto& r : corrupt) {
    if (r.name == "9_12") r.homfly = r.homfly + H("x*y^-1");
  }
  auto bad = verify_table1(corrupt);
  CHECK_FALSE(bad[0].passed);
  REQUIRE(bad[0].difference.has_value());
  CHECK(*bad[0].difference == H("x*y^-1"));
  for (std::size_t i = 1; i < bad.size(); ++i) CHECK(bad[i].passed);
}
