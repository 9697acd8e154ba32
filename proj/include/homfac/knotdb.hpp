#pragma once

// Knot HOMFLY polynomial ingestion, convention conversion and the search for
// factorizations into other database polynomials.

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "homfac/laurent_poly.hpp"

namespace homfac {

/// Variables (v, z) of the KnotInfo convention.
const VarList& knotinfo_vars();

/// Parses a HOMFLY string in the variables v and z.
LaurentPoly parse_homfly(std::string_view s);

/// KnotInfo strings satisfy P_KI = P(1/v, -v, -z) rather than the literal
/// P(1/v, v, -z). Multiplying each term c v^m z^n by (-1)^((m-n)/2) turns
/// the former into the latter. An involution.
LaurentPoly adapt_knotinfo_signs(const LaurentPoly& p);

/// P(1/v, v, -z) for P in (x, y, z).
LaurentPoly to_knotinfo(const LaurentPoly& homogeneous);

/// The degree-0 homogeneous P with P(1/v, v, -z) = p. Throws
/// std::domain_error naming the offending term when some c v^m z^n has m + n
/// odd (no preimage, e.g. a link).
LaurentPoly convert_to_homogeneous(const LaurentPoly& p);

/// Swaps x and y.
LaurentPoly mirror(const LaurentPoly& p);

/// Crossing number from a name such as "9_12", "11a_175", "12n_462".
int crossing_number_from_name(std::string_view name);

enum class SourceConvention {
  /// Strings exactly as exported by KnotInfo; the sign adaptor is applied.
  KnotInfo,
  /// Strings already satisfying the literal relation P(1/v, v, -z).
  Literal,
};

struct KnotRecord {
  std::string name;
  /// Input in (v, z) satisfying the literal relation with `homfly`.
  LaurentPoly homfly_ki;
  /// (x, y, z), homogeneous of degree 0.
  LaurentPoly homfly;
  int crossing_number = 0;
};

/// Builds a record and checks the round-trip invariant.
KnotRecord make_record(std::string name, std::string_view homfly_text, SourceConvention convention);

/// Record-level ingestion failure; `line` is 1-based (0 when unknown).
class IngestionError : public std::runtime_error {
 public:
  IngestionError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// CSV with header `name,homfly` (extra columns ignored, fields may be
/// double-quoted). Empty input gives an empty list.
std::vector<KnotRecord> load_knots_csv(std::istream& in, SourceConvention convention);
/// JSON lines {"name": ..., "homfly": ...}.
std::vector<KnotRecord> load_knots_jsonl(std::istream& in, SourceConvention convention);
/// Chooses CSV or JSON lines from the extension (.jsonl / .json -> JSON).
std::vector<KnotRecord> load_knots_file(const std::string& path, SourceConvention convention);

/// Sort by (crossing number, a/n family, index, name).
void sort_knots(std::vector<KnotRecord>& db);

struct FactorRef {
  std::string name;
  bool mirrored = false;
  int multiplicity = 1;
};

enum class FactorStatus { Irreducible, Factored, Unit };

std::string to_string(FactorStatus s);

struct FactorReport {
  std::string name;
  FactorStatus status = FactorStatus::Irreducible;
  std::vector<FactorRef> factors;
  /// What is left after removing database factors, when that is not 1.
  std::optional<LaurentPoly> residual;
  /// Irreducible factors over Q found by the full factorizer.
  int irreducible_factor_count = 0;
  bool repeated_factor = false;
};

/// Raised when trial division and the full factorizer disagree.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// For every record: trial division by earlier-or-equal crossing-number
/// records and their mirrors, cross-checked against full factorization.
/// Reports come back sorted like the database.
std::vector<FactorReport> find_factorizations(std::vector<KnotRecord> db, int jobs = 1);

/// One row of the published factorization table.
struct TableRow {
  std::string target;
  std::vector<FactorRef> factors;
};

const std::vector<TableRow>& table1_rows();

struct TableCheck {
  TableRow row;
  bool passed = false;
  /// target - product, empty when the row passes.
  std::optional<LaurentPoly> difference;
};

/// Exact check of every row, no unit adjustment. Throws std::out_of_range
/// naming the first knot missing from db.
std::vector<TableCheck> verify_table1(const std::vector<KnotRecord>& db);

}  // namespace homfac
