#include "homfac/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homfac {

VarList make_vars(std::vector<std::string> names) {
  if (names.empty()) {
    throw std::invalid_argument("a Laurent polynomial needs at least one variable");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Monomial Monomial::inverse() const {
  Monomial r{sign, exponents};
  for (auto& e : r.exponents) e = checked_mul(e, -1);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exponents.size() != b.exponents.size()) {
    throw std::invalid_argument("monomial length mismatch");
  }
  Monomial r{a.sign * b.sign, a.exponents};
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    r.exponents[i] = checked_add(r.exponents[i], b.exponents[i]);
  }
  return r;
}

LaurentPoly::LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

LaurentPoly::LaurentPoly(std::vector<std::string> names) : vars_(make_vars(std::move(names))) {}

LaurentPoly::LaurentPoly(VarList vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != num_variables()) {
      throw std::invalid_argument("exponent vector length does not match variable count");
    }
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

LaurentPoly LaurentPoly::constant(VarList vars, const Integer& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponents(p.num_variables(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarList vars, std::string_view name, int power) {
  LaurentPoly p(std::move(vars));
  int idx = p.index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  Exponents e(p.num_variables(), 0);
  e[idx] = power;
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::term(VarList vars, Exponents e, const Integer& c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.num_variables()) throw std::invalid_argument("exponent vector length mismatch");
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_monomial(VarList vars, const Monomial& m) {
  return term(std::move(vars), m.exponents, Integer(m.sign));
}

const std::vector<std::string>& LaurentPoly::variables() const {
  static const std::vector<std::string> kNone;
  return vars_ ? *vars_ : kNone;
}

int LaurentPoly::index_of(std::string_view name) const {
  const auto& v = variables();
  auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

bool LaurentPoly::same_variables(const LaurentPoly& other) const {
  return vars_ == other.vars_ || variables() == other.variables();
}

void LaurentPoly::require_compatible(const LaurentPoly& g) const {
  if (!same_variables(g)) {
    throw std::invalid_argument("variable lists differ");
  }
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

std::optional<Monomial> LaurentPoly::as_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (c == 1) return Monomial{1, e};
  if (c == -1) return Monomial{-1, e};
  return std::nullopt;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const Exponents, Integer>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.begin();
}

int LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int LaurentPoly::max_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  if (!vars_) vars_ = g.vars_;
  require_compatible(g);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  if (!vars_) vars_ = g.vars_;
  require_compatible(g);
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) {
  *this = *this * g;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  f.require_compatible(g);
  LaurentPoly r(f.vars_ ? f.vars_ : g.vars_);
  const std::size_t n = r.num_variables();
  Exponents e(n);
  Integer prod;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = checked_add(ef[i], eg[i]);
      mpz_mul(prod.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
      r.add_term(e, prod);
    }
  }
  return r;
}

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
  return f.same_variables(g) && f.terms_ == g.terms_;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return LaurentPoly(vars_);
  LaurentPoly r = *this;
  for (auto& [e, k] : r.terms_) k *= c;
  return r;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
  if (m.exponents.size() != num_variables()) throw std::invalid_argument("monomial length mismatch");
  LaurentPoly r(vars_);
  Exponents e(num_variables());
  for (const auto& [ef, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ef[i], m.exponents[i]);
    r.terms_.emplace(e, m.sign > 0 ? c : Integer(-c));
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& names = variables();
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (c < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    first = false;
    bool wrote = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (mag != 1 || is_const) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (e[i] != 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly substitute_monomials(const LaurentPoly& f, std::span<const Monomial> images,
                                 const VarList& target) {
  if (images.size() != f.num_variables()) {
    throw std::invalid_argument("one image per source variable is required");
  }
  const std::size_t m = target->size();
  for (const auto& img : images) {
    if (img.exponents.size() != m) throw std::invalid_argument("image length does not match target variables");
    if (img.sign != 1 && img.sign != -1) throw std::invalid_argument("image is not a unit");
  }
  LaurentPoly::TermMap out;
  Exponents e(m);
  for (const auto& [src, c] : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        e[j] = checked_add(e[j], checked_mul(images[i].exponents[j], src[i]));
      }
      if (images[i].sign < 0 && (src[i] % 2 != 0)) sign = -sign;
    }
    Integer v = sign > 0 ? c : Integer(-c);
    auto [it, inserted] = out.try_emplace(e, v);
    if (!inserted) it->second += v;
  }
  return LaurentPoly(target, std::move(out));
}

LaurentPoly substitute_monomials(const LaurentPoly& f, std::span<const LaurentPoly> images) {
  if (images.empty()) throw std::invalid_argument("no images given");
  std::vector<Monomial> units;
  units.reserve(images.size());
  for (const auto& img : images) {
    auto u = img.as_unit();
    if (!u) throw std::invalid_argument("image '" + img.to_string() + "' is not a unit");
    if (!img.same_variables(images.front())) throw std::invalid_argument("images use different variable lists");
    units.push_back(*u);
  }
  return substitute_monomials(f, units, images.front().vars());
}

UnitSplit unit_normalize(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  const std::size_t n = f.num_variables();
  Monomial unit{1, Exponents(n)};
  for (std::size_t i = 0; i < n; ++i) unit.exponents[i] = f.min_degree(i);
  if (f.leading_term().second < 0) unit.sign = -1;
  return {f.times_monomial(unit.inverse()), unit};
}

namespace {

bool exponents_ge(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

// Exact division of ordinary polynomials by lex-leading-term reduction.
std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& f, const LaurentPoly& g) {
  const std::size_t n = f.num_variables();
  std::vector<int> qmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    qmax[i] = f.max_degree(i) - g.max_degree(i);
    if (qmax[i] < 0) return std::nullopt;
  }
  LaurentPoly rem = f;
  LaurentPoly quot(f.vars());
  const auto& [eg, cg] = g.leading_term();
  Exponents eq(n);
  Integer q, r;
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading_term();
    if (!exponents_ge(er, eg)) return std::nullopt;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cr.get_mpz_t(), cg.get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
      eq[i] = er[i] - eg[i];
      if (eq[i] > qmax[i]) return std::nullopt;
    }
    quot.add_term(eq, q);
    Integer qc = q;
    Exponents ee(n);
    for (const auto& [e, c] : g.terms()) {
      for (std::size_t i = 0; i < n; ++i) ee[i] = e[i] + eq[i];
      rem.add_term(ee, -qc * c);
    }
  }
  return quot;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (!f.same_variables(g)) throw std::invalid_argument("variable lists differ");
  if (f.is_zero()) return LaurentPoly(f.vars());
  auto [f0, uf] = unit_normalize(f);
  auto [g0, ug] = unit_normalize(g);
  auto q0 = divide_polynomial(f0, g0);
  if (!q0) return std::nullopt;
  return q0->times_monomial(uf * ug.inverse());
}

bool is_homogeneous_of_degree(const LaurentPoly& f, int d) {
  for (const auto& [e, c] : f.terms()) {
    long long s = 0;
    for (int k : e) s += k;
    if (s != d) return false;
  }
  return true;
}

Rational evaluate(const LaurentPoly& f, std::span<const Rational> point) {
  if (point.size() != f.num_variables()) throw std::invalid_argument("point dimension mismatch");
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) {
        if (e[i] < 0) throw std::domain_error("pole at " + f.variables()[i] + " = 0");
        t = 0;
        break;
      }
      Rational base = point[i];
      Integer num, den;
      unsigned long k = static_cast<unsigned long>(e[i] < 0 ? -static_cast<long>(e[i]) : e[i]);
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
      Rational pw = e[i] > 0 ? Rational(num, den) : Rational(den, num);
      pw.canonicalize();
      t *= pw;
    }
    total += t;
  }
  return total;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

}  // namespace homfac
