#include "homfac/uni_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "homfac/modular.hpp"

namespace homfac {

UniPoly::UniPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly(std::vector<Integer>{c}); }

UniPoly UniPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer UniPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

UniPoly& UniPoly::operator+=(const UniPoly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Integer> r(f.c_.size() + g.c_.size() - 1);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] == 0) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), f.c_[i].get_mpz_t(), g.c_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Integer& k) const {
  std::vector<Integer> r(c_);
  for (auto& c : r) c *= k;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::divided_by(const Integer& k) const {
  std::vector<Integer> r(c_);
  for (auto& c : r) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) throw std::domain_error("inexact coefficient division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Integer UniPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lc() < 0) g = -g;
  return divided_by(g);
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
  return acc;
}

Integer UniPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::taylor_shift(const Integer& a) const {
  std::vector<Integer> r(c_);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) r[j] += a * r[j + 1];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::compose_one_minus_x() const {
  // p(1 - x) = q(-x) with q(x) = p(x + 1).
  UniPoly q = taylor_shift(1);
  std::vector<Integer> r(q.c_);
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return UniPoly(std::move(r));
}

int UniPoly::trailing_zeros() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return k;
}

UniPoly UniPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return UniPoly(std::vector<Integer>(c_.begin() + k, c_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::pair<UniPoly, UniPoly> pseudo_divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("pseudo-division by zero");
  if (f.degree() < g.degree()) return {UniPoly{}, f};
  const int dg = g.degree();
  std::vector<Integer> r(f.coeffs());
  std::vector<Integer> q(f.degree() - dg + 1);
  const Integer& b = g.lc();
  for (int i = f.degree(); i >= dg; --i) {
    // r <- b*r - r[i] x^(i-dg) g ; q <- b*q + r[i] x^(i-dg)
    Integer lead = r[i];
    for (auto& c : q) c *= b;
    q[i - dg] += lead;
    for (auto& c : r) c *= b;
    for (int j = 0; j <= dg; ++j) mpz_submul(r[i - dg + j].get_mpz_t(), lead.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

std::optional<UniPoly> divide_exact(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) return UniPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  const int dg = g.degree();
  std::vector<Integer> r(f.coeffs());
  std::vector<Integer> q(f.degree() - dg + 1);
  const Integer& b = g.lc();
  for (int i = f.degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), b.get_mpz_t());
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  for (int i = 0; i < dg; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return UniPoly(std::move(q));
}

namespace {

// Upper bound on deg gcd(f, g) from one prime not dividing either leading
// coefficient.
int modular_gcd_degree_bound(const UniPoly& f, const UniPoly& g) {
  modp::u64 p = 1000003;
  for (int tries = 0; tries < 8; ++tries, p = modp::next_prime(p)) {
    if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(g.lc().get_mpz_t(), p) == 0) continue;
    return modp::degree(modp::gcd(modp::reduce(f, p), modp::reduce(g, p), p));
  }
  return std::min(f.degree(), g.degree());
}

}  // namespace

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) return g.is_zero() || g.lc() > 0 ? g : -g;
  if (g.is_zero()) return f.lc() > 0 ? f : -f;
  Integer c;
  mpz_gcd(c.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
  UniPoly a = f.primitive_part();
  UniPoly b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0 || modular_gcd_degree_bound(a, b) == 0) return UniPoly::constant(c);
  while (!b.is_zero()) {
    UniPoly r = pseudo_divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part().scaled(c);
}

Integer norm2_squared(const UniPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  return s;
}

}  // namespace homfac
