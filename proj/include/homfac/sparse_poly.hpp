#pragma once

// Ordinary (non-negative exponent) sparse polynomials in a fixed number of
// variables. BivarPoly carries Tutte polynomials and bivariate factorization
// workloads.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "homfac/integer.hpp"

namespace homfac {

template <std::size_t N>
class SparsePoly {
 public:
  using Exp = std::array<int, N>;
  using TermMap = std::map<Exp, Integer, std::greater<Exp>>;

  SparsePoly() = default;
  explicit SparsePoly(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      for (int e : it->first) {
        if (e < 0) throw std::invalid_argument("negative exponent in ordinary polynomial");
      }
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
  }

  static SparsePoly constant(const Integer& c) { return term(Exp{}, c); }
  static SparsePoly term(const Exp& e, const Integer& c) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }
  static SparsePoly variable(std::size_t i, int power = 1) {
    Exp e{};
    e[i] = power;
    return term(e, 1);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{}); }

  Integer coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  const std::pair<const Exp, Integer>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return *terms_.begin();
  }

  int degree(std::size_t i) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return terms_.empty() ? -1 : d;
  }

  int min_degree(std::size_t i) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Exp& e, const Integer& c) {
    if (c == 0) return;
    for (int k : e) {
      if (k < 0) throw std::invalid_argument("negative exponent in ordinary polynomial");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
  friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
  friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly r;
    Exp e;
    Integer prod;
    for (const auto& [ef, cf] : f.terms_) {
      for (const auto& [eg, cg] : g.terms_) {
        for (std::size_t i = 0; i < N; ++i) e[i] = checked_add(ef[i], eg[i]);
        mpz_mul(prod.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
        r.add_term(e, prod);
      }
    }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& g) { return *this = *this * g; }
  friend bool operator==(const SparsePoly& f, const SparsePoly& g) { return f.terms_ == g.terms_; }

  SparsePoly scaled(const Integer& k) const {
    if (k == 0) return {};
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
  }

  SparsePoly times_monomial(const Exp& m) const {
    SparsePoly r;
    Exp e;
    for (const auto& [ef, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) e[i] = checked_add(ef[i], m[i]);
      r.terms_.emplace(e, c);
    }
    return r;
  }

  SparsePoly pow(unsigned n) const {
    SparsePoly result = constant(1);
    SparsePoly base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  /// Content removed, leading coefficient positive.
  SparsePoly primitive_part() const {
    if (terms_.empty()) return {};
    Integer g = content();
    if (leading_term().second < 0) g = -g;
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
  }

  /// Largest monomial dividing every term.
  Exp monomial_content() const {
    Exp m{};
    if (terms_.empty()) return m;
    for (std::size_t i = 0; i < N; ++i) m[i] = min_degree(i);
    return m;
  }

  SparsePoly divided_by_monomial(const Exp& m) const {
    SparsePoly r;
    Exp e;
    for (const auto& [ef, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) {
        e[i] = ef[i] - m[i];
        if (e[i] < 0) throw std::domain_error("monomial does not divide polynomial");
      }
      r.terms_.emplace(e, c);
    }
    return r;
  }

  /// q with *this == q * g in the polynomial ring, if it exists.
  std::optional<SparsePoly> divide_exact(const SparsePoly& g) const {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return SparsePoly{};
    Exp qmax;
    for (std::size_t i = 0; i < N; ++i) {
      qmax[i] = degree(i) - g.degree(i);
      if (qmax[i] < 0) return std::nullopt;
    }
    SparsePoly rem = *this;
    SparsePoly quot;
    const auto& [eg, cg] = g.leading_term();
    Exp eq, ee;
    Integer q, r;
    while (!rem.is_zero()) {
      const auto& [er, cr] = rem.leading_term();
      for (std::size_t i = 0; i < N; ++i) {
        eq[i] = er[i] - eg[i];
        if (eq[i] < 0 || eq[i] > qmax[i]) return std::nullopt;
      }
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cr.get_mpz_t(), cg.get_mpz_t());
      if (r != 0) return std::nullopt;
      quot.terms_.emplace(eq, q);
      Integer qc = q;
      for (const auto& [e, c] : g.terms_) {
        for (std::size_t i = 0; i < N; ++i) ee[i] = e[i] + eq[i];
        rem.add_term(ee, -qc * c);
      }
    }
    return quot;
  }

  template <class Value>
  Value evaluate(const std::array<Value, N>& point) const {
    Value total = 0;
    for (const auto& [e, c] : terms_) {
      Value t = Value(c);
      for (std::size_t i = 0; i < N; ++i) {
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      }
      total += t;
    }
    return total;
  }

  std::string to_string(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = abs(c);
      if (c < 0) {
        out << (first ? "-" : " - ");
      } else if (!first) {
        out << " + ";
      }
      first = false;
      bool wrote = false;
      if (mag != 1 || e == Exp{}) {
        out << mag.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (wrote) out << '*';
        out << names[i];
        if (e[i] != 1) out << '^' << e[i];
        wrote = true;
      }
    }
    return out.str();
  }

 private:
  TermMap terms_;
};

using BivarPoly = SparsePoly<2>;

inline std::string to_string(const BivarPoly& p) { return p.to_string({"x", "y"}); }

}  // namespace homfac
