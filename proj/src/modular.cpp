#include "homfac/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace homfac::modp {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP reduce(const UniPoly& f, u64 p) {
  PolyP r(f.coeffs().size());
  Integer t;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  }
  trim(r);
  return r;
}

PolyP add(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

PolyP sub(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(r);
  return r;
}

std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, u64 p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  PolyP r = a;
  if (r.size() < b.size()) return {{}, r};
  PolyP q(r.size() - b.size() + 1, 0);
  u64 inv = inv_mod(b.back(), p);
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    u64 c = r[i] * inv % p;
    if (c == 0) continue;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] = (r[shift + j] + p - c * b[j] % p) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

PolyP rem(const PolyP& a, const PolyP& b, u64 p) { return divmod(a, b, p).second; }

PolyP monic(const PolyP& a, u64 p) {
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), p);
  PolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * inv % p;
  return r;
}

PolyP gcd(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

PolyP derivative(const PolyP& a, u64 p) {
  if (a.size() <= 1) return {};
  PolyP r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

bool is_squarefree(const PolyP& a, u64 p) {
  PolyP d = derivative(a, p);
  if (d.empty()) return a.size() <= 1;
  return degree(gcd(a, d, p)) == 0;
}

PolyP powmod(const PolyP& base, const Integer& e, const PolyP& m, u64 p) {
  PolyP result{1};
  result = rem(result, m, p);
  PolyP b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

namespace {

void equal_degree_split(const PolyP& g, int d, u64 p, std::mt19937_64& rng, std::vector<PolyP>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  Integer e = (q - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  while (true) {
    PolyP a(degree(g));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    PolyP b = powmod(a, e, g, p);
    b = sub(b, PolyP{1}, p);
    PolyP h = gcd(g, b, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(monic(divmod(g, h, p).first, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyP> factor_squarefree(const PolyP& f_in, u64 p, std::mt19937_64& rng) {
  if (p == 2) throw std::invalid_argument("factor_squarefree requires an odd prime");
  std::vector<PolyP> out;
  PolyP f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  PolyP x{0, 1};
  PolyP h = x;
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    PolyP g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = monic(divmod(f, g, p).first, p);
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

namespace {

// Dense polynomials over Z/m for a prime power m, stored with Integer
// coefficients in [0, m).
using PolyM = std::vector<Integer>;

void trim_m(PolyM& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyM reduce_m(const PolyM& f, const Integer& m) {
  PolyM r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim_m(r);
  return r;
}

PolyM lift_p(const PolyP& f) {
  PolyM r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

PolyM add_m(const PolyM& a, const PolyM& b, const Integer& m) {
  PolyM r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce_m(r, m);
}

PolyM sub_m(const PolyM& a, const PolyM& b, const Integer& m) {
  PolyM r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce_m(r, m);
}

PolyM mul_m(const PolyM& a, const PolyM& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  PolyM r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return reduce_m(r, m);
}

// Division by a monic polynomial mod m.
std::pair<PolyM, PolyM> divmod_monic_m(const PolyM& a, const PolyM& b, const Integer& m) {
  PolyM r = a;
  if (r.size() < b.size()) return {{}, r};
  PolyM q(r.size() - b.size() + 1);
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    Integer c = r[i];
    if (c == 0) continue;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return {reduce_m(q, m), reduce_m(r, m)};
}

// Extended Euclid mod p: s*a + t*b = 1.
std::pair<PolyP, PolyP> xgcd_p(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    PolyP s2 = sub(s0, mul(q, s1, p), p);
    PolyP t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw std::logic_error("Hensel lifting needs coprime factors mod p");
  u64 inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  trim(s0);
  trim(t0);
  return {s0, t0};
}

PolyP product_p(const std::vector<PolyP>& fs, std::size_t lo, std::size_t hi, u64 p) {
  PolyP r{1};
  for (std::size_t i = lo; i < hi; ++i) r = mul(r, fs[i], p);
  return r;
}

// f = g*h mod pk with h monic. Lifts the pair to modulus `target`.
void lift_pair(const PolyM& f, PolyM& g, PolyM& h, PolyM s, PolyM t, u64 p, const Integer& target) {
  Integer m = static_cast<unsigned long>(p);
  while (m < target) {
    Integer m2 = m * m;
    if (m2 > target) m2 = target;
    PolyM e = sub_m(reduce_m(f, m2), mul_m(g, h, m2), m2);
    auto [q, r] = divmod_monic_m(mul_m(s, e, m2), h, m2);
    PolyM g2 = add_m(add_m(g, mul_m(t, e, m2), m2), mul_m(q, g, m2), m2);
    PolyM h2 = add_m(h, r, m2);
    PolyM b = sub_m(add_m(mul_m(s, g2, m2), mul_m(t, h2, m2), m2), PolyM{Integer(1)}, m2);
    auto [c, d] = divmod_monic_m(mul_m(s, b, m2), h2, m2);
    s = sub_m(s, d, m2);
    t = sub_m(sub_m(t, mul_m(t, b, m2), m2), mul_m(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
}

void lift_tree(const PolyM& f, const std::vector<PolyP>& fs, std::size_t lo, std::size_t hi, u64 p,
               const Integer& target, std::vector<UniPoly>& out) {
  if (hi - lo == 1) {
    // f == lc * factor; make monic mod target.
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), target.get_mpz_t()) == 0) {
      throw std::logic_error("leading coefficient not invertible mod p^k");
    }
    PolyM r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * inv;
    out.emplace_back(reduce_m(r, target));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  u64 lcp = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  PolyP gp = mul(PolyP{lcp}, product_p(fs, lo, mid, p), p);
  PolyP hp = product_p(fs, mid, hi, p);
  auto [sp, tp] = xgcd_p(gp, hp, p);
  PolyM g = lift_p(gp);
  PolyM h = lift_p(hp);
  lift_pair(f, g, h, lift_p(sp), lift_p(tp), p, target);
  lift_tree(g, fs, lo, mid, p, target, out);
  lift_tree(h, fs, mid, hi, p, target, out);
}

}  // namespace

std::vector<UniPoly> hensel_lift(const UniPoly& f, const std::vector<PolyP>& factors, u64 p, unsigned k) {
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), p, k);
  std::vector<UniPoly> out;
  if (factors.empty()) return out;
  PolyM fm = reduce_m(f.coeffs(), target);
  lift_tree(fm, factors, 0, factors.size(), p, target, out);
  return out;
}

}  // namespace homfac::modp
