#include "homfac/factorization.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "homfac/modular.hpp"

namespace homfac {

BinaryForm BinaryForm::homogenize(const UniPoly& f, int degree) {
  if (f.degree() > degree) throw std::invalid_argument("degree too small to homogenize");
  BinaryForm b{degree, std::vector<Integer>(degree + 1)};
  for (int i = 0; i <= f.degree(); ++i) b.coeffs[i] = f.coeffs()[i];
  return b;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

int BinaryForm::x1_multiplicity() const {
  for (int i = degree; i >= 0; --i) {
    if (i < static_cast<int>(coeffs.size()) && coeffs[i] != 0) return degree - i;
  }
  return degree + 1;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(coeffs); }

namespace {

bool uni_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (int i = a.degree(); i >= 0; --i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

bool bivar_less(const BivarPoly& a, const BivarPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.size() < b.size();
}

template <class Poly, class Less>
void sort_and_merge(std::vector<std::pair<Poly, int>>& fs, Less less) {
  std::sort(fs.begin(), fs.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& f : fs) {
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(std::move(f));
    }
  }
  fs = std::move(merged);
}

Integer symmetric_mod(const Integer& c, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

UniPoly symmetric_product(const std::vector<UniPoly>& fs, const std::vector<std::size_t>& idx, const Integer& lead,
                          const Integer& m) {
  std::vector<Integer> acc{lead};
  for (std::size_t i : idx) {
    const auto& g = fs[i].coeffs();
    std::vector<Integer> next(acc.size() + g.size() - 1);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        mpz_addmul(next[a + b].get_mpz_t(), acc[a].get_mpz_t(), g[b].get_mpz_t());
      }
    }
    for (auto& c : next) c = symmetric_mod(c, m);
    acc = std::move(next);
  }
  return UniPoly(std::move(acc));
}

// Visits index subsets of {0..n-1} of size k in lexicographic order until
// the visitor returns true.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

UniPoly expand(const UniFactorization& f) {
  UniPoly r = UniPoly::constant(f.unit);
  for (const auto& [p, m] : f.factors) r = r * p.pow(static_cast<unsigned>(m));
  return r;
}

BivarPoly expand(const BivarFactorization& f) {
  BivarPoly r = BivarPoly::constant(f.unit);
  for (const auto& [p, m] : f.factors) r = r * p.pow(static_cast<unsigned>(m));
  return r;
}

UniFactorization squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  UniFactorization out;
  UniPoly g = f.primitive_part();
  out.unit = f.content() * (f.lc() < 0 ? -1 : 1);
  if (g.degree() == 0) return out;
  // Yun's algorithm; every division below is exact over Z because the
  // divisors are primitive.
  UniPoly a0 = gcd(g, g.derivative());
  UniPoly b = *divide_exact(g, a0);
  UniPoly c = *divide_exact(g.derivative(), a0);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    UniPoly b_next = *divide_exact(b, a);
    UniPoly c_next = *divide_exact(d, a);
    d = c_next - b_next.derivative();
    if (a.degree() > 0) out.factors.emplace_back(a, i);
    b = std::move(b_next);
    ++i;
  }
  return out;
}

bool is_square_over_C(const UniPoly& f) {
  if (f.degree() <= 0) return true;
  auto sqf = squarefree_decomposition(f);
  return std::all_of(sqf.factors.begin(), sqf.factors.end(), [](const auto& p) { return p.second % 2 == 0; });
}

bool is_square_form(const BinaryForm& form) {
  if (form.is_zero()) return true;
  if (form.degree % 2 != 0) return false;
  if (form.x1_multiplicity() % 2 != 0) return false;
  return is_square_over_C(form.dehomogenize());
}

namespace detail {

std::vector<UniPoly> zassenhaus(const UniPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  // Pick, among the first few admissible primes, the one giving the fewest
  // modular factors.
  std::mt19937_64 rng(0x5eed);
  modp::u64 best_p = 0;
  std::vector<modp::PolyP> best;
  int admissible = 0;
  for (modp::u64 p = 3; admissible < 5; p = modp::next_prime(p)) {
    if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0) continue;
    modp::PolyP fp = modp::reduce(f, p);
    if (!modp::is_squarefree(fp, p)) continue;
    ++admissible;
    auto fs = modp::factor_squarefree(fp, p, rng);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};

  // Coefficient bound for factors (Landau-Mignotte), times lc for the
  // scaled candidates.
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2_squared(f).get_mpz_t());
  norm += 1;
  Integer bound = abs(f.lc()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;
  unsigned k = 1;
  Integer m = static_cast<unsigned long>(best_p);
  while (m <= bound) {
    m *= static_cast<unsigned long>(best_p);
    ++k;
  }
  std::vector<UniPoly> lifted = modp::hensel_lift(f, best, best_p, k);

  std::vector<UniPoly> found;
  UniPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    std::vector<std::size_t> hit;
    Integer lead = rest.lc();
    Integer tail = lead * rest[0];
    bool ok = for_each_subset(lifted.size(), s, [&](const std::vector<std::size_t>& idx) {
      Integer t = lead;
      for (std::size_t i : idx) t = symmetric_mod(t * lifted[i][0], m);
      if (t == 0 || !mpz_divisible_p(tail.get_mpz_t(), t.get_mpz_t())) return false;
      UniPoly cand = symmetric_product(lifted, idx, lead, m).primitive_part();
      if (cand.degree() < 1) return false;
      auto q = divide_exact(rest, cand);
      if (!q) return false;
      found.push_back(cand);
      rest = *q;
      hit = idx;
      return true;
    });
    if (!ok) {
      ++s;
      continue;
    }
    for (std::size_t j = hit.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(hit[j]));
  }
  if (rest.degree() > 0) found.push_back(rest.primitive_part());
  return found;
}

}  // namespace detail

UniFactorization factor_univariate(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  UniFactorization out;
  out.unit = f.content() * (f.lc() < 0 ? -1 : 1);
  UniPoly g = f.primitive_part();
  int k = g.trailing_zeros();
  if (k > 0) {
    out.factors.emplace_back(UniPoly{0, 1}, k);
    g = g.shift_down(k);
  }
  if (g.degree() > 0) {
    auto sqf = squarefree_decomposition(g);
    for (const auto& [part, mult] : sqf.factors) {
      for (auto& h : detail::zassenhaus(part)) out.factors.emplace_back(std::move(h), mult);
    }
  }
  sort_and_merge(out.factors, uni_less);
  return out;
}

namespace {

UniPoly kronecker_pack(const BivarPoly& f, int base) {
  int deg = 0;
  for (const auto& [e, c] : f.terms()) deg = std::max(deg, e[0] + base * e[1]);
  std::vector<Integer> v(deg + 1);
  for (const auto& [e, c] : f.terms()) v[e[0] + base * e[1]] += c;
  return UniPoly(std::move(v));
}

BivarPoly kronecker_unpack(const UniPoly& u, int base) {
  BivarPoly r;
  for (int i = 0; i <= u.degree(); ++i) {
    if (u.coeffs()[i] != 0) r.add_term({i % base, i / base}, u.coeffs()[i]);
  }
  return r;
}

}  // namespace

BivarFactorization kronecker_factor(const BivarPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  BivarFactorization out;
  out.unit = f.content() * (f.leading_term().second < 0 ? -1 : 1);
  BivarPoly g = f.primitive_part();
  auto mono = g.monomial_content();
  if (mono[0] > 0) out.factors.emplace_back(BivarPoly::variable(0), mono[0]);
  if (mono[1] > 0) out.factors.emplace_back(BivarPoly::variable(1), mono[1]);
  g = g.divided_by_monomial(mono);
  if (g.is_constant()) {
    sort_and_merge(out.factors, bivar_less);
    return out;
  }

  const int base = g.degree(0) + 1;
  auto image = factor_univariate(kronecker_pack(g, base));
  std::vector<UniPoly> pool;
  for (const auto& [h, m] : image.factors) {
    for (int j = 0; j < m; ++j) pool.push_back(h);
  }

  BivarPoly rest = g;
  std::size_t s = 1;
  while (2 * s <= pool.size() && !rest.is_constant()) {
    std::vector<std::size_t> hit;
    BivarPoly factor;
    bool ok = for_each_subset(pool.size(), s, [&](const std::vector<std::size_t>& idx) {
      UniPoly prod = UniPoly::constant(1);
      for (std::size_t i : idx) prod = prod * pool[i];
      BivarPoly cand = kronecker_unpack(prod, base).primitive_part();
      if (cand.is_constant() || cand.degree(0) > rest.degree(0) || cand.degree(1) > rest.degree(1)) return false;
      auto q = rest.divide_exact(cand);
      if (!q) return false;
      factor = cand;
      rest = *q;
      hit = idx;
      return true;
    });
    if (!ok) {
      ++s;
      continue;
    }
    std::vector<UniPoly> members;
    for (std::size_t i : hit) members.push_back(pool[i]);
    for (std::size_t j = hit.size(); j-- > 0;) pool.erase(pool.begin() + static_cast<long>(hit[j]));
    int mult = 1;
    while (auto q = rest.divide_exact(factor)) {
      rest = *q;
      ++mult;
      for (const auto& mem : members) {
        auto it = std::find(pool.begin(), pool.end(), mem);
        if (it == pool.end()) throw std::logic_error("Kronecker recombination lost track of a factor");
        pool.erase(it);
      }
    }
    out.factors.emplace_back(factor, mult);
  }
  if (!rest.is_constant()) {
    if (rest.leading_term().second < 0) {
      rest = -rest;
      out.unit = -out.unit;
    }
    out.factors.emplace_back(rest, 1);
  } else if (rest.coefficient({0, 0}) == -1) {
    out.unit = -out.unit;
  }
  sort_and_merge(out.factors, bivar_less);
  return out;
}

std::pair<Monomial, BivarPoly> dehomogenize_last(const LaurentPoly& f) {
  if (f.num_variables() != 3) throw std::invalid_argument("expected a polynomial in three variables");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  LaurentPoly flat(make_vars({f.variables()[0], f.variables()[1]}));
  for (const auto& [e, c] : f.terms()) flat.add_term({e[0], e[1]}, c);
  if (flat.is_zero()) throw std::invalid_argument("polynomial vanishes after dehomogenization");
  auto [norm, unit] = unit_normalize(flat);
  BivarPoly b;
  for (const auto& [e, c] : norm.terms()) b.add_term({e[0], e[1]}, c);
  return {unit, b};
}

namespace {

LaurentPoly rehomogenize(const BivarPoly& g, const VarList& vars) {
  LaurentPoly r(vars);
  for (const auto& [e, c] : g.terms()) r.add_term({e[0], e[1], -e[0] - e[1]}, c);
  return r;
}

}  // namespace

LaurentPoly LaurentFactorization::expand(const VarList& vars) const {
  LaurentPoly r = LaurentPoly::from_monomial(vars, unit).scaled(content);
  for (const auto& [p, m] : factors) r = r * p.pow(static_cast<unsigned>(m));
  return r;
}

LaurentFactorization factor_homogeneous_laurent(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  if (!is_homogeneous_of_degree(f, 0)) throw std::invalid_argument("polynomial is not homogeneous of degree 0");
  auto [unit, b] = dehomogenize_last(f);
  auto bf = kronecker_factor(b);
  LaurentFactorization out;
  // u(x/z, y/z) as a monomial in x, y, z.
  out.unit = Monomial{unit.sign, {unit.exponents[0], unit.exponents[1], -unit.exponents[0] - unit.exponents[1]}};
  out.content = abs(bf.unit);
  if (bf.unit < 0) out.unit.sign = -out.unit.sign;
  for (const auto& [g, m] : bf.factors) out.factors.emplace_back(rehomogenize(g, f.vars()), m);
  return out;
}

bool is_irreducible_laurent(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (!is_homogeneous_of_degree(f, 0)) throw std::invalid_argument("polynomial is not homogeneous of degree 0");
  auto [unit, b] = dehomogenize_last(f);
  auto bf = kronecker_factor(b);
  return bf.factors.size() == 1 && bf.factors.front().second == 1;
}

}  // namespace homfac
