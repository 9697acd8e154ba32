#pragma once

// Univariate polynomial arithmetic over Z/p (p an odd prime below 2^31) and
// over Z/p^k, used by the Zassenhaus factorizer.

#include <cstdint>
#include <random>
#include <vector>

#include "homfac/uni_poly.hpp"

namespace homfac::modp {

using u64 = std::uint64_t;
/// Coefficients in [0, p), lowest degree first, no trailing zeros.
using PolyP = std::vector<u64>;

bool is_prime(u64 n);
u64 next_prime(u64 n);

u64 inv_mod(u64 a, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);

PolyP reduce(const UniPoly& f, u64 p);
void trim(PolyP& f);
int degree(const PolyP& f);
PolyP add(const PolyP& a, const PolyP& b, u64 p);
PolyP sub(const PolyP& a, const PolyP& b, u64 p);
PolyP mul(const PolyP& a, const PolyP& b, u64 p);
/// Quotient and remainder; b must be nonzero.
std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, u64 p);
PolyP rem(const PolyP& a, const PolyP& b, u64 p);
PolyP monic(const PolyP& a, u64 p);
PolyP gcd(PolyP a, PolyP b, u64 p);
PolyP derivative(const PolyP& a, u64 p);
bool is_squarefree(const PolyP& a, u64 p);
/// base^e mod m for an arbitrary-size exponent.
PolyP powmod(const PolyP& base, const Integer& e, const PolyP& m, u64 p);

/// Monic irreducible factors of a monic square-free polynomial, sorted.
std::vector<PolyP> factor_squarefree(const PolyP& f, u64 p, std::mt19937_64& rng);

/// Lifts f = lc(f) * prod(factors) mod p to the same shape mod p^k. `factors`
/// are monic, pairwise coprime mod p. Returned factors are monic with
/// coefficients in [0, p^k).
std::vector<UniPoly> hensel_lift(const UniPoly& f, const std::vector<PolyP>& factors, u64 p, unsigned k);

}  // namespace homfac::modp
