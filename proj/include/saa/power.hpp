// Representatives of the cosets F* / (F*)^k.
#pragma once

#include <utility>

#include "saa/field.hpp"

namespace saa {

/// (rep, u) with rep = r u^k; rep is the element of least code in r (F*)^k.
inline std::pair<GFElem, GFElem> coset_representative(const GF& f, const GFElem& r, long k) {
  if (r.is_zero()) throw DomainError("coset_representative: zero argument");
  GFElem best = r, unit = f.one();
  for (const auto& u : f.elements()) {
    if (u.is_zero()) continue;
    GFElem v = r * u.pow(k);
    if (v.code() < best.code()) {
      best = v;
      unit = u;
    }
  }
  return {best, unit};
}

namespace detail {

/// Multiplies `u` by p^shift for every prime p dividing `m` with multiplicity e, where shift moves e into [0,k).
inline void reduce_exponents(mpz_class m, long k, int side, mpq_class& u) {
  auto take = [&](const mpz_class& p) {
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e == 0) return;
    long signed_e = side * e;
    long reduced = ((signed_e % k) + k) % k;
    long shift = (reduced - signed_e) / k;
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift > 0) u *= pk;
    if (shift < 0) u /= pk;
  };
  for (mpz_class p = 2; p * p <= m && p < 1000000; p += (p == 2 ? 1 : 2)) take(p);
  if (m <= 1) return;
  // the cofactor is a prime, or a product of large primes whose exponents stay unreduced
  mpz_class root;
  for (long e = k; e >= 1; --e)
    if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(e)) && root > 1) {
      long signed_e = side * e;
      long reduced = ((signed_e % k) + k) % k;
      long shift = (reduced - signed_e) / k;
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
      if (shift > 0) u *= pk;
      if (shift < 0) u /= pk;
      return;
    }
}

}  // namespace detail

/// (rep, u) with rep = r u^k: prime exponents reduced into [0,k), and rep > 0 when k is odd.
inline std::pair<Rational, Rational> coset_representative(const QQ&, const Rational& r, long k) {
  if (r.is_zero()) throw DomainError("coset_representative: zero argument");
  mpq_class u = 1;
  const mpq_class& v = r.value();
  detail::reduce_exponents(abs(v.get_num()), k, 1, u);
  detail::reduce_exponents(v.get_den(), k, -1, u);
  u.canonicalize();
  if (k % 2 == 1 && sgn(v) < 0) u = -u;
  Rational uu(u);
  return {r * uu.pow(k), uu};
}

}  // namespace saa
