#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace glat {

using Int = mpz_class;

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  // splitmix64 style mixing
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  return h;
}

inline std::uint64_t hash_int(const Int& x) {
  const mpz_srcptr p = x.get_mpz_t();
  int sz = p->_mp_size;  // signed limb count
  std::uint64_t h = static_cast<std::uint64_t>(sz) * 0x9e3779b97f4a7c15ULL;
  int n = sz < 0 ? -sz : sz;
  for (int i = 0; i < n; ++i)
    h = hash_combine(h, static_cast<std::uint64_t>(mpz_getlimbn(p, i)));
  return h;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// quotient rounded toward -inf, so a - fdiv(a,b)*b lies in [0, |b|)
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// quotient rounded to nearest (ties toward zero); keeps remainders small
inline Int ndiv(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int b2 = abs(b);
  if (r * 2 > b2) q += 1;
  return q;
}

inline int p_adic_valuation(Int n, const Int& p) {
  int v = 0;
  if (n == 0) return 0;
  n = abs(n);
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> ps;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ps.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace glat
