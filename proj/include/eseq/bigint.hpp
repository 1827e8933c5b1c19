#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eseq {

using Int = mpz_class;
using Rat = mpq_class;
using Terms = std::vector<std::uint64_t>;

// Hard cap on b_n (the exponent of the dominant power of two) in bits.
inline constexpr std::uint64_t kDefaultBitCap = 1'000'000;

// Denominator scale for rational enclosures of n^(1/9).
inline constexpr std::uint64_t kRootScale = 1'000'000;

class BitCapExceeded : public std::runtime_error {
 public:
  BitCapExceeded(std::uint64_t limit, std::uint64_t attempted)
      : std::runtime_error("bit cap exceeded: b_n would reach " +
                           std::to_string(attempted) + " bits, limit " +
                           std::to_string(limit)),
        limit(limit),
        attempted(attempted) {}
  std::uint64_t limit;
  std::uint64_t attempted;
};

class DepthExhausted : public std::runtime_error {
 public:
  explicit DepthExhausted(const std::string& what)
      : std::runtime_error("precision exhausted: " + what) {}
};

inline Int pow2(std::uint64_t e) {
  Int r;
  mpz_set_ui(r.get_mpz_t(), 0);
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

inline Int pow3(std::uint64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

// Number of bits of x; requires x > 0.
inline std::uint64_t bit_length(const Int& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Largest a with 2^a | x; requires x != 0.
inline std::uint64_t twoadic_valuation(const Int& x) {
  return mpz_scan1(x.get_mpz_t(), 0);
}

inline bool is_odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

inline Rat ratio(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Returns b + term, throwing once the sum would exceed cap.  Keeping every
// b_n <= cap makes the uint64 accumulator overflow-free.
inline std::uint64_t checked_bits_add(std::uint64_t b, std::uint64_t term,
                                      std::uint64_t cap) {
  if (term > cap || b > cap - term) {
    throw BitCapExceeded(cap, (term > cap) ? term : b + term);
  }
  return b + term;
}

// Sign of 2^p - 3^q.  Equality only at p = q = 0.
inline int cmp_pow2_pow3(std::uint64_t p, std::uint64_t q) {
  if (q == 0) return p == 0 ? 0 : 1;
  std::uint64_t bl = bit_length(pow3(q));
  // 2^p has p+1 bits; a longer number wins, equal length means 2^p <= 3^q
  // with equality impossible for q >= 1.
  return (p + 1 > bl) ? 1 : -1;
}

// Sign of c - log2(3) for rational c = p/q > 0, via 2^p vs 3^q.
inline int cmp_rat_log2_3(const Rat& c) {
  if (sgn(c) <= 0) return -1;
  const Int& p = c.get_num();
  const Int& q = c.get_den();
  if (!p.fits_ulong_p() || !q.fits_ulong_p()) {
    throw std::domain_error("rational exponent too large to compare with log2(3)");
  }
  return cmp_pow2_pow3(p.get_ui(), q.get_ui());
}

// Largest t with t^9 <= x; requires x >= 0.
inline Int ninth_root_floor(const Int& x) {
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), 9);
  return r;
}

// Smallest t with t^9 >= x.
inline Int ninth_root_ceil(const Int& x) {
  Int r;
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), 9);
  if (!exact) r += 1;
  return r;
}

// Rational lower bound of (3/2) * n^(1/9) at denominator scale kRootScale.
inline Rat three_halves_ninth_root_lower(std::uint64_t n) {
  Int scaled = Int(static_cast<unsigned long>(n));
  Int d(static_cast<unsigned long>(kRootScale));
  Int d9;
  mpz_pow_ui(d9.get_mpz_t(), d.get_mpz_t(), 9);
  scaled *= d9;
  Int t = ninth_root_floor(scaled);
  return ratio(3 * t, 2 * d);
}

// Rational upper bound of (3/2) * n^(1/9) at denominator scale kRootScale.
inline Rat three_halves_ninth_root_upper(std::uint64_t n) {
  Int scaled = Int(static_cast<unsigned long>(n));
  Int d(static_cast<unsigned long>(kRootScale));
  Int d9;
  mpz_pow_ui(d9.get_mpz_t(), d.get_mpz_t(), 9);
  scaled *= d9;
  Int t = ninth_root_ceil(scaled);
  return ratio(3 * t, 2 * d);
}

}  // namespace eseq
