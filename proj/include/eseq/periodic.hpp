#pragma once

#include <cstddef>
#include <optional>

#include "eseq/sequences.hpp"
#include "eseq/solver.hpp"
#include "eseq/verdict.hpp"

namespace eseq {

// Eventually periodic E-sequence a_1..a_l (a_{l+1}..a_{l+r}) repeating,
// with the derived quantities s = b_{l+1}^{l+r}, B_r = B_{l+1}^{l+r-1},
// b_l and B_l of the non-periodic head.
struct PeriodicSpec {
  std::size_t l = 0;
  std::size_t r = 1;
  ESequencePrefix terms;  // length l + r
  std::uint64_t b_l = 0;
  Int B_l;
  std::uint64_t s = 0;
  Int B_r;
};

// Requires r >= 1 and terms.size() == l + r.
PeriodicSpec make_periodic_spec(std::size_t l, std::size_t r, Terms terms,
                                std::uint64_t bit_cap = kDefaultBitCap);

// a_i of the infinite sequence, any i >= 1.
std::uint64_t unrolled_term(const PeriodicSpec& spec, std::size_t i);

ESequencePrefix unroll(const PeriodicSpec& spec, std::size_t len);

// Same infinite sequence with the periodic part reduced to its least period
// and the head shortened as far as periodicity allows.
PeriodicSpec canonicalize(const PeriodicSpec& spec,
                          std::uint64_t bit_cap = kDefaultBitCap);

// Closed form B_{rk+l} = 3^{rk} B_l + 2^{b_l} B_r (3^{rk}-2^{sk})/(3^r-2^s);
// the division is exact (the quotient is a geometric sum).
Int periodic_B(const PeriodicSpec& spec, std::size_t k,
               std::uint64_t bit_cap = kDefaultBitCap);

struct PeriodicDecision {
  Verdict verdict;
  Rat x_cycle;                     // B_r / (2^s - 3^r), diagnostic
  std::optional<Rat> x0_candidate; // cycle-entry candidate when 2^s > 3^r
  PeriodicSpec canonical;
};

// Complete decision procedure.  2^s < 3^r is certified divergent outright;
// otherwise the unique candidate x_0 = (2^{b_l} B_r - B_l (2^s-3^r)) /
// ((2^s-3^r) 3^l) is accepted only if it is an odd positive integer whose
// real E-sequence matches the spec for l+2r terms with x_{l+2r} = x_{l+r}
// (cycle closure); the match plus determinism make the verdict a proof.
PeriodicDecision decide(const PeriodicSpec& spec,
                        std::uint64_t bit_cap = kDefaultBitCap);

// Values recovered from the eventual-form of x_{rk+l}:
//   2^s > 3^r: x_{rk+l} = (3^{rk} u + B_r)/(2^s-3^r), 0 <= u < (2^s-3^r) 3^l
//   3^r > 2^s: x_{rk+l} = (3^{rk} u - B_r)/(3^r-2^s), 1 <= u <= (3^r-2^s) 3^l
// together with the x_0 reconstruction from u.
struct BranchValues {
  bool grows = false;  // 3^r > 2^s branch
  bool u_integral = false;
  Int u;
  bool u_in_range = false;
  bool x0_match = false;
  Int x0;  // solver value at depth rk+l
};

BranchValues branch_values(const PeriodicSpec& spec, std::size_t k,
                           std::uint64_t bit_cap = kDefaultBitCap);

// True iff u is an integer in the branch range and the x_0 reconstruction
// reproduces the solver's x_0 exactly.
bool branch_formulas_hold(const PeriodicSpec& spec, std::size_t k,
                          std::uint64_t bit_cap = kDefaultBitCap);

// Certifies 3^n > 2^{b_n} for every n >= 1 of the infinite sequence of a
// purely periodic spec (l == 0): per residue class n = qp + t the ratio
// 3^n / 2^{b_n} grows by the constant factor 3^p / 2^s > 1, so checking the
// smallest member of each class settles all of them.
bool periodic_guard_all_n(const PeriodicSpec& spec,
                          std::uint64_t bit_cap = kDefaultBitCap);

}  // namespace eseq
