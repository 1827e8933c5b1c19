#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eseq/bigint.hpp"
#include "eseq/generators.hpp"
#include "eseq/sequences.hpp"
#include "eseq/verdict.hpp"

namespace eseq {

// Divergence certificate from density alone: Sturmian generator whose theta
// is irrational by rule and certified > log2(3) by at least three convergents
// that sit below theta yet above log2(3).  Anything weaker returns nothing.
std::optional<Certificate> density_criterion(const GeneratorSpec& gen);

// Product over 1 <= k < 3n, k = 1,5 (mod 6) of (1 + 1/(3k)), compared
// against a certified rational lower bound of 1.5 n^{1/9}.  ok means the
// product is provably below 1.5 n^{1/9}.
struct EnvelopeBound {
  Rat product;
  Rat bound;
  bool ok = false;
};

EnvelopeBound mw_product_envelope(std::size_t n);

// Exact incremental sweep of the envelope bound for 1 <= n <= n_max.
bool mw_product_envelope_all(std::size_t n_max);

// Certified rational lower bound B_n / (3^n (U - 1)) on any convergent x_0
// whose first n trajectory values are distinct with 3 not dividing x_0,
// where U is a certified rational upper bound on 1.5 n^{1/9}.
Rat distinct_chain_lower_bound(const ESequencePrefix& prefix,
                               std::uint64_t bit_cap = kDefaultBitCap);

// Exact check of the three shifted-product inequalities
//   (i)  prod_{k<n} (1 + 1/(3(x+k))) <= 1 + n/(3x)
//   (ii) prod_{k<n} (1 + 1/(3(x-k))) >= 1 + n/(3x)   for x >= n
//   (iii) the product in (ii) > 3x/(3x - n)          for x >= n >= 2
// evaluating each inequality whose precondition holds.
bool shifted_product_bounds_hold(const Int& x, std::size_t n);

// Exact comparisons of B_n/3^n and B_n/2^{b_n} against n/3 for the forced
// chain of a prefix, with the four positional implications they trigger
// cross-checked against that chain.  Index order: implications[0] is
// "B_n/3^n > n/3 forces x_k <= x_0 for some 1 <= k <= n-1", [1] the mirrored
// "< forces x_k >= x_0 for some 1 <= k <= n", [2] "B_n/2^{b_n} <= n/3 forces
// x_n <= x_i for some 0 <= i <= n-1", [3] the mirrored ">= forces x_n >= x_k".
struct PositionalReport {
  std::size_t n = 0;
  Rat b_over_pow3;
  Rat b_over_pow2;
  int cmp_pow3 = 0;  // sign of B_n/3^n - n/3
  int cmp_pow2 = 0;  // sign of B_n/2^{b_n} - n/3
  bool fired[4] = {false, false, false, false};
  bool holds[4] = {false, false, false, false};
  bool consistent() const {
    for (int i = 0; i < 4; ++i)
      if (fired[i] && !holds[i]) return false;
    return true;
  }
};

// Requires the forced chain values x_0 .. x_{n-1} to be pairwise distinct;
// throws domain_error otherwise.
PositionalReport positional_diagnostics(const ESequencePrefix& prefix,
                                        std::uint64_t bit_cap = kDefaultBitCap);

using PairList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

struct CriterionReport {
  // (depth, certified rational lower bound on x_0 at that depth)
  std::vector<std::pair<std::size_t, Rat>> lower_bounds;
  std::optional<Certificate> certificate;
};

// Runs-of-ones divergence criterion.  Each pair (k, l) asserts
// a_{k+1} = ... = a_l = 1 with l > kc; every pair is validated against the
// generator, the guard 3^n > 2^{b_n} is checked exactly up to the largest l,
// and the certified bound 2^{l + b_k - k}/3^k - 1 - k is recorded at depth l
// and cross-checked against the solver.  A certificate is emitted only when
// the pair family is infinite by rule: the powers-of-two-marked generator
// with pairs (2^m, 2^{m+1} - 1).
CriterionReport ones_run_criterion(const GeneratorSpec& gen, const Rat& c,
                                   const PairList& pairs,
                                   std::uint64_t bit_cap = kDefaultBitCap);

// Repeated-prefix-block divergence criterion.  Each pair (r, l) asserts
// l > r, a_{l+j} = a_j for 1 <= j <= r, and b_{l+r} > lc; the bound
// 2^{b_{l+r}}/3^l - l is recorded at depth l + r.  A certificate requires a
// purely periodic generator with period p, pairs (j r0, j l0) linear in j
// with p | r0 and p | l0, and the all-n growth guard of the periodic spec.
CriterionReport repeated_block_criterion(const GeneratorSpec& gen, const Rat& c,
                                         const PairList& pairs,
                                         std::uint64_t bit_cap = kDefaultBitCap);

struct SturmianReport {
  Verdict verdict;
  std::optional<Certificate> certificate;
  Terms terms;  // the first max_n generated terms (fewer if depth ran out)
};

// Complete verdict for Beatty-floor sequences a_n = [n theta] - [(n-1) theta]:
//   theta rational       -> reduce to a purely periodic spec and decide
//   theta = log2(3)      -> certified, with 8 B_n > n 3^n checked to max_n
//   theta irrational > log2(3) -> certified through the density criterion
//   theta irrational < log2(3) -> certified, with convergents validated
//     case by case and growth bounds cross-checked against the solver
//   depth-limited continued fractions that survive comparison -> Inconclusive
SturmianReport sturmian_verdict(const Theta& theta, std::size_t max_n,
                                std::uint64_t bit_cap = kDefaultBitCap);

}  // namespace eseq
