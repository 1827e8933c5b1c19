#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "eseq/sequences.hpp"
#include "eseq/trajectory.hpp"
#include "eseq/verdict.hpp"

namespace eseq {

// The unique pair with 2^{b_n} x_n - 3^n x_0 = B_n, 1 <= x_n < 3^n (3 does
// not divide x_n), 1 <= x_0 < 2^{b_n} (x_0 odd).
struct PrefixSolution {
  std::size_t n = 0;
  Int x0;
  Int xn;
  std::uint64_t b = 0;
  Int B;
};

// Solves by inverting 2^{b_n} modulo 3^n (extended gcd); requires n >= 1.
PrefixSolution solve_prefix(const ESequencePrefix& prefix,
                            std::uint64_t bit_cap = kDefaultBitCap);

// Block analogue: 2^{b_u^v} x_end - 3^{v-u+1} x0 = B_u^{v-1}, with
// 1 <= x0 < 2^{b_u^v} and 1 <= x_end < 3^{v-u+1}.
struct BlockSolution {
  std::size_t u = 0;
  std::size_t v = 0;
  Int x0;
  Int x_end;
  std::uint64_t b_block = 0;
  Int B_rhs;
  std::optional<std::vector<Int>> intermediates;  // x_1..x_{v-u} when requested
};

BlockSolution solve_block(const ESequencePrefix& prefix, std::size_t u,
                          std::size_t v, bool with_intermediates = false,
                          std::uint64_t bit_cap = kDefaultBitCap);

// Forward chain x_{k} = (3 x_{k-1} + 1) / 2^{a_k} from x_0: true iff every
// division is exact and the chain ends at x_n.  Intermediates may be even.
bool backward_chain_holds(const PrefixSolution& sol,
                          const ESequencePrefix& prefix);

// Incremental solver for x_0^{1,n}: extending by one term solves only for
// the new high bits of x_0 (modulo 2^{a_{n+1}}), using
//   3 x_n + 1 + 3^{n+1} t = 2^{a_{n+1}} x_{n+1},  x_0' = x_0 + 2^{b_n} t.
// This keeps the whole sweep quasi-linear instead of re-inverting mod 3^n.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(std::uint64_t bit_cap = kDefaultBitCap)
      : bit_cap_(bit_cap) {}

  void extend(std::uint64_t term);

  std::size_t n() const { return n_; }
  std::uint64_t b() const { return b_; }
  const Int& B() const { return B_; }
  const Int& x0() const { return R_; }
  const Int& xn() const { return X_; }
  const Int& pow3n() const { return P3_; }

 private:
  std::uint64_t bit_cap_;
  std::size_t n_ = 0;
  std::uint64_t b_ = 0;
  Int B_ = 0;
  Int P3_ = 1;  // 3^n
  Int R_ = 0;   // x_0^{1,n}
  Int X_ = 0;   // x_n of the solved prefix
};

using TermSource = std::function<std::optional<std::uint64_t>()>;

struct OmegaOptions {
  std::size_t max_n = 1000;
  Int threshold = pow2(256);
  std::uint64_t bit_cap = kDefaultBitCap;
  std::size_t stride = 0;  // 0: sample at powers of two
};

struct OmegaReport {
  Verdict verdict;
  std::vector<std::pair<std::size_t, Int>> series;  // (n, x_0^{1,n}) samples
  std::size_t depth = 0;
  Int threshold;
  Terms terms;  // the generated prefix actually consumed
  bool bit_cap_aborted = false;
};

// Tracks x_0^{1,n} along the generated sequence.  DivergentEvidence fires
// the moment x_0^{1,n} exceeds the threshold.  ConvergentTo(x) is declared
// only when the source is exhausted: it requires x_0^{1,n} to have
// stabilized at x and the real E-sequence of x to match every generated
// term, since a candidate that stabilizes mid-stream may still break
// against a later term.  A source cut off at max_n has unseen terms, so
// the run ends Inconclusive; the GeneratorSpec overload additionally
// certifies convergence for periodic generators, whose tail is determined.
OmegaReport omega_limit(const TermSource& source, const OmegaOptions& options);

}  // namespace eseq
