#include "eseq/solver.hpp"

#include <cassert>
#include <stdexcept>

namespace eseq {

PrefixSolution solve_prefix(const ESequencePrefix& prefix,
                            std::uint64_t bit_cap) {
  const std::size_t n = prefix.size();
  if (n == 0) throw std::invalid_argument("solve_prefix requires n >= 1");
  Accumulators acc = accumulate(prefix, bit_cap);
  Int mod = pow3(n);
  Int p2 = pow2(acc.b);
  Int inv;
  int ok = mpz_invert(inv.get_mpz_t(), p2.get_mpz_t(), mod.get_mpz_t());
  assert(ok != 0);
  (void)ok;
  Int xn = (acc.B * inv) % mod;  // nonzero since 3 does not divide B_n
  assert(sgn(xn) > 0);
  Int num = p2 * xn - acc.B;
  assert(mpz_divisible_p(num.get_mpz_t(), mod.get_mpz_t()));
  Int x0;
  mpz_divexact(x0.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  assert(sgn(x0) > 0 && x0 < p2 && is_odd(x0));
  PrefixSolution sol;
  sol.n = n;
  sol.x0 = x0;
  sol.xn = xn;
  sol.b = acc.b;
  sol.B = acc.B;
  return sol;
}

BlockSolution solve_block(const ESequencePrefix& prefix, std::size_t u,
                          std::size_t v, bool with_intermediates,
                          std::uint64_t bit_cap) {
  if (u < 1 || u > v || v > prefix.size()) {
    throw std::out_of_range("solve_block requires 1 <= u <= v <= n");
  }
  const std::size_t m = v - u + 1;
  BlockAccumulators blk = accumulate_block(prefix, u, v, bit_cap);
  Int B_rhs = accumulate_block(prefix, u, v - 1, bit_cap).B;
  Int mod = pow3(m);
  Int p2 = pow2(blk.b);
  Int inv;
  int ok = mpz_invert(inv.get_mpz_t(), p2.get_mpz_t(), mod.get_mpz_t());
  assert(ok != 0);
  (void)ok;
  Int x_end = (B_rhs * inv) % mod;
  assert(sgn(x_end) > 0);
  Int num = p2 * x_end - B_rhs;
  assert(mpz_divisible_p(num.get_mpz_t(), mod.get_mpz_t()));
  Int x0;
  mpz_divexact(x0.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  assert(sgn(x0) > 0 && x0 < p2);

  BlockSolution sol;
  sol.u = u;
  sol.v = v;
  sol.x0 = x0;
  sol.x_end = x_end;
  sol.b_block = blk.b;
  sol.B_rhs = B_rhs;
  if (with_intermediates) {
    std::vector<Int> mids;
    Int cur = x0;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      Int y = 3 * cur + 1;
      std::uint64_t a = prefix.term(u + k);
      assert(mpz_divisible_2exp_p(y.get_mpz_t(), a));
      cur = y >> a;
      mids.push_back(cur);
    }
    sol.intermediates = std::move(mids);
  }
  return sol;
}

bool backward_chain_holds(const PrefixSolution& sol,
                          const ESequencePrefix& prefix) {
  if (prefix.size() != sol.n) return false;
  Int cur = sol.x0;
  for (std::size_t k = 1; k <= sol.n; ++k) {
    Int y = 3 * cur + 1;
    std::uint64_t a = prefix.term(k);
    if (!mpz_divisible_2exp_p(y.get_mpz_t(), a)) return false;
    cur = y >> a;
  }
  return cur == sol.xn;
}

void IncrementalSolver::extend(std::uint64_t term) {
  std::uint64_t nb = checked_bits_add(b_, term, bit_cap_);
  // B_{n+1} = 3 B_n + 2^{b_n}; 3 x_n + 1 is exactly (3^{n+1} R + B_{n+1}) / 2^{b_n}.
  B_ *= 3;
  Int p = pow2(b_);
  B_ += p;
  P3_ *= 3;

  Int E = 3 * X_ + 1;
  Int m = pow2(term);
  Int p3m;
  mpz_tdiv_r_2exp(p3m.get_mpz_t(), P3_.get_mpz_t(), term);
  Int inv;
  int ok = mpz_invert(inv.get_mpz_t(), p3m.get_mpz_t(), m.get_mpz_t());
  assert(ok != 0);
  (void)ok;
  Int Em;
  mpz_tdiv_r_2exp(Em.get_mpz_t(), E.get_mpz_t(), term);
  Int t = ((m - Em) * inv) % m;  // t = -E * 3^{-(n+1)} mod 2^{a}
  R_ += t << b_;
  Int num = E + P3_ * t;
  assert(mpz_divisible_2exp_p(num.get_mpz_t(), term));
  X_ = num >> term;
  assert(sgn(X_) > 0);
  b_ = nb;
  n_ += 1;
}

namespace {

bool is_sample_point(std::size_t n, std::size_t stride) {
  if (stride == 0) return (n & (n - 1)) == 0;  // powers of two
  return n % stride == 0;
}

}  // namespace

OmegaReport omega_limit(const TermSource& source, const OmegaOptions& options) {
  OmegaReport report;
  report.threshold = options.threshold;
  IncrementalSolver solver(options.bit_cap);

  // Candidate tracking: cand is the current stabilized x_0 value, cand_val
  // its trajectory value after `matched` real steps.  The walk only advances
  // on steps where x_0^{1,n} did not change; a changed x_0 resets it.
  Int cand = 0;
  Int cand_val = 0;
  std::size_t matched = 0;
  bool cand_dead = true;

  auto sample = [&](std::size_t n) {
    if (!report.series.empty() && report.series.back().first == n) return;
    report.series.emplace_back(n, solver.x0());
  };

  bool exhausted = false;
  std::size_t n = 0;
  while (n < options.max_n) {
    std::optional<std::uint64_t> term = source();
    if (!term) {
      exhausted = true;
      break;
    }
    Int prev = solver.x0();
    try {
      solver.extend(*term);
    } catch (const BitCapExceeded&) {
      report.bit_cap_aborted = true;
      break;
    }
    ++n;
    report.terms.push_back(*term);
    bool stable = (solver.x0() == prev);
    if (!stable) {
      cand = solver.x0();
      cand_val = cand;
      matched = 0;
      cand_dead = false;
    } else if (!cand_dead) {
      while (matched < n) {
        StepResult s = step(cand_val);
        if (s.exponent != report.terms[matched]) {
          cand_dead = true;
          break;
        }
        cand_val = s.value;
        ++matched;
      }
    }
    if (solver.x0() > options.threshold) {
      sample(n);
      report.verdict = Verdict::evidence();
      report.depth = n;
      return report;
    }
    if (is_sample_point(n, options.stride)) sample(n);
  }
  // Convergence is only declared for a fully verified stream: a candidate
  // that stabilized mid-stream may still break against a later term, and a
  // source cut off at max_n has unseen terms, so ConvergentTo requires the
  // source to be exhausted with the match surviving every generated term.
  if (!exhausted && !report.bit_cap_aborted && n == options.max_n)
    exhausted = !source().has_value();  // the stream may end exactly at max_n
  if (n > 0) sample(n);
  report.depth = n;
  if (exhausted && !cand_dead && n > 0 && matched == n)
    report.verdict = Verdict::convergent(cand);
  else
    report.verdict = Verdict::inconclusive();
  return report;
}

}  // namespace eseq
