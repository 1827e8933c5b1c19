#include "eseq/criteria.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "eseq/periodic.hpp"
#include "eseq/solver.hpp"

namespace eseq {

namespace {

constexpr std::size_t kSeparationWalkCap = 10000;
constexpr std::size_t kConvergentWalkCap = 10000;
constexpr std::uint64_t kSidePowerCap = 1'000'000;
constexpr std::uint64_t kMaxSturmianPeriod = 1'000'000;

// Sign of s/r - log2(3) via 2^s vs 3^r; nullopt when the powers are too
// large to materialize.
std::optional<int> side_against_log2_3(const Int& s, const Int& r) {
  if (!s.fits_ulong_p() || !r.fits_ulong_p()) return std::nullopt;
  std::uint64_t su = s.get_ui();
  std::uint64_t ru = r.get_ui();
  if (su > kSidePowerCap || ru > kSidePowerCap) return std::nullopt;
  return cmp_pow2_pow3(su, ru);
}

// Multiplies in the factors (1 + 1/(3k)) for 3(n-1) <= k < 3n with
// k = 1,5 (mod 6), growing the product from range [1, 3(n-1)) to [1, 3n).
void extend_envelope_product(Rat& product, std::size_t n) {
  for (std::uint64_t k = 3 * (n - 1); k < 3 * n; ++k) {
    if (k % 6 == 1 || k % 6 == 5) {
      product *= ratio(3 * Int(k) + 1, 3 * Int(k));
    }
  }
}

}  // namespace

std::optional<Certificate> density_criterion(const GeneratorSpec& gen) {
  if (gen.kind != GeneratorSpec::Kind::Sturmian) return std::nullopt;
  const Theta& theta = *gen.theta;
  if (theta.kind != Theta::Kind::ContinuedFraction) return std::nullopt;
  if (!theta_is_irrational_by_rule(theta)) return std::nullopt;
  int side = 0;
  try {
    side = compare_theta_log2_3(theta);
  } catch (const DepthExhausted&) {
    return std::nullopt;
  }
  if (side <= 0) return std::nullopt;
  Certificate cert;
  cert.criterion = "density-above-log2-3";
  cert.family = "irrational-theta-above-log2-3";
  cert.parameters.emplace_back("theta", theta.to_text());
  cert.parameters.emplace_back("separation", "theta > s/r > log2(3)");
  ConvergentSequence cs(theta.cf);
  for (std::size_t i = 0;
       cert.convergents.size() < 3 && i < kSeparationWalkCap; ++i) {
    if (!cs.advance()) break;
    if (i % 2 != 0) continue;  // only below-theta convergents can separate
    std::optional<int> s = side_against_log2_3(cs.num(i), cs.den(i));
    if (s && *s > 0) {
      ValidatedConvergent vc;
      vc.s = cs.num(i);
      vc.r = cs.den(i);
      vc.side = -1;
      vc.role = "separates-theta-from-log2-3";
      cert.convergents.push_back(std::move(vc));
    }
  }
  if (cert.convergents.size() < 3) return std::nullopt;
  return cert;
}

EnvelopeBound mw_product_envelope(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  EnvelopeBound out;
  out.product = 1;
  for (std::size_t m = 1; m <= n; ++m) extend_envelope_product(out.product, m);
  out.bound = three_halves_ninth_root_lower(n);
  out.ok = out.product < out.bound;
  return out;
}

bool mw_product_envelope_all(std::size_t n_max) {
  Rat product = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    extend_envelope_product(product, n);
    if (!(product < three_halves_ninth_root_lower(n))) return false;
  }
  return true;
}

Rat distinct_chain_lower_bound(const ESequencePrefix& prefix,
                               std::uint64_t bit_cap) {
  if (prefix.empty()) throw std::invalid_argument("prefix must be nonempty");
  Accumulators acc = accumulate(prefix, bit_cap);
  Rat scale = three_halves_ninth_root_upper(acc.n) - 1;
  return ratio(acc.B, pow3(acc.n)) / scale;
}

bool shifted_product_bounds_hold(const Int& x, std::size_t n) {
  if (sgn(x) <= 0 || n == 0) {
    throw std::invalid_argument("requires x >= 1 and n >= 1");
  }
  Rat rhs = 1 + ratio(Int(static_cast<unsigned long>(n)), 3 * x);
  Rat ascending = 1;
  for (std::size_t k = 0; k < n; ++k) {
    ascending *= 1 + ratio(Int(1), 3 * (x + static_cast<unsigned long>(k)));
  }
  if (!(ascending <= rhs)) return false;
  if (cmp(x, static_cast<unsigned long>(n)) >= 0) {
    Rat descending = 1;
    for (std::size_t k = 0; k < n; ++k) {
      descending *= 1 + ratio(Int(1), 3 * (x - static_cast<unsigned long>(k)));
    }
    if (!(descending >= rhs)) return false;
    if (n >= 2) {
      Rat tight = ratio(3 * x, 3 * x - static_cast<unsigned long>(n));
      if (!(descending > tight)) return false;
    }
  }
  return true;
}

PositionalReport positional_diagnostics(const ESequencePrefix& prefix,
                                        std::uint64_t bit_cap) {
  PrefixSolution sol = solve_prefix(prefix, bit_cap);
  const std::size_t n = sol.n;
  std::vector<Int> chain;
  chain.reserve(n + 1);
  chain.push_back(sol.x0);
  for (std::size_t i = 1; i <= n; ++i) {
    Int t = 3 * chain.back() + 1;
    std::uint64_t a = prefix.term(i);
    if (!mpz_divisible_2exp_p(t.get_mpz_t(), a)) {
      throw std::logic_error("forced chain division is not exact");
    }
    Int next;
    mpz_tdiv_q_2exp(next.get_mpz_t(), t.get_mpz_t(), a);
    chain.push_back(std::move(next));
  }
  std::set<Int> seen(chain.begin(), chain.end() - 1);
  if (seen.size() != n) {
    throw std::domain_error("chain values x_0..x_{n-1} must be distinct");
  }

  PositionalReport rep;
  rep.n = n;
  rep.b_over_pow3 = ratio(sol.B, pow3(n));
  rep.b_over_pow2 = ratio(sol.B, pow2(sol.b));
  Rat third = ratio(Int(static_cast<unsigned long>(n)), Int(3));
  rep.cmp_pow3 = cmp(rep.b_over_pow3, third);
  rep.cmp_pow2 = cmp(rep.b_over_pow2, third);
  rep.fired[0] = rep.cmp_pow3 > 0;
  rep.fired[1] = rep.cmp_pow3 < 0;
  rep.fired[2] = rep.cmp_pow2 <= 0;
  rep.fired[3] = rep.cmp_pow2 >= 0;
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    if (chain[k] <= chain[0]) rep.holds[0] = true;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (chain[0] <= chain[k]) rep.holds[1] = true;
  }
  for (std::size_t i = 0; i + 1 <= n; ++i) {
    if (chain[n] <= chain[i]) rep.holds[2] = true;
    if (chain[n] >= chain[i]) rep.holds[3] = true;
  }
  return rep;
}

namespace {

struct MaterializedRun {
  Terms terms;                         // a_1..a_n, stored zero-based
  std::vector<std::uint64_t> b;        // b[i] = a_1 + ... + a_i
  std::map<std::size_t, Int> x0_at;    // solver x_0^{1,i} at requested depths
};

// Generates n terms, verifies the growth guard 3^i > 2^{b_i} at every
// 1 <= i <= n, and captures the solver's x_0 at the requested depths.
MaterializedRun materialize_guarded(const GeneratorSpec& gen, std::size_t n,
                                    const std::set<std::size_t>& depths,
                                    std::uint64_t bit_cap) {
  MaterializedRun out;
  out.terms.reserve(n);
  out.b.assign(n + 1, 0);
  TermSource source = make_term_source(gen);
  IncrementalSolver solver(bit_cap);
  Int p3 = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::optional<std::uint64_t> t = source();
    if (!t) {
      throw std::invalid_argument("generator ends before the deepest pair");
    }
    out.terms.push_back(*t);
    out.b[i] = checked_bits_add(out.b[i - 1], *t, bit_cap);
    p3 *= 3;
    // 3^i > 2^{b_i} holds iff b_i <= bitlength(3^i) - 1.
    if (out.b[i] + 1 > bit_length(p3)) {
      throw std::domain_error("growth guard 3^n > 2^{b_n} fails at n = " +
                              std::to_string(i));
    }
    solver.extend(*t);
    if (depths.count(i) != 0) out.x0_at.emplace(i, solver.x0());
  }
  return out;
}

void require_pair_basics(const Rat& c, const PairList& pairs) {
  if (pairs.empty()) throw std::invalid_argument("at least one pair required");
  if (cmp_rat_log2_3(c) <= 0) {
    throw std::invalid_argument("c must exceed log2(3)");
  }
  std::set<PairList::value_type> unique(pairs.begin(), pairs.end());
  if (unique.size() != pairs.size()) {
    throw std::invalid_argument("pairs must be distinct");
  }
}

}  // namespace

CriterionReport ones_run_criterion(const GeneratorSpec& gen, const Rat& c,
                                   const PairList& pairs,
                                   std::uint64_t bit_cap) {
  require_pair_basics(c, pairs);
  const Int& c_num = c.get_num();
  const Int& c_den = c.get_den();
  std::size_t max_l = 0;
  std::set<std::size_t> depths;
  for (const auto& [k, l] : pairs) {
    if (k < 1 || l <= k) {
      throw std::invalid_argument("pairs must satisfy 1 <= k < l");
    }
    if (!(Int(l) * c_den > Int(k) * c_num)) {
      throw std::domain_error("pair fails l > k c");
    }
    max_l = std::max<std::size_t>(max_l, l);
    depths.insert(l);
  }
  MaterializedRun run = materialize_guarded(gen, max_l, depths, bit_cap);

  CriterionReport report;
  for (const auto& [k, l] : pairs) {
    for (std::uint64_t j = k + 1; j <= l; ++j) {
      if (run.terms[j - 1] != 1) {
        throw std::domain_error("run of ones broken at position " +
                                std::to_string(j));
      }
    }
    // 2^{l + b_k - k} / 3^k - 1 - k, valid at prefix depth l.
    std::uint64_t e = checked_bits_add(run.b[k] - k, l, bit_cap);
    Rat bound = ratio(pow2(e), pow3(k)) - 1 -
                Rat(static_cast<unsigned long>(k));
    if (!(bound <= Rat(run.x0_at.at(l)))) {
      throw std::logic_error("certified bound exceeds the solver value");
    }
    report.lower_bounds.emplace_back(l, bound);
  }

  if (gen.kind == GeneratorSpec::Kind::PowersOfTwoMarked && c < 2) {
    bool family = true;
    std::uint64_t m_min = 0;
    std::uint64_t m_max = 0;
    for (const auto& [k, l] : pairs) {
      if (k < 2 || (k & (k - 1)) != 0 || l != 2 * k - 1) {
        family = false;
        break;
      }
      std::uint64_t m = std::countr_zero(k);
      m_min = (m_min == 0) ? m : std::min(m_min, m);
      m_max = std::max(m_max, m);
    }
    if (family) {
      Certificate cert;
      cert.criterion = "ones-runs";
      cert.family = "powers-of-two-marks";
      cert.parameters.emplace_back("c", rat_string(c));
      cert.parameters.emplace_back("pair_rule", "(2^m, 2^(m+1)-1)");
      cert.parameters.emplace_back("m_min", std::to_string(m_min));
      cert.parameters.emplace_back("m_max", std::to_string(m_max));
      cert.lower_bounds = report.lower_bounds;
      report.certificate = std::move(cert);
    }
  }
  return report;
}

CriterionReport repeated_block_criterion(const GeneratorSpec& gen, const Rat& c,
                                         const PairList& pairs,
                                         std::uint64_t bit_cap) {
  require_pair_basics(c, pairs);
  const Int& c_num = c.get_num();
  const Int& c_den = c.get_den();
  std::size_t max_n = 0;
  std::set<std::size_t> depths;
  for (const auto& [r, l] : pairs) {
    if (r < 1 || l <= r) {
      throw std::invalid_argument("pairs must satisfy 1 <= r < l");
    }
    max_n = std::max<std::size_t>(max_n, l + r);
    depths.insert(l + r);
  }
  MaterializedRun run = materialize_guarded(gen, max_n, depths, bit_cap);

  CriterionReport report;
  for (const auto& [r, l] : pairs) {
    for (std::uint64_t j = 1; j <= r; ++j) {
      if (run.terms[l + j - 1] != run.terms[j - 1]) {
        throw std::domain_error("repeated block mismatch at offset " +
                                std::to_string(j));
      }
    }
    if (!(Int(run.b[l + r]) * c_den > Int(l) * c_num)) {
      throw std::domain_error("pair fails b_{l+r} > l c");
    }
    // 2^{b_{l+r}} / 3^l - l, valid at prefix depth l + r.
    Rat bound = ratio(pow2(run.b[l + r]), pow3(l)) -
                Rat(static_cast<unsigned long>(l));
    if (!(bound <= Rat(run.x0_at.at(l + r)))) {
      throw std::logic_error("certified bound exceeds the solver value");
    }
    report.lower_bounds.emplace_back(l + r, bound);
  }

  if (gen.kind == GeneratorSpec::Kind::Periodic && gen.periodic->l == 0) {
    PeriodicSpec canon = canonicalize(*gen.periodic, bit_cap);
    const std::uint64_t r0 = pairs[0].first;
    const std::uint64_t l0 = pairs[0].second;
    bool linear = true;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      linear = linear && pairs[j].first == (j + 1) * r0 &&
               pairs[j].second == (j + 1) * l0;
    }
    const std::uint64_t p = canon.r;
    if (linear && r0 % p == 0 && l0 % p == 0) {
      // b_{j(l0+r0)} = j (l0+r0) s_p / p, so b_{l+r} > l c for every j at
      // once reduces to one scale-free inequality.
      bool all_j = Int(l0 + r0) * Int(canon.s) * c_den > Int(p) * Int(l0) * c_num;
      if (all_j && periodic_guard_all_n(canon, bit_cap)) {
        Certificate cert;
        cert.criterion = "repeated-prefix-blocks";
        cert.family = "periodic-linear-blocks";
        cert.parameters.emplace_back("c", rat_string(c));
        cert.parameters.emplace_back("pair_rule", "(j r0, j l0)");
        cert.parameters.emplace_back("r0", std::to_string(r0));
        cert.parameters.emplace_back("l0", std::to_string(l0));
        cert.parameters.emplace_back("period", std::to_string(p));
        cert.lower_bounds = report.lower_bounds;
        report.certificate = std::move(cert);
      }
    }
  }
  return report;
}

namespace {

// Distinct-chain bound B_n/(3^n (U-1)) sampled at power-of-two depths; a
// depth is kept only when the bound does not exceed the solver's x_0^{1,n}.
void append_envelope_bound_series(
    const Terms& terms, std::uint64_t bit_cap,
    std::vector<std::pair<std::size_t, Rat>>* out) {
  IncrementalSolver solver(bit_cap);
  Accumulators acc;
  Int p3 = 1;
  std::size_t next = 1;
  for (std::size_t n = 1; n <= terms.size(); ++n) {
    acc.extend(terms[n - 1], bit_cap);
    solver.extend(terms[n - 1]);
    p3 *= 3;
    if (n == next) {
      Rat lb = ratio(acc.B, p3) / (three_halves_ninth_root_upper(n) - 1);
      if (lb <= Rat(solver.x0())) out->emplace_back(n, lb);
      next *= 2;
    }
  }
}

SturmianReport sturmian_rational(const Rat& theta, std::size_t max_n,
                                 std::uint64_t bit_cap) {
  if (theta < 1) {
    throw std::invalid_argument("sturmian density must be at least 1");
  }
  const Int& p = theta.get_num();
  const Int& q = theta.get_den();
  if (!q.fits_ulong_p() || q.get_ui() > kMaxSturmianPeriod) {
    throw std::invalid_argument("rational theta period too large");
  }
  const std::size_t period = q.get_ui();
  Terms cycle;
  cycle.reserve(period);
  Int prev = 0;
  for (std::size_t i = 1; i <= period; ++i) {
    Int f;
    Int scaled = Int(static_cast<unsigned long>(i)) * p;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_mpz_t());
    Int step = f - prev;
    prev = f;
    cycle.push_back(step.get_ui());
  }
  PeriodicSpec spec = make_periodic_spec(0, period, std::move(cycle), bit_cap);
  PeriodicDecision dec = decide(spec, bit_cap);
  SturmianReport out;
  out.verdict = dec.verdict;
  out.terms = unroll(spec, max_n).terms();
  return out;
}

SturmianReport sturmian_critical(std::size_t max_n, std::uint64_t bit_cap) {
  SturmianReport out;
  TermSource source =
      make_term_source(GeneratorSpec::sturmian_of(Theta::log2_3()));
  for (std::size_t n = 1; n <= max_n; ++n) out.terms.push_back(*source());
  Accumulators acc;
  Int p3 = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    acc.extend(out.terms[n - 1], bit_cap);
    p3 *= 3;
    // Exact witness for unbounded density: 8 B_n > n 3^n.
    if (!(8 * acc.B > p3 * static_cast<unsigned long>(n))) {
      out.verdict = Verdict::inconclusive();
      return out;
    }
  }
  Certificate cert;
  cert.criterion = "sturmian-critical-density";
  cert.family = "log2-3-floors";
  cert.parameters.emplace_back("theta", "log2_3");
  cert.parameters.emplace_back("witness", "8 B_n > n 3^n");
  cert.parameters.emplace_back("max_n", std::to_string(max_n));
  append_envelope_bound_series(out.terms, bit_cap, &cert.lower_bounds);
  out.verdict = Verdict::certified("sturmian-critical-density");
  out.certificate = std::move(cert);
  return out;
}

SturmianReport sturmian_cf(const Theta& theta, std::size_t max_n,
                           std::uint64_t bit_cap) {
  SturmianReport out;
  int side = compare_theta_log2_3(theta);  // DepthExhausted propagates
  {
    TermSource source = make_term_source(GeneratorSpec::sturmian_of(theta));
    try {
      for (std::size_t n = 1; n <= max_n; ++n) {
        std::optional<std::uint64_t> t = source();
        if (!t) break;
        out.terms.push_back(*t);
      }
    } catch (const DepthExhausted&) {
      // Finite expansions run out of floor precision; keep the prefix.
    }
  }
  if (!theta_is_irrational_by_rule(theta)) {
    out.verdict = Verdict::inconclusive();
    return out;
  }
  if (side == 0) throw std::logic_error("continued fraction compared equal");

  if (side > 0) {
    std::optional<Certificate> cert =
        density_criterion(GeneratorSpec::sturmian_of(theta));
    if (!cert) {
      out.verdict = Verdict::inconclusive();
      return out;
    }
    append_envelope_bound_series(out.terms, bit_cap, &cert->lower_bounds);
    out.verdict = Verdict::certified("density-above-log2-3");
    out.certificate = std::move(cert);
    return out;
  }

  Certificate cert;
  cert.criterion = "sturmian-subcritical-density";
  cert.family = "irrational-theta-below-log2-3";
  cert.parameters.emplace_back("theta", theta.to_text());
  cert.parameters.emplace_back("case_rule", "convergent parity");
  const std::size_t n_terms = out.terms.size();
  std::vector<std::uint64_t> b(n_terms + 1, 0);
  for (std::size_t i = 1; i <= n_terms; ++i) {
    b[i] = checked_bits_add(b[i - 1], out.terms[i - 1], bit_cap);
  }
  ESequencePrefix whole(out.terms);

  ConvergentSequence cs(theta.cf);
  for (std::size_t i = 0; i < kConvergentWalkCap; ++i) {
    if (!cs.advance()) break;
    const Int& S = cs.num(i);
    const Int& R = cs.den(i);
    if (!S.fits_ulong_p() || !R.fits_ulong_p()) break;
    const std::uint64_t s = S.get_ui();
    const std::uint64_t r = R.get_ui();
    if (i % 2 == 0) {
      // s/r < theta: requires 2^s < 3^r, b_r = s, a_{r+j} = a_j for j <= r;
      // then x_0 >= (2^{2s} - B_r) / (3^r - 2^s) at depth 2r.
      const std::size_t depth = 2 * r;
      if (depth > n_terms) break;
      if (cmp_pow2_pow3(s, r) >= 0) continue;
      if (b[r] != s) continue;
      bool repeats = true;
      for (std::uint64_t j = 1; j <= r && repeats; ++j) {
        repeats = out.terms[r + j - 1] == out.terms[j - 1];
      }
      if (!repeats) continue;
      ESequencePrefix slice(
          Terms(out.terms.begin(), out.terms.begin() + depth));
      PrefixSolution sol = solve_prefix(slice, bit_cap);
      Int delta = pow3(r) - pow2(s);
      Int B_r = accumulate(ESequencePrefix(Terms(out.terms.begin(),
                                                 out.terms.begin() + r)),
                           bit_cap)
                    .B;
      Int u_num = delta * sol.xn + B_r;
      Int p3depth = pow3(depth);
      if (!mpz_divisible_p(u_num.get_mpz_t(), p3depth.get_mpz_t())) continue;
      Int u = u_num / p3depth;
      if (!(u >= 1)) continue;
      Rat bound = ratio(pow2(2 * s) - B_r, delta);
      if (!(bound <= Rat(sol.x0))) continue;
      ValidatedConvergent vc;
      vc.s = S;
      vc.r = R;
      vc.side = -1;
      vc.role = "below-theta";
      vc.depth = depth;
      vc.lower_bound = bound;
      cert.convergents.push_back(std::move(vc));
      cert.lower_bounds.emplace_back(depth, bound);
    } else {
      // s/r > theta: requires 2^s < 3^r, a_1 = 1, b_r = s - 1,
      // b_{r+1} = s + 1, a_{1+j} = a_{1+r+j} for j <= r; then
      // x_0 >= (2^{2s+1} - delta - 2 B) / (3 delta) at depth 2r + 1,
      // B the block accumulator over a_2..a_r.
      const std::size_t depth = 2 * r + 1;
      if (depth > n_terms) break;
      if (cmp_pow2_pow3(s, r) >= 0) continue;
      if (out.terms[0] != 1) continue;
      if (b[r] != s - 1) continue;
      if (b[r + 1] != s + 1) continue;
      bool repeats = true;
      for (std::uint64_t j = 1; j <= r && repeats; ++j) {
        repeats = out.terms[j] == out.terms[r + j];
      }
      if (!repeats) continue;
      ESequencePrefix slice(
          Terms(out.terms.begin(), out.terms.begin() + depth));
      PrefixSolution sol = solve_prefix(slice, bit_cap);
      Int delta = pow3(r) - pow2(s);
      Int B_block = accumulate_block(whole, 2, r, bit_cap).B;
      Int u_num = delta * sol.xn + B_block;
      Int p3depth = pow3(2 * r);
      if (!mpz_divisible_p(u_num.get_mpz_t(), p3depth.get_mpz_t())) continue;
      Int u = u_num / p3depth;
      if (!(u >= 1)) continue;
      Rat bound = ratio(pow2(2 * s + 1) - delta - 2 * B_block, 3 * delta);
      if (!(bound <= Rat(sol.x0))) continue;
      ValidatedConvergent vc;
      vc.s = S;
      vc.r = R;
      vc.side = +1;
      vc.role = "above-theta";
      vc.depth = depth;
      vc.lower_bound = bound;
      cert.convergents.push_back(std::move(vc));
      cert.lower_bounds.emplace_back(depth, bound);
    }
  }
  out.verdict = Verdict::certified("sturmian-subcritical-density");
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

SturmianReport sturmian_verdict(const Theta& theta, std::size_t max_n,
                                std::uint64_t bit_cap) {
  if (max_n == 0) throw std::invalid_argument("max_n must be >= 1");
  switch (theta.kind) {
    case Theta::Kind::Rational:
      return sturmian_rational(theta.rational, max_n, bit_cap);
    case Theta::Kind::Log2Of3:
      return sturmian_critical(max_n, bit_cap);
    case Theta::Kind::ContinuedFraction:
      return sturmian_cf(theta, max_n, bit_cap);
  }
  throw std::logic_error("unhandled theta kind");
}

}  // namespace eseq
