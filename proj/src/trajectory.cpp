#include "eseq/trajectory.hpp"

#include <stdexcept>

namespace eseq {

StepResult step(const Int& x) {
  if (sgn(x) <= 0 || !is_odd(x)) {
    throw std::invalid_argument("step requires an odd value >= 1");
  }
  Int y = 3 * x + 1;
  std::uint64_t a = twoadic_valuation(y);
  y >>= a;
  return {a, y};
}

Trajectory e_sequence_of(const Int& x, std::size_t n, bool stop_at_one,
                         std::uint64_t bit_cap) {
  Trajectory traj;
  traj.start = x;
  traj.reached_one = (x == 1);
  if (stop_at_one && traj.reached_one) return traj;
  Int cur = x;
  std::uint64_t b = 0;
  for (std::size_t k = 0; k < n; ++k) {
    StepResult s = step(cur);
    b = checked_bits_add(b, s.exponent, bit_cap);
    traj.exponents.push_back(s.exponent);
    traj.values.push_back(s.value);
    cur = s.value;
    if (cur == 1) {
      traj.reached_one = true;
      if (stop_at_one) break;
    }
  }
  return traj;
}

bool closed_form_holds(const Trajectory& traj, std::uint64_t bit_cap) {
  Accumulators acc;
  Int p3 = 1;
  for (std::size_t k = 1; k <= traj.size(); ++k) {
    acc.extend(traj.exponents[k - 1], bit_cap);
    p3 *= 3;
    if (pow2(acc.b) * traj.values[k - 1] != p3 * traj.start + acc.B) {
      return false;
    }
  }
  return true;
}

bool matthews_watts_holds(const Trajectory& traj, std::uint64_t bit_cap) {
  std::uint64_t b = 0;
  Int p3 = 1;
  Rat prod = 1;
  for (std::size_t k = 1; k <= traj.size(); ++k) {
    const Int& prev = (k == 1) ? traj.start : traj.values[k - 2];
    Int tp = 3 * prev;
    prod *= ratio(tp + 1, tp);
    b = checked_bits_add(b, traj.exponents[k - 1], bit_cap);
    p3 *= 3;
    Rat lhs = ratio(pow2(b) * traj.values[k - 1], 1);
    Rat rhs = ratio(p3 * traj.start, 1) * prod;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace eseq
