#pragma once

#include <cstddef>

#include "eseq/sequences.hpp"

namespace eseq {

// One accelerated step: x -> (3x+1)/2^a with a the full power of two.
struct StepResult {
  std::uint64_t exponent;
  Int value;  // odd
};

// Requires x odd and >= 1.
StepResult step(const Int& x);

struct Trajectory {
  Int start;               // x_0
  std::vector<Int> values; // x_1, ..., x_n
  Terms exponents;         // a_1, ..., a_n
  bool reached_one = false;

  std::size_t size() const { return exponents.size(); }
  ESequencePrefix prefix() const { return ESequencePrefix(exponents); }
};

// Runs n steps from odd x >= 1.  With stop_at_one, generation ends at the
// first index where the value hits 1 (reached_one is set either way when a
// value equals 1).
Trajectory e_sequence_of(const Int& x, std::size_t n, bool stop_at_one = false,
                         std::uint64_t bit_cap = kDefaultBitCap);

// 2^{b_k} x_k = 3^k x_0 + B_k for every k along the trajectory.
bool closed_form_holds(const Trajectory& traj,
                       std::uint64_t bit_cap = kDefaultBitCap);

// 2^{b_n} x_n = 3^n x_0 * prod_{k=1}^{n} (1 + 1/(3 x_{k-1})), checked as an
// exact rational identity at every prefix length.
bool matthews_watts_holds(const Trajectory& traj,
                          std::uint64_t bit_cap = kDefaultBitCap);

}  // namespace eseq
