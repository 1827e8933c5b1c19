#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eseq/bigint.hpp"

namespace eseq {

enum class VerdictKind {
  ConvergentTo,        // witness odd x whose E-sequence matches
  DivergentCertified,  // a theorem applies; criterion names the rule
  DivergentEvidence,   // x_0^{1,n} crossed the configured threshold
  Inconclusive,
};

const char* to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<Int> witness;  // set for ConvergentTo
  std::string criterion;       // rule slug for DivergentCertified, else empty

  static Verdict convergent(Int x) {
    return {VerdictKind::ConvergentTo, std::move(x), ""};
  }
  static Verdict certified(std::string rule) {
    return {VerdictKind::DivergentCertified, std::nullopt, std::move(rule)};
  }
  static Verdict evidence() {
    return {VerdictKind::DivergentEvidence, std::nullopt, ""};
  }
  static Verdict inconclusive() { return {}; }
};

// A continued-fraction convergent s/r used by a certificate, with the exact
// growth lower bound it yields at the given prefix depth.
struct ValidatedConvergent {
  Int s;
  Int r;
  int side = 0;  // -1: s/r < theta, +1: s/r > theta
  std::string role;
  std::size_t depth = 0;  // prefix length the bound applies to (0 if none)
  Rat lower_bound = 0;
};

// Certified-divergence evidence.  family is non-empty exactly when the
// witnessing pair/convergent family is infinite by the generator's rule;
// every lower bound is an exact rational that must not exceed the solver's
// x_0^{1,n} at that depth.
struct Certificate {
  std::string criterion;
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ValidatedConvergent> convergents;
  std::vector<std::pair<std::size_t, Rat>> lower_bounds;
};

}  // namespace eseq
