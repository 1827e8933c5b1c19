#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eseq/bigint.hpp"
#include "eseq/periodic.hpp"
#include "eseq/solver.hpp"

namespace eseq {

// Simple continued fraction [head[0]; head[1], ...] with an optional
// repeating tail.  A nonempty cycle denotes an infinite expansion (a
// quadratic irrational); an empty cycle is a depth-limited prefix of an
// unknown number, and questions it cannot settle raise DepthExhausted.
struct ContinuedFraction {
  std::vector<std::uint64_t> head;
  std::vector<std::uint64_t> cycle;
};

struct Theta {
  enum class Kind { Rational, Log2Of3, ContinuedFraction };
  Kind kind = Kind::Rational;
  Rat rational;
  ContinuedFraction cf;

  static Theta rational_value(Rat value);
  static Theta log2_3();
  static Theta continued_fraction(ContinuedFraction cf);
  // Accepts "log2_3", "p/q", "n", "cf:a0,a1,..." with an optional
  // parenthesised repeating tail as in "cf:1,(2)".
  static Theta parse(const std::string& text);
  std::string to_text() const;
};

// True when the representation itself proves irrationality: log2(3), or an
// infinite (eventually periodic) continued fraction.
bool theta_is_irrational_by_rule(const Theta& theta);

// Convergents h_i/k_i of a continued fraction, extended on demand.
class ConvergentSequence {
 public:
  explicit ConvergentSequence(ContinuedFraction cf);
  // Appends the next convergent; false when a finite expansion is exhausted.
  bool advance();
  std::size_t size() const { return num_.size(); }
  const Int& num(std::size_t i) const { return num_.at(i); }
  const Int& den(std::size_t i) const { return den_.at(i); }

 private:
  std::optional<std::uint64_t> coefficient(std::size_t i) const;
  ContinuedFraction cf_;
  std::vector<Int> num_;
  std::vector<Int> den_;
};

// floor(n * theta), exact.  Continued fractions are evaluated by squeezing
// n*theta between consecutive convergents, deepening on demand; a finite
// expansion that cannot settle the floor raises DepthExhausted.
Int floor_n_theta(const Theta& theta, const Int& n);

// Sign of theta - log2(3), decided exactly through power comparisons
// 2^p <=> 3^q.  Returns 0 only for the Log2Of3 kind.  Raises DepthExhausted
// when a depth-limited expansion leaves the sign open or the search caps out.
int compare_theta_log2_3(const Theta& theta);

struct GeneratorSpec {
  enum class Kind {
    Explicit,
    Periodic,
    Sturmian,
    PowersOfTwoMarked,
    SquaresMarked,
  };
  Kind kind = Kind::Explicit;
  Terms explicit_terms;
  std::optional<PeriodicSpec> periodic;
  std::optional<Theta> theta;

  static GeneratorSpec explicit_terms_of(Terms terms);
  static GeneratorSpec periodic_of(PeriodicSpec spec);
  static GeneratorSpec sturmian_of(Theta theta);
  static GeneratorSpec powers_of_two_marked();
  static GeneratorSpec squares_marked();
  // Accepts "explicit:1,4,2", "periodic:1,4,(2,2)" (parenthesised cycle),
  // "sturmian:log2_3" / "sturmian:8/5" / "sturmian:cf:1,(2)",
  // "powers2", "squares".
  static GeneratorSpec parse(const std::string& text);
  std::string to_text() const;
};

// Exact limiting density b_n / n when the representation pins it down.
std::optional<Rat> density_of(const GeneratorSpec& gen);

// Term stream a_1, a_2, ...; Explicit generators end, the others do not.
TermSource make_term_source(const GeneratorSpec& gen);

// Runs the stream-level omega loop, then lifts an Inconclusive cutoff to
// ConvergentTo for periodic generators via the cycle decision procedure:
// a periodic generator's unseen tail is determined, so convergence there
// is theorem-backed rather than finite evidence.
OmegaReport omega_limit(const GeneratorSpec& gen, const OmegaOptions& options);

}  // namespace eseq
