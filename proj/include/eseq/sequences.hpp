#pragma once

#include <cstddef>
#include <string>

#include "eseq/bigint.hpp"

namespace eseq {

// Finite prefix (a_1, ..., a_n) of exponents; every term is >= 1, empty is
// allowed.  Indexing in the API is 1-based to match the recurrences.
class ESequencePrefix {
 public:
  ESequencePrefix() = default;
  explicit ESequencePrefix(Terms terms);

  // Parses "1,4,2".  Whitespace around commas is accepted.
  static ESequencePrefix parse(const std::string& text);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::uint64_t term(std::size_t i) const;  // a_i, 1-based
  const Terms& terms() const { return terms_; }
  void push_back(std::uint64_t term);

  bool operator==(const ESequencePrefix&) const = default;

 private:
  Terms terms_;
};

// b_n = sum of the first n terms, B_n via B_n = 3 B_{n-1} + 2^{b_{n-1}} with
// b_0 = B_0 = 0.  Extension by one term costs O(1) bignum operations.
struct Accumulators {
  std::uint64_t b = 0;
  Int B = 0;
  std::size_t n = 0;

  void extend(std::uint64_t term, std::uint64_t bit_cap = kDefaultBitCap);
};

Accumulators accumulate(const ESequencePrefix& prefix,
                        std::uint64_t bit_cap = kDefaultBitCap);

// Block accumulators b_u^v, B_u^v with the degenerate values B_u^{v} = 1 at
// v = u-1 and B_u^{v} = 0 at v = u-2 (b is 0 for both).  b_1^n = b_n and
// B_1^{n-1} = B_n.
struct BlockAccumulators {
  std::size_t u = 1;
  std::size_t v = 0;
  std::uint64_t b = 0;
  Int B = 1;
};

// Requires 1 <= u, v + 2 >= u, v <= prefix.size().  The v = u-2 sentinel is
// only reachable for u >= 2 (v is unsigned); B_1^{-1} is handled by callers.
BlockAccumulators accumulate_block(const ESequencePrefix& prefix,
                                   std::size_t u, std::size_t v,
                                   std::uint64_t bit_cap = kDefaultBitCap);

// Checks B_n = 3^{n-u+1} B_1^{u-2} + 3^{n-1-v} 2^{b_{u-1}} B_u^v
//             + 2^{b_{v+1}} B_{v+2}^{n-1} for 1 <= u <= v <= n-2.
bool split_identity_holds(const ESequencePrefix& prefix, std::size_t u,
                          std::size_t v,
                          std::uint64_t bit_cap = kDefaultBitCap);

}  // namespace eseq
