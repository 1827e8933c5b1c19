#include <random>
#include <stdexcept>

#include "doctest.h"
#include "eseq/sequences.hpp"

using namespace eseq;

namespace {

ESequencePrefix random_prefix(std::uint64_t seed, std::size_t len,
                              std::uint64_t max_term) {
  std::mt19937_64 rng(seed);
  Terms t;
  for (std::size_t i = 0; i < len; ++i) t.push_back(1 + rng() % max_term);
  return ESequencePrefix(std::move(t));
}

}  // namespace

TEST_CASE("prefix parsing and indexing") {
  ESequencePrefix p = ESequencePrefix::parse("1, 4,2");
  CHECK(p == ESequencePrefix({1, 4, 2}));
  CHECK(p.size() == 3);
  CHECK(p.term(1) == 1);
  CHECK(p.term(2) == 4);
  CHECK(p.term(3) == 2);
  CHECK_THROWS_AS(p.term(4), std::out_of_range);
  CHECK_THROWS_AS(ESequencePrefix::parse("1,0,2"), std::invalid_argument);
  CHECK_THROWS_AS(ESequencePrefix::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(ESequencePrefix({1, 0}), std::invalid_argument);
  ESequencePrefix q;
  CHECK(q.empty());
  q.push_back(3);
  CHECK(q.term(1) == 3);
  CHECK_THROWS_AS(q.push_back(0), std::invalid_argument);
}

TEST_CASE("accumulators follow B_n = 3 B_{n-1} + 2^{b_{n-1}}") {
  Accumulators acc;
  acc.extend(1);
  CHECK(acc.b == 1);
  CHECK(acc.B == 1);
  acc.extend(4);
  CHECK(acc.b == 5);
  CHECK(acc.B == 5);
  acc.extend(2);
  CHECK(acc.b == 7);
  CHECK(acc.B == 47);
  CHECK(acc.n == 3);

  Accumulators whole = accumulate(ESequencePrefix({1, 1, 2, 3, 4}));
  CHECK(whole.b == 11);
  CHECK(whole.B == 347);
}

TEST_CASE("all-ones and all-twos prefixes have closed-form B_n") {
  Accumulators ones;
  Accumulators twos;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    ones.extend(1);
    twos.extend(2);
    CHECK(ones.B == pow3(n) - pow2(n));
    CHECK(twos.B == pow2(2 * n) - pow3(n));
  }
}

TEST_CASE("accumulator bit cap") {
  Accumulators acc;
  acc.extend(40, 64);
  CHECK_THROWS_AS(acc.extend(30, 64), BitCapExceeded);
  try {
    Accumulators a2;
    a2.extend(40, 64);
    a2.extend(30, 64);
  } catch (const BitCapExceeded& e) {
    CHECK(e.limit == 64);
    CHECK(e.attempted == 70);
  }
}

TEST_CASE("block accumulator sentinels and whole-prefix identities") {
  ESequencePrefix p = random_prefix(11, 14, 4);
  for (std::size_t u = 2; u + 2 <= p.size(); ++u) {
    BlockAccumulators lower = accumulate_block(p, u, u - 2);
    CHECK(lower.B == 0);
    CHECK(lower.b == 0);
    BlockAccumulators unit = accumulate_block(p, u, u - 1);
    CHECK(unit.B == 1);
    CHECK(unit.b == 0);
  }
  Accumulators whole = accumulate(p);
  CHECK(accumulate_block(p, 1, p.size()).b == whole.b);
  CHECK(accumulate_block(p, 1, p.size() - 1).B == whole.B);
}

TEST_CASE("block b equals the slice sum") {
  ESequencePrefix p = random_prefix(23, 16, 5);
  for (std::size_t u = 1; u <= p.size(); ++u) {
    std::uint64_t sum = 0;
    for (std::size_t v = u; v <= p.size(); ++v) {
      sum += p.term(v);
      CHECK(accumulate_block(p, u, v).b == sum);
    }
  }
}

TEST_CASE("block bounds are validated") {
  ESequencePrefix p({2, 1, 3});
  CHECK_THROWS_AS(accumulate_block(p, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(accumulate_block(p, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(accumulate_block(p, 5, 2), std::out_of_range);
}

TEST_CASE("split identity holds for every admissible cut") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    ESequencePrefix p = random_prefix(1000 + seed, 12, 4);
    for (std::size_t u = 1; u + 2 <= p.size(); ++u) {
      for (std::size_t v = u; v + 2 <= p.size(); ++v) {
        CHECK(split_identity_holds(p, u, v));
      }
    }
  }
}

TEST_CASE("split identity rejects out-of-range cuts") {
  ESequencePrefix p = random_prefix(77, 8, 3);
  CHECK_THROWS_AS(split_identity_holds(p, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(split_identity_holds(p, 4, 3), std::out_of_range);
  CHECK_THROWS_AS(split_identity_holds(p, 2, 7), std::out_of_range);
}
