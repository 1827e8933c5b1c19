#include <stdexcept>

#include "doctest.h"
#include "eseq/generators.hpp"

using namespace eseq;

namespace {

Terms take(const TermSource& src, std::size_t n) {
  Terms out;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::uint64_t> t = src();
    if (!t) break;
    out.push_back(*t);
  }
  return out;
}

// floor(n sqrt(2)) = isqrt(2 n^2), exact.
Int floor_n_sqrt2(const Int& n) {
  Int sq = 2 * n * n;
  Int r;
  mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
  return r;
}

// floor(n (1+sqrt(5))/2) = (n + isqrt(5 n^2)) div 2, exact for n >= 1.
Int floor_n_phi(const Int& n) {
  Int sq = 5 * n * n;
  Int r;
  mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
  Int sum = n + r;
  return sum / 2;
}

}  // namespace

TEST_CASE("theta parsing round-trips") {
  Theta log23 = Theta::parse("log2_3");
  CHECK(log23.kind == Theta::Kind::Log2Of3);
  CHECK(log23.to_text() == "log2_3");

  Theta rat = Theta::parse("3/2");
  CHECK(rat.kind == Theta::Kind::Rational);
  CHECK(rat.rational == ratio(3, 2));

  Theta two = Theta::parse("2");
  CHECK(two.rational == Rat(2));

  Theta sqrt2 = Theta::parse("cf:1,(2)");
  CHECK(sqrt2.kind == Theta::Kind::ContinuedFraction);
  CHECK(sqrt2.cf.head == std::vector<std::uint64_t>({1}));
  CHECK(sqrt2.cf.cycle == std::vector<std::uint64_t>({2}));
  CHECK(sqrt2.to_text() == "cf:1,(2)");

  Theta finite = Theta::parse("cf:1,2,3");
  CHECK(finite.cf.head == std::vector<std::uint64_t>({1, 2, 3}));
  CHECK(finite.cf.cycle.empty());

  CHECK(Theta::parse("cf:1,(2,1)").to_text() == "cf:1,(2,1)");
  CHECK_THROWS_AS(Theta::parse("cf:"), std::invalid_argument);
  CHECK_THROWS_AS(Theta::parse("bogus"), std::invalid_argument);
}

TEST_CASE("irrationality by rule") {
  CHECK(theta_is_irrational_by_rule(Theta::log2_3()));
  CHECK(theta_is_irrational_by_rule(Theta::parse("cf:1,(2)")));
  CHECK(!theta_is_irrational_by_rule(Theta::parse("3/2")));
  CHECK(!theta_is_irrational_by_rule(Theta::parse("cf:1,2,3")));
}

TEST_CASE("convergents of sqrt(2) and the golden ratio") {
  ConvergentSequence cs(Theta::parse("cf:1,(2)").cf);
  const int num[] = {1, 3, 7, 17, 41, 99};
  const int den[] = {1, 2, 5, 12, 29, 70};
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(cs.advance());
    CHECK(cs.num(i) == num[i]);
    CHECK(cs.den(i) == den[i]);
  }

  ConvergentSequence fib(Theta::parse("cf:1,(1)").cf);
  const int fnum[] = {1, 2, 3, 5, 8, 13};
  const int fden[] = {1, 1, 2, 3, 5, 8};
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(fib.advance());
    CHECK(fib.num(i) == fnum[i]);
    CHECK(fib.den(i) == fden[i]);
  }

  ConvergentSequence finite(Theta::parse("cf:1,2").cf);
  CHECK(finite.advance());
  CHECK(finite.advance());
  CHECK(!finite.advance());
  CHECK(finite.num(1) == 3);
  CHECK(finite.den(1) == 2);
}

TEST_CASE("floor of n theta across representations") {
  Theta rat = Theta::parse("8/5");
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(floor_n_theta(rat, n) == Int(8 * n / 5));
  }

  Theta log23 = Theta::log2_3();
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(floor_n_theta(log23, n) == Int(bit_length(pow3(n)) - 1));
  }

  Theta sqrt2 = Theta::parse("cf:1,(2)");
  Theta phi = Theta::parse("cf:1,(1)");
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(floor_n_theta(sqrt2, n) == floor_n_sqrt2(n));
    CHECK(floor_n_theta(phi, n) == floor_n_phi(n));
  }
}

TEST_CASE("depth-limited prefixes refuse floors they cannot pin down") {
  Theta finite = Theta::parse("cf:1,2");
  CHECK(floor_n_theta(finite, 1) == 1);
  CHECK_THROWS_AS(floor_n_theta(finite, 2), DepthExhausted);
}

TEST_CASE("comparison against log2(3)") {
  CHECK(compare_theta_log2_3(Theta::log2_3()) == 0);
  CHECK(compare_theta_log2_3(Theta::parse("3/2")) == -1);
  CHECK(compare_theta_log2_3(Theta::parse("8/5")) == 1);
  CHECK(compare_theta_log2_3(Theta::parse("19/12")) == -1);
  CHECK(compare_theta_log2_3(Theta::parse("485/306")) == 1);
  CHECK(compare_theta_log2_3(Theta::parse("1054/665")) == -1);
  CHECK(compare_theta_log2_3(Theta::parse("cf:1,(2)")) == -1);
  CHECK(compare_theta_log2_3(Theta::parse("cf:1,(1)")) == 1);
  CHECK(compare_theta_log2_3(Theta::parse("cf:1,(2,1)")) == -1);
  CHECK(compare_theta_log2_3(Theta::parse("cf:1,(4)")) == -1);
}

TEST_CASE("finite prefixes compare only when the enclosure decides") {
  CHECK(compare_theta_log2_3(Theta::parse("cf:1,2")) == -1);
  CHECK(compare_theta_log2_3(Theta::parse("cf:1,1,2")) == 1);
  CHECK_THROWS_AS(compare_theta_log2_3(Theta::parse("cf:1,1,1,2,2")),
                  DepthExhausted);
}

TEST_CASE("generator specs parse and print") {
  GeneratorSpec e = GeneratorSpec::parse("explicit:1,4,2");
  CHECK(e.kind == GeneratorSpec::Kind::Explicit);
  CHECK(e.explicit_terms == Terms({1, 4, 2}));
  CHECK(e.to_text() == "explicit:1,4,2");

  GeneratorSpec p = GeneratorSpec::parse("periodic:1,4,(2)");
  CHECK(p.kind == GeneratorSpec::Kind::Periodic);
  REQUIRE(p.periodic.has_value());
  CHECK(p.periodic->l == 2);
  CHECK(p.periodic->r == 1);
  CHECK(p.to_text() == "periodic:1,4,(2)");

  GeneratorSpec s = GeneratorSpec::parse("sturmian:log2_3");
  CHECK(s.kind == GeneratorSpec::Kind::Sturmian);
  CHECK(s.to_text() == "sturmian:log2_3");
  CHECK(GeneratorSpec::parse("sturmian:cf:1,(2)").to_text() ==
        "sturmian:cf:1,(2)");

  CHECK(GeneratorSpec::parse("powers2").kind ==
        GeneratorSpec::Kind::PowersOfTwoMarked);
  CHECK(GeneratorSpec::parse("squares").kind ==
        GeneratorSpec::Kind::SquaresMarked);
  CHECK_THROWS_AS(GeneratorSpec::parse("periodic:1,4"), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec::parse("nope:1"), std::invalid_argument);
}

TEST_CASE("densities when the representation pins them down") {
  CHECK(!density_of(GeneratorSpec::parse("explicit:1,2")).has_value());
  CHECK(*density_of(GeneratorSpec::parse("periodic:1,4,(2)")) == Rat(2));
  CHECK(*density_of(GeneratorSpec::parse("periodic:(1,2)")) == ratio(3, 2));
  CHECK(*density_of(GeneratorSpec::parse("sturmian:8/5")) == ratio(8, 5));
  CHECK(*density_of(GeneratorSpec::parse("powers2")) == Rat(1));
  CHECK(*density_of(GeneratorSpec::parse("squares")) == Rat(1));
}

TEST_CASE("term sources") {
  CHECK(take(make_term_source(GeneratorSpec::parse("explicit:1,4,2")), 5) ==
        Terms({1, 4, 2}));
  CHECK(take(make_term_source(GeneratorSpec::parse("periodic:1,4,(2)")), 7) ==
        Terms({1, 4, 2, 2, 2, 2, 2}));
  CHECK(take(make_term_source(GeneratorSpec::parse("sturmian:log2_3")), 12) ==
        Terms({1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2}));
  CHECK(take(make_term_source(GeneratorSpec::parse("sturmian:cf:1,(2)")), 12) ==
        Terms({1, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 1}));
  CHECK(take(make_term_source(GeneratorSpec::parse("powers2")), 9) ==
        Terms({1, 2, 1, 2, 1, 1, 1, 2, 1}));
  CHECK(take(make_term_source(GeneratorSpec::parse("squares")), 10) ==
        Terms({1, 1, 1, 2, 1, 1, 1, 1, 2, 1}));
}

TEST_CASE("sturmian terms sum to the floor sequence") {
  // b_n = floor(n theta) for every Beatty generator.
  for (const char* text : {"sturmian:log2_3", "sturmian:cf:1,(2)",
                           "sturmian:cf:1,(1)", "sturmian:7/4"}) {
    GeneratorSpec gen = GeneratorSpec::parse(text);
    TermSource src = make_term_source(gen);
    std::uint64_t b = 0;
    for (std::uint64_t n = 1; n <= 120; ++n) {
      b += *src();
      CHECK(Int(b) == floor_n_theta(*gen.theta, n));
    }
  }
}
