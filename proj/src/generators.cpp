#include "eseq/generators.hpp"

#include <cassert>
#include <memory>
#include <stdexcept>
#include <utility>

namespace eseq {

namespace {

constexpr std::size_t kFloorAdvanceCap = 20000;
constexpr std::size_t kCompareDepthCap = 10000;
// Largest convergent denominator q for which 3^q is still worth building.
constexpr unsigned long kComparePowerCap = 1000000;

std::uint64_t parse_u64(const std::string& item) {
  if (item.empty()) throw std::invalid_argument("empty list entry");
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(item, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an unsigned integer: " + item);
  }
  if (pos != item.size())
    throw std::invalid_argument("trailing characters in: " + item);
  return static_cast<std::uint64_t>(value);
}

struct MarkedList {
  std::vector<std::uint64_t> head;
  std::vector<std::uint64_t> cycle;
};

// "a,b,(c,d)" with at most one parenthesised tail.
MarkedList parse_marked_list(const std::string& text) {
  MarkedList out;
  bool in_cycle = false;
  bool closed = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ',') continue;
    std::string item = text.substr(start, i - start);
    start = i + 1;
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (closed) throw std::invalid_argument("entries after closing paren");
    if (!item.empty() && item.front() == '(') {
      if (in_cycle) throw std::invalid_argument("nested paren");
      in_cycle = true;
      item.erase(item.begin());
    }
    if (!item.empty() && item.back() == ')') {
      if (!in_cycle) throw std::invalid_argument("unmatched paren");
      closed = true;
      item.pop_back();
    }
    std::uint64_t value = parse_u64(item);
    (in_cycle ? out.cycle : out.head).push_back(value);
    if (closed) in_cycle = false;
  }
  if (in_cycle) throw std::invalid_argument("unterminated paren");
  return out;
}

int side_against_log2_3(const Int& p, const Int& q) {
  if (!p.fits_ulong_p() || !q.fits_ulong_p())
    throw DepthExhausted("convergent exceeds the power-comparison range");
  unsigned long qq = mpz_get_ui(q.get_mpz_t());
  if (qq > kComparePowerCap)
    throw DepthExhausted("power comparison cap exceeded");
  return cmp_pow2_pow3(mpz_get_ui(p.get_mpz_t()), qq);
}

}  // namespace

Theta Theta::rational_value(Rat value) {
  Theta t;
  t.kind = Kind::Rational;
  t.rational = std::move(value);
  t.rational.canonicalize();
  return t;
}

Theta Theta::log2_3() {
  Theta t;
  t.kind = Kind::Log2Of3;
  return t;
}

Theta Theta::continued_fraction(ContinuedFraction cf) {
  if (cf.head.empty() && cf.cycle.empty())
    throw std::invalid_argument("empty continued fraction");
  for (std::size_t i = 1; i < cf.head.size(); ++i)
    if (cf.head[i] == 0)
      throw std::invalid_argument("zero partial quotient");
  for (std::uint64_t a : cf.cycle)
    if (a == 0) throw std::invalid_argument("zero partial quotient");
  Theta t;
  t.kind = Kind::ContinuedFraction;
  t.cf = std::move(cf);
  return t;
}

Theta Theta::parse(const std::string& text) {
  if (text == "log2_3") return log2_3();
  if (text.rfind("cf:", 0) == 0) {
    MarkedList list = parse_marked_list(text.substr(3));
    ContinuedFraction cf;
    cf.head = std::move(list.head);
    cf.cycle = std::move(list.cycle);
    return continued_fraction(std::move(cf));
  }
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return rational_value(ratio(Int(text), 1));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (sgn(den) <= 0) throw std::invalid_argument("denominator");
    return rational_value(ratio(num, den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unrecognised theta: " + text);
  }
}

std::string Theta::to_text() const {
  switch (kind) {
    case Kind::Log2Of3:
      return "log2_3";
    case Kind::Rational: {
      if (rational.get_den() == 1) return rational.get_num().get_str();
      return rat_string(rational);
    }
    case Kind::ContinuedFraction: {
      std::string out = "cf:";
      for (std::size_t i = 0; i < cf.head.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cf.head[i]);
      }
      if (!cf.cycle.empty()) {
        if (!cf.head.empty()) out += ',';
        out += '(';
        for (std::size_t i = 0; i < cf.cycle.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(cf.cycle[i]);
        }
        out += ')';
      }
      return out;
    }
  }
  return "";
}

bool theta_is_irrational_by_rule(const Theta& theta) {
  switch (theta.kind) {
    case Theta::Kind::Log2Of3:
      return true;
    case Theta::Kind::ContinuedFraction:
      return !theta.cf.cycle.empty();
    case Theta::Kind::Rational:
      return false;
  }
  return false;
}

ConvergentSequence::ConvergentSequence(ContinuedFraction cf)
    : cf_(std::move(cf)) {}

std::optional<std::uint64_t> ConvergentSequence::coefficient(
    std::size_t i) const {
  if (i < cf_.head.size()) return cf_.head[i];
  if (cf_.cycle.empty()) return std::nullopt;
  return cf_.cycle[(i - cf_.head.size()) % cf_.cycle.size()];
}

bool ConvergentSequence::advance() {
  std::size_t i = num_.size();
  std::optional<std::uint64_t> a = coefficient(i);
  if (!a) return false;
  Int c(static_cast<unsigned long>(*a));
  // Seeds h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1.
  Int h1 = i >= 1 ? num_[i - 1] : Int(1);
  Int h2 = i >= 2 ? num_[i - 2] : Int(i == 1 ? 1 : 0);
  Int k1 = i >= 1 ? den_[i - 1] : Int(0);
  Int k2 = i >= 2 ? den_[i - 2] : Int(i == 1 ? 0 : 1);
  num_.push_back(Int(c * h1 + h2));
  den_.push_back(Int(c * k1 + k2));
  return true;
}

namespace {

struct Enclosure {
  Rat lo;
  Rat hi;
};

// Tightest interval known to contain theta after the convergents produced
// so far: consecutive convergents while deepening, the prefix interval
// (last convergent, mediant with its predecessor) once a finite expansion
// is exhausted.
Enclosure enclosure_of(const ConvergentSequence& cs, bool exhausted) {
  std::size_t m = cs.size();
  assert(m >= 1);
  Rat a, b;
  if (m == 1) {
    a = ratio(cs.num(0), 1);
    b = exhausted ? ratio(cs.num(0) + 1, 1) : a + 1;
  } else if (exhausted) {
    a = ratio(cs.num(m - 1), cs.den(m - 1));
    b = ratio(cs.num(m - 1) + cs.num(m - 2), cs.den(m - 1) + cs.den(m - 2));
  } else {
    a = ratio(cs.num(m - 1), cs.den(m - 1));
    b = ratio(cs.num(m - 2), cs.den(m - 2));
  }
  if (a > b) std::swap(a, b);
  return {a, b};
}

Int floor_mul(const Int& n, const Rat& q) {
  Int out;
  Int num = n * q.get_num();
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

// floor(n * theta) for the number enclosed by cs, deepening on demand.
Int cf_floor(ConvergentSequence& cs, const Int& n) {
  bool exhausted = false;
  if (cs.size() == 0) exhausted = !cs.advance();
  if (exhausted) throw std::invalid_argument("empty continued fraction");
  for (std::size_t round = 0; round < kFloorAdvanceCap; ++round) {
    Enclosure e = enclosure_of(cs, exhausted);
    Int f_lo = floor_mul(n, e.lo);
    Int f_hi = floor_mul(n, e.hi);
    if (f_lo == f_hi) return f_lo;
    if (exhausted || !cs.advance()) {
      exhausted = true;
      Enclosure tight = enclosure_of(cs, true);
      Int g_lo = floor_mul(n, tight.lo);
      Int g_hi = floor_mul(n, tight.hi);
      if (g_lo == g_hi) return g_lo;
      throw DepthExhausted("finite expansion cannot settle floor(n theta)");
    }
  }
  throw DepthExhausted("floor(n theta) failed to separate within the cap");
}

}  // namespace

Int floor_n_theta(const Theta& theta, const Int& n) {
  if (sgn(n) < 0) throw std::invalid_argument("n must be nonnegative");
  if (sgn(n) == 0) return 0;
  switch (theta.kind) {
    case Theta::Kind::Rational:
      return floor_mul(n, theta.rational);
    case Theta::Kind::Log2Of3: {
      if (!n.fits_ulong_p())
        throw DepthExhausted("n too large for the exact log2(3) floor");
      Int p3 = pow3(mpz_get_ui(n.get_mpz_t()));
      return Int(static_cast<unsigned long>(bit_length(p3) - 1));
    }
    case Theta::Kind::ContinuedFraction: {
      ConvergentSequence cs(theta.cf);
      return cf_floor(cs, n);
    }
  }
  throw std::logic_error("unreachable");
}

int compare_theta_log2_3(const Theta& theta) {
  switch (theta.kind) {
    case Theta::Kind::Log2Of3:
      return 0;
    case Theta::Kind::Rational: {
      try {
        return cmp_rat_log2_3(theta.rational);
      } catch (const std::domain_error&) {
        throw DepthExhausted("rational exceeds the power-comparison range");
      }
    }
    case Theta::Kind::ContinuedFraction:
      break;
  }
  ConvergentSequence cs(theta.cf);
  bool infinite = !theta.cf.cycle.empty();
  for (std::size_t i = 0; i < kCompareDepthCap; ++i) {
    if (!cs.advance()) break;
    if (!infinite) continue;
    int s = side_against_log2_3(cs.num(i), cs.den(i));
    // Even-index convergents sit below theta, odd-index ones above.
    if (i % 2 == 0 && s > 0) return 1;
    if (i % 2 == 1 && s < 0) return -1;
  }
  if (infinite)
    throw DepthExhausted("comparison depth cap exhausted");
  Enclosure e = enclosure_of(cs, true);
  int s_lo = side_against_log2_3(e.lo.get_num(), e.lo.get_den());
  int s_hi = side_against_log2_3(e.hi.get_num(), e.hi.get_den());
  if (s_lo == s_hi) return s_lo;
  throw DepthExhausted("finite expansion straddles log2(3)");
}

GeneratorSpec GeneratorSpec::explicit_terms_of(Terms terms) {
  GeneratorSpec g;
  g.kind = Kind::Explicit;
  g.explicit_terms = std::move(terms);
  return g;
}

GeneratorSpec GeneratorSpec::periodic_of(PeriodicSpec spec) {
  GeneratorSpec g;
  g.kind = Kind::Periodic;
  g.periodic = std::move(spec);
  return g;
}

GeneratorSpec GeneratorSpec::sturmian_of(Theta theta) {
  GeneratorSpec g;
  g.kind = Kind::Sturmian;
  g.theta = std::move(theta);
  return g;
}

GeneratorSpec GeneratorSpec::powers_of_two_marked() {
  GeneratorSpec g;
  g.kind = Kind::PowersOfTwoMarked;
  return g;
}

GeneratorSpec GeneratorSpec::squares_marked() {
  GeneratorSpec g;
  g.kind = Kind::SquaresMarked;
  return g;
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  if (text == "powers2") return powers_of_two_marked();
  if (text == "squares") return squares_marked();
  if (text.rfind("explicit:", 0) == 0)
    return explicit_terms_of(ESequencePrefix::parse(text.substr(9)).terms());
  if (text.rfind("periodic:", 0) == 0) {
    MarkedList list = parse_marked_list(text.substr(9));
    if (list.cycle.empty())
      throw std::invalid_argument("periodic generator needs a (cycle)");
    Terms all = list.head;
    all.insert(all.end(), list.cycle.begin(), list.cycle.end());
    for (std::uint64_t a : all)
      if (a == 0) throw std::invalid_argument("terms must be positive");
    return periodic_of(
        make_periodic_spec(list.head.size(), list.cycle.size(), all));
  }
  if (text.rfind("sturmian:", 0) == 0)
    return sturmian_of(Theta::parse(text.substr(9)));
  throw std::invalid_argument("unrecognised generator: " + text);
}

std::string GeneratorSpec::to_text() const {
  switch (kind) {
    case Kind::Explicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < explicit_terms.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(explicit_terms[i]);
      }
      return out;
    }
    case Kind::Periodic: {
      std::string out = "periodic:";
      const PeriodicSpec& p = *periodic;
      for (std::size_t i = 1; i <= p.l; ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p.terms.term(i));
      }
      if (p.l) out += ',';
      out += '(';
      for (std::size_t i = p.l + 1; i <= p.l + p.r; ++i) {
        if (i > p.l + 1) out += ',';
        out += std::to_string(p.terms.term(i));
      }
      out += ')';
      return out;
    }
    case Kind::Sturmian:
      return "sturmian:" + theta->to_text();
    case Kind::PowersOfTwoMarked:
      return "powers2";
    case Kind::SquaresMarked:
      return "squares";
  }
  return "";
}

std::optional<Rat> density_of(const GeneratorSpec& gen) {
  switch (gen.kind) {
    case GeneratorSpec::Kind::Explicit:
      return std::nullopt;
    case GeneratorSpec::Kind::Periodic:
      return ratio(Int(static_cast<unsigned long>(gen.periodic->s)),
                   Int(static_cast<unsigned long>(gen.periodic->r)));
    case GeneratorSpec::Kind::Sturmian:
      if (gen.theta->kind == Theta::Kind::Rational) return gen.theta->rational;
      return std::nullopt;
    case GeneratorSpec::Kind::PowersOfTwoMarked:
    case GeneratorSpec::Kind::SquaresMarked:
      return ratio(1, 1);
  }
  return std::nullopt;
}

TermSource make_term_source(const GeneratorSpec& gen) {
  switch (gen.kind) {
    case GeneratorSpec::Kind::Explicit: {
      auto state = std::make_shared<std::pair<Terms, std::size_t>>(
          gen.explicit_terms, 0);
      return [state]() -> std::optional<std::uint64_t> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
      };
    }
    case GeneratorSpec::Kind::Periodic: {
      auto spec = std::make_shared<PeriodicSpec>(*gen.periodic);
      auto i = std::make_shared<std::size_t>(0);
      return [spec, i]() -> std::optional<std::uint64_t> {
        return unrolled_term(*spec, ++*i);
      };
    }
    case GeneratorSpec::Kind::Sturmian:
      break;
    case GeneratorSpec::Kind::PowersOfTwoMarked: {
      auto n = std::make_shared<std::uint64_t>(0);
      return [n]() -> std::optional<std::uint64_t> {
        ++*n;
        bool mark = *n >= 2 && (*n & (*n - 1)) == 0;
        return mark ? 2 : 1;
      };
    }
    case GeneratorSpec::Kind::SquaresMarked: {
      auto state = std::make_shared<std::pair<std::uint64_t, std::uint64_t>>(
          0, 2);
      return [state]() -> std::optional<std::uint64_t> {
        std::uint64_t n = ++state->first;
        if (n == state->second * state->second) {
          ++state->second;
          return 2;
        }
        return 1;
      };
    }
  }
  const Theta& theta = *gen.theta;
  struct SturmianState {
    Theta theta;
    std::unique_ptr<ConvergentSequence> cs;
    Int n = 0;
    Int prev = 0;
    Int p3 = 1;
  };
  auto st = std::make_shared<SturmianState>();
  st->theta = theta;
  switch (theta.kind) {
    case Theta::Kind::Rational:
      if (theta.rational < 1)
        throw std::invalid_argument("sturmian density must be at least 1");
      break;
    case Theta::Kind::ContinuedFraction: {
      if (theta.cf.head.empty() ? theta.cf.cycle[0] < 1 : theta.cf.head[0] < 1)
        throw std::invalid_argument("sturmian density must be at least 1");
      st->cs = std::make_unique<ConvergentSequence>(theta.cf);
      break;
    }
    case Theta::Kind::Log2Of3:
      break;
  }
  return [st]() -> std::optional<std::uint64_t> {
    Int f;
    switch (st->theta.kind) {
      case Theta::Kind::Rational:
        st->n += 1;
        f = floor_mul(st->n, st->theta.rational);
        break;
      case Theta::Kind::Log2Of3:
        st->p3 *= 3;
        f = static_cast<unsigned long>(bit_length(st->p3) - 1);
        break;
      case Theta::Kind::ContinuedFraction:
        st->n += 1;
        f = cf_floor(*st->cs, st->n);
        break;
    }
    Int step = f - st->prev;
    st->prev = f;
    assert(step.fits_ulong_p());
    return mpz_get_ui(step.get_mpz_t());
  };
}

OmegaReport omega_limit(const GeneratorSpec& gen, const OmegaOptions& options) {
  OmegaReport report = omega_limit(make_term_source(gen), options);
  // A periodic generator never exhausts, but its whole sequence is known, so
  // the cycle decision procedure can certify convergence that no finite
  // prefix can.  Certified divergence stays with the periodic analyzer; the
  // threshold crossing already reported above is the only divergence signal
  // this run emits.
  if (gen.kind == GeneratorSpec::Kind::Periodic &&
      report.verdict.kind == VerdictKind::Inconclusive &&
      !report.bit_cap_aborted) {
    PeriodicDecision dec = decide(*gen.periodic, options.bit_cap);
    if (dec.verdict.kind == VerdictKind::ConvergentTo) report.verdict = dec.verdict;
  }
  return report;
}

}  // namespace eseq
