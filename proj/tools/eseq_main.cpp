#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "eseq/criteria.hpp"
#include "eseq/generators.hpp"
#include "eseq/periodic.hpp"
#include "eseq/sequences.hpp"
#include "eseq/solver.hpp"
#include "eseq/trajectory.hpp"
#include "eseq/verdict.hpp"

namespace {

using eseq::Int;
using eseq::Rat;
using eseq::Terms;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Record rendering: JSON lines (schema-versioned) or CSV with fixed headers.

struct Row {
  ordered_json json = ordered_json::object();
  std::map<std::string, std::string> csv;

  Row& str(const std::string& key, const std::string& value) {
    json[key] = value;
    csv[key] = value;
    return *this;
  }
  Row& num(const std::string& key, std::uint64_t value) {
    json[key] = value;
    csv[key] = std::to_string(value);
    return *this;
  }
  Row& inum(const std::string& key, std::int64_t value) {
    json[key] = value;
    csv[key] = std::to_string(value);
    return *this;
  }
  Row& boolean(const std::string& key, bool value) {
    json[key] = value;
    csv[key] = value ? "true" : "false";
    return *this;
  }
  Row& terms_list(const std::string& key, const Terms& value) {
    json[key] = value;
    std::string joined;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) joined += ';';
      joined += std::to_string(value[i]);
    }
    csv[key] = joined;
    return *this;
  }
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string render_row(const Row& row, bool csv,
                       const std::vector<std::string>& columns) {
  if (!csv) {
    ordered_json j = ordered_json::object();
    j["schema"] = 1;
    for (auto it = row.json.begin(); it != row.json.end(); ++it) {
      j[it.key()] = it.value();
    }
    return j.dump();
  }
  std::string line;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) line += ',';
    auto it = row.csv.find(columns[i]);
    if (it != row.csv.end()) line += csv_escape(it->second);
  }
  return line;
}

class Sink {
 public:
  Sink(const std::string& path, bool csv, std::vector<std::string> columns)
      : csv_(csv), columns_(std::move(columns)) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
    if (csv_) {
      std::string header;
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) header += ',';
        header += columns_[i];
      }
      *out_ << header << "\n";
    }
  }

  void write(const Row& row) { *out_ << render_row(row, csv_, columns_) << "\n"; }
  void write_line(const std::string& line) { *out_ << line << "\n"; }

  bool csv() const { return csv_; }
  const std::vector<std::string>& columns() const { return columns_; }

 private:
  bool csv_;
  std::vector<std::string> columns_;
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

// ---------------------------------------------------------------------------
// Shared option parsing helpers.

struct CommonOptions {
  std::string format = "json";
  std::string output;
  std::uint64_t bit_cap = eseq::kDefaultBitCap;

  bool csv() const { return format == "csv"; }
};

Int parse_threshold(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    return eseq::pow2(std::stoull(text.substr(2)));
  }
  Int v(text);
  if (v < 1) throw std::invalid_argument("threshold must be >= 1");
  return v;
}

Int parse_odd_start(const std::string& text) {
  Int x(text);
  if (x < 1 || !eseq::is_odd(x)) {
    throw std::invalid_argument("x must be an odd integer >= 1");
  }
  return x;
}

void add_verdict_cells(Row* row, const eseq::Verdict& verdict) {
  row->str("verdict", eseq::to_string(verdict.kind));
  if (verdict.witness) row->str("witness", verdict.witness->get_str());
  if (!verdict.criterion.empty()) row->str("criterion", verdict.criterion);
}

// ---------------------------------------------------------------------------
// trajectory

int cmd_trajectory(const std::string& x_text, std::uint64_t n,
                   const CommonOptions& opt) {
  Int x = parse_odd_start(x_text);
  Sink sink(opt.output, opt.csv(), {"type", "k", "x", "a", "b", "B"});
  eseq::Accumulators acc;
  Int current = x;
  for (std::uint64_t k = 1; k <= n; ++k) {
    eseq::StepResult st;
    try {
      st = eseq::step(current);
      acc.extend(st.exponent, opt.bit_cap);
    } catch (const eseq::BitCapExceeded& e) {
      std::cerr << e.what() << "\n";
      return 3;
    }
    current = st.value;
    Row row;
    row.str("type", "trajectory-step")
        .num("k", k)
        .str("x", current.get_str())
        .num("a", st.exponent)
        .num("b", acc.b)
        .str("B", acc.B.get_str());
    sink.write(row);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// omega

int cmd_omega(const std::string& gen_text, const std::string& x_text,
              std::size_t max_n, const std::string& threshold_text,
              std::size_t stride, const CommonOptions& opt) {
  if (gen_text.empty() == x_text.empty()) {
    throw std::invalid_argument("pass exactly one of --gen and --x");
  }
  eseq::GeneratorSpec gen;
  if (!x_text.empty()) {
    Int x = parse_odd_start(x_text);
    // Stop at 1: past that point the E-sequence is the fixed cycle (2,2,...),
    // and the finite stream lets omega_limit verify every term it consumed.
    eseq::Trajectory traj = eseq::e_sequence_of(x, max_n, true, opt.bit_cap);
    gen = eseq::GeneratorSpec::explicit_terms_of(traj.exponents);
  } else {
    gen = eseq::GeneratorSpec::parse(gen_text);
  }
  eseq::OmegaOptions options;
  options.max_n = max_n;
  options.threshold = parse_threshold(threshold_text);
  options.bit_cap = opt.bit_cap;
  options.stride = stride;
  eseq::OmegaReport report = eseq::omega_limit(gen, options);

  Sink sink(opt.output, opt.csv(),
            {"type", "n", "x0", "verdict", "witness", "criterion", "depth",
             "threshold", "aborted"});
  for (const auto& [n, x0] : report.series) {
    Row row;
    row.str("type", "omega-sample").num("n", n).str("x0", x0.get_str());
    sink.write(row);
  }
  Row summary;
  summary.str("type", "omega-summary");
  add_verdict_cells(&summary, report.verdict);
  summary.num("depth", report.depth)
      .str("threshold", report.threshold.get_str())
      .boolean("aborted", report.bit_cap_aborted);
  sink.write(summary);
  return report.bit_cap_aborted ? 3 : 0;
}

// ---------------------------------------------------------------------------
// periodic

int cmd_periodic(const std::string& prefix_text, const std::string& cycle_text,
                 const CommonOptions& opt) {
  Terms all;
  if (!prefix_text.empty()) {
    all = eseq::ESequencePrefix::parse(prefix_text).terms();
  }
  const std::size_t l = all.size();
  Terms cycle = eseq::ESequencePrefix::parse(cycle_text).terms();
  all.insert(all.end(), cycle.begin(), cycle.end());
  eseq::PeriodicSpec spec =
      eseq::make_periodic_spec(l, cycle.size(), all, opt.bit_cap);
  eseq::PeriodicDecision dec = eseq::decide(spec, opt.bit_cap);

  Sink sink(opt.output, opt.csv(),
            {"type", "l", "r", "terms", "s", "b_l", "B_r", "x_cycle",
             "x0_candidate", "verdict", "witness", "criterion", "canonical_l",
             "canonical_r"});
  Row row;
  row.str("type", "periodic-verdict")
      .num("l", spec.l)
      .num("r", spec.r)
      .terms_list("terms", all)
      .num("s", spec.s)
      .num("b_l", spec.b_l)
      .str("B_r", spec.B_r.get_str())
      .str("x_cycle", eseq::rat_string(dec.x_cycle));
  if (dec.x0_candidate) {
    row.str("x0_candidate", eseq::rat_string(*dec.x0_candidate));
  }
  add_verdict_cells(&row, dec.verdict);
  row.num("canonical_l", dec.canonical.l).num("canonical_r", dec.canonical.r);
  sink.write(row);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep-periodic

int cmd_sweep_periodic(std::size_t l_max, std::size_t r_max,
                       std::uint64_t term_max, unsigned threads,
                       const CommonOptions& opt) {
  struct Item {
    std::size_t l;
    std::size_t r;
    Terms terms;
  };
  std::vector<Item> items;
  for (std::size_t l = 0; l <= l_max; ++l) {
    for (std::size_t r = 1; r <= r_max; ++r) {
      if (term_max == 0) continue;
      Terms digits(l + r, 1);
      while (true) {
        items.push_back({l, r, digits});
        // odometer with a_1 most significant: lexicographic order
        std::size_t i = digits.size();
        while (i > 0 && digits[i - 1] == term_max) digits[--i] = 1;
        if (i == 0) break;
        digits[i - 1] += 1;
      }
    }
  }

  Sink sink(opt.output, opt.csv(),
            {"type", "l", "r", "terms", "s", "verdict", "witness", "criterion",
             "aborted"});
  std::vector<std::string> lines(items.size());
  auto worker = [&](unsigned w, unsigned total) {
    for (std::size_t i = w; i < items.size(); i += total) {
      const Item& item = items[i];
      Row row;
      row.str("type", "sweep-verdict")
          .num("l", item.l)
          .num("r", item.r)
          .terms_list("terms", item.terms);
      try {
        eseq::PeriodicSpec spec =
            eseq::make_periodic_spec(item.l, item.r, item.terms, opt.bit_cap);
        eseq::PeriodicSpec canon = eseq::canonicalize(spec, opt.bit_cap);
        if (canon.l != item.l || canon.r != item.r) continue;  // not canonical
        eseq::PeriodicDecision dec = eseq::decide(spec, opt.bit_cap);
        row.num("s", spec.s);
        add_verdict_cells(&row, dec.verdict);
        row.boolean("aborted", false);
      } catch (const eseq::BitCapExceeded&) {
        row.boolean("aborted", true);
      }
      lines[i] = render_row(row, sink.csv(), sink.columns());
    }
  };
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w, threads);
    for (std::thread& t : pool) t.join();
  }
  for (const std::string& line : lines) {
    if (!line.empty()) sink.write_line(line);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sturmian

int cmd_sturmian(const std::string& theta_text, std::size_t max_n,
                 const CommonOptions& opt) {
  eseq::Theta theta = eseq::Theta::parse(theta_text);
  eseq::SturmianReport report = eseq::sturmian_verdict(theta, max_n, opt.bit_cap);

  Sink sink(opt.output, opt.csv(),
            {"type", "theta", "terms", "s", "r", "side", "depth", "bound",
             "verdict", "criterion", "family", "convergents"});
  Row head;
  head.str("type", "sturmian-terms")
      .str("theta", theta.to_text())
      .terms_list("terms", report.terms);
  sink.write(head);
  if (report.certificate) {
    for (const eseq::ValidatedConvergent& vc : report.certificate->convergents) {
      Row row;
      row.str("type", "sturmian-convergent")
          .str("s", vc.s.get_str())
          .str("r", vc.r.get_str())
          .inum("side", vc.side)
          .num("depth", vc.depth);
      if (vc.depth != 0) row.str("bound", eseq::rat_string(vc.lower_bound));
      sink.write(row);
    }
    for (const auto& [depth, bound] : report.certificate->lower_bounds) {
      Row row;
      row.str("type", "sturmian-bound")
          .num("depth", depth)
          .str("bound", eseq::rat_string(bound));
      sink.write(row);
    }
  }
  Row summary;
  summary.str("type", "sturmian-summary").str("theta", theta.to_text());
  add_verdict_cells(&summary, report.verdict);
  if (report.certificate) {
    summary.str("family", report.certificate->family)
        .num("convergents", report.certificate->convergents.size());
  }
  sink.write(summary);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyState {
  Sink* sink;
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;

  // row carries only the counterexample cells; type/suite are added here.
  void violation(const Row& row) {
    ++violations;
    Row out;
    out.str("type", "verify-violation").str("suite", suite);
    for (auto it = row.json.begin(); it != row.json.end(); ++it) {
      out.json[it.key()] = it.value();
    }
    out.csv.insert(row.csv.begin(), row.csv.end());
    sink->write(out);
  }
};

void verify_bounds45(VerifyState* state, std::uint64_t n_max) {
  Rat product = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t k = 3 * (n - 1); k < 3 * n; ++k) {
      if (k % 6 == 1 || k % 6 == 5) {
        product *= eseq::ratio(3 * Int(k) + 1, 3 * Int(k));
      }
    }
    Rat bound = eseq::three_halves_ninth_root_lower(n);
    ++state->checked;
    if (!(product < bound)) {
      Row row;
      row.num("n", n).str("detail", eseq::rat_string(product) +
                                        " not below " + eseq::rat_string(bound));
      state->violation(std::move(row));
    }
  }
}

void verify_bounds48(VerifyState* state, std::uint64_t n_max) {
  for (std::uint64_t x = 1; x <= n_max; ++x) {
    for (std::uint64_t n = 1; n <= x; ++n) {
      ++state->checked;
      if (!eseq::shifted_product_bounds_hold(Int(x), n)) {
        Row row;
        row.num("x", x).num("n", n);
        state->violation(std::move(row));
      }
    }
  }
}

void verify_diagnostics410(VerifyState* state, std::uint64_t n_max,
                           std::uint64_t bit_cap) {
  for (std::uint64_t x = 1; x < n_max; x += 2) {
    eseq::Trajectory traj = eseq::e_sequence_of(Int(x), 100000, true, bit_cap);
    if (!traj.reached_one) continue;
    eseq::ESequencePrefix prefix;
    for (std::size_t n = 1; n <= traj.size(); ++n) {
      prefix.push_back(traj.exponents[n - 1]);
      eseq::PositionalReport report;
      try {
        report = eseq::positional_diagnostics(prefix, bit_cap);
      } catch (const std::domain_error&) {
        continue;  // forced chain not distinct at this depth
      }
      ++state->checked;
      if (!report.consistent()) {
        Row row;
        row.num("x", x).num("n", n);
        state->violation(std::move(row));
      }
    }
  }
}

void verify_split26(VerifyState* state, std::uint64_t n_max,
                    std::uint64_t samples, std::uint64_t seed,
                    std::uint64_t bit_cap) {
  if (n_max < 4) throw std::invalid_argument("split26 needs n_max >= 4");
  std::mt19937_64 rng(seed);
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    Terms terms(n_max);
    for (std::uint64_t& t : terms) t = 1 + rng() % 4;
    eseq::ESequencePrefix prefix{terms};
    std::size_t u = 1 + rng() % (n_max - 2);
    std::size_t v = u + rng() % (n_max - 1 - u);
    ++state->checked;
    if (!eseq::split_identity_holds(prefix, u, v, bit_cap)) {
      Row row;
      row.num("sample", sample).num("u", u).num("v", v);
      row.terms_list("terms", terms);
      state->violation(std::move(row));
    }
  }
}

void verify_mw41(VerifyState* state, std::uint64_t n_max, std::uint64_t samples,
                 std::uint64_t seed, std::uint64_t bit_cap) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    std::uint64_t raw = rng() & ((std::uint64_t{1} << 59) - 1);
    Int x = 2 * Int(raw) + 1;
    eseq::Trajectory traj = eseq::e_sequence_of(x, n_max, false, bit_cap);
    ++state->checked;
    if (!eseq::matthews_watts_holds(traj, bit_cap)) {
      Row row;
      row.str("x", x.get_str());
      state->violation(std::move(row));
    }
  }
}

int cmd_verify(const std::string& suite, std::uint64_t n_max,
               std::uint64_t samples, std::uint64_t seed,
               const CommonOptions& opt) {
  Sink sink(opt.output, opt.csv(),
            {"type", "suite", "n_max", "samples", "seed", "checked",
             "violations", "pass", "x", "n", "u", "v", "sample", "terms",
             "detail"});
  VerifyState state;
  state.sink = &sink;
  state.suite = suite;

  std::uint64_t effective_n_max = n_max;
  if (suite == "bounds45") {
    if (effective_n_max == 0) effective_n_max = 2000;
    verify_bounds45(&state, effective_n_max);
  } else if (suite == "bounds48") {
    if (effective_n_max == 0) effective_n_max = 100;
    verify_bounds48(&state, effective_n_max);
  } else if (suite == "diagnostics410") {
    if (effective_n_max == 0) effective_n_max = 10000;
    verify_diagnostics410(&state, effective_n_max, opt.bit_cap);
  } else if (suite == "split26") {
    if (effective_n_max == 0) effective_n_max = 60;
    verify_split26(&state, effective_n_max, samples, seed, opt.bit_cap);
  } else if (suite == "mw41") {
    if (effective_n_max == 0) effective_n_max = 200;
    verify_mw41(&state, effective_n_max, samples, seed, opt.bit_cap);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }

  Row summary;
  summary.str("type", "verify-result")
      .str("suite", suite)
      .num("n_max", effective_n_max)
      .num("samples", samples)
      .num("seed", seed)
      .num("checked", state.checked)
      .num("violations", state.violations)
      .boolean("pass", state.violations == 0);
  sink.write(summary);
  return state.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for E-sequences of the 3x+1 map"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Config file with option defaults (key=value, [subcommand] "
                 "sections)");

  CommonOptions common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", common.output, "Write records to a file");
  app.add_option("--bit-cap", common.bit_cap,
                 "Maximum b_n bit size before aborting")
      ->envname("ESEQ_BIT_CAP")
      ->check(CLI::Range(std::uint64_t{64},
                         std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();

  std::string x_text;
  std::uint64_t steps = 1;
  CLI::App* trajectory = app.add_subcommand(
      "trajectory", "Exact odd trajectory with exponents and accumulators");
  trajectory->fallthrough();
  trajectory->add_option("--x", x_text, "Odd start value (decimal)")->required();
  trajectory->add_option("--n", steps, "Number of steps")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string omega_gen;
  std::string omega_x;
  std::size_t omega_max_n = 1000;
  std::string omega_threshold = "2^256";
  std::size_t omega_stride = 0;
  CLI::App* omega = app.add_subcommand(
      "omega", "Track x_0^{1,n} along a generated E-sequence");
  omega->fallthrough();
  omega->add_option("--gen", omega_gen,
                    "Generator (explicit:..., periodic:..., sturmian:..., "
                    "powers2, squares)");
  omega->add_option("--x", omega_x, "Use the E-sequence of this odd start");
  omega->add_option("--max-n", omega_max_n, "Depth limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  omega->add_option("--threshold", omega_threshold,
                    "Divergence-evidence threshold (decimal or 2^k)")
      ->capture_default_str();
  omega->add_option("--stride", omega_stride,
                    "Series sampling stride (0: powers of two)")
      ->capture_default_str();

  std::string periodic_prefix;
  std::string periodic_cycle;
  CLI::App* periodic = app.add_subcommand(
      "periodic", "Decide an eventually periodic E-sequence");
  periodic->fallthrough();
  periodic->add_option("--prefix", periodic_prefix,
                       "Non-periodic head terms, comma separated");
  periodic->add_option("--periodic", periodic_cycle,
                       "Repeating terms, comma separated")
      ->required();

  std::size_t sweep_l_max = 0;
  std::size_t sweep_r_max = 0;
  std::uint64_t sweep_term_max = 0;
  unsigned sweep_threads = 1;
  CLI::App* sweep = app.add_subcommand(
      "sweep-periodic", "Decide every canonical periodic spec within bounds");
  sweep->fallthrough();
  sweep->add_option("--l-max", sweep_l_max, "Largest head length")->required();
  sweep->add_option("--r-max", sweep_r_max, "Largest cycle length")->required();
  sweep->add_option("--term-max", sweep_term_max, "Largest term value")
      ->required();
  sweep->add_option("--threads", sweep_threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string sturmian_theta;
  std::size_t sturmian_max_n = 200;
  CLI::App* sturmian = app.add_subcommand(
      "sturmian", "Verdict for Beatty-floor sequences [n theta] - [(n-1) theta]");
  sturmian->fallthrough();
  sturmian->add_option("--theta", sturmian_theta,
                       "Density: log2_3, a rational p/q, or cf:... terms")
      ->required();
  sturmian->add_option("--max-n", sturmian_max_n, "Terms to generate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string verify_suite;
  std::uint64_t verify_n_max = 0;
  std::uint64_t verify_samples = 500;
  std::uint64_t verify_seed = 12345;
  CLI::App* verify = app.add_subcommand(
      "verify", "Exact verification sweeps over library invariants");
  verify->fallthrough();
  verify->add_option("--suite", verify_suite, "Verification suite")
      ->required()
      ->check(CLI::IsMember(
          {"bounds45", "bounds48", "diagnostics410", "split26", "mw41"}));
  verify->add_option("--n-max", verify_n_max,
                     "Sweep bound (0: suite default)")
      ->capture_default_str();
  verify->add_option("--samples", verify_samples, "Random sample count")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Random seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(trajectory)) {
      return cmd_trajectory(x_text, steps, common);
    }
    if (app.got_subcommand(omega)) {
      return cmd_omega(omega_gen, omega_x, omega_max_n, omega_threshold,
                       omega_stride, common);
    }
    if (app.got_subcommand(periodic)) {
      return cmd_periodic(periodic_prefix, periodic_cycle, common);
    }
    if (app.got_subcommand(sweep)) {
      return cmd_sweep_periodic(sweep_l_max, sweep_r_max, sweep_term_max,
                                sweep_threads, common);
    }
    if (app.got_subcommand(sturmian)) {
      return cmd_sturmian(sturmian_theta, sturmian_max_n, common);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(verify_suite, verify_n_max, verify_samples, verify_seed,
                        common);
    }
  } catch (const eseq::BitCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const eseq::DepthExhausted& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
