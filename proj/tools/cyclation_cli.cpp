// cyclation: command-line front end for the random-cyclation library.
//
// Subcommands: counts, pmf, sample, zsample, constants, verify, converge,
// oracle.  Global flags --format csv|json and --out PATH.  Exit codes:
// 0 success, 2 invariant failure, 3 resource cap, 4 bad arguments.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclation/cyclation.hpp"
#include "json.hpp"

#ifndef CYCLATION_VERSION
#define CYCLATION_VERSION "unknown"
#endif

namespace {

using ojson = nlohmann::ordered_json;
using namespace cyclation;

std::string iso_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// The envelope carried by every JSON result: tool identity, version, RNG
// identity, and an echo of the parsed spec.  The timestamp field is
// excluded from the byte-determinism contract.
ojson make_envelope(ojson spec) {
  ojson j;
  j["tool"] = "cyclation";
  j["version"] = CYCLATION_VERSION;
  j["rng"] = Rng::identity();
  j["timestamp"] = iso_timestamp();
  j["spec"] = std::move(spec);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += '"';
  return q;
}

struct Sink {
  std::string format = "csv";
  std::string path;
};

int write_text(const Sink& sink, const std::string& text) {
  if (sink.path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(sink.path, std::ios::binary);
  if (!f) {
    std::cerr << "cyclation: cannot open output path: " << sink.path << "\n";
    return 4;
  }
  f << text;
  return 0;
}

int emit(const Sink& sink, ojson envelope, ojson data, const std::string& csv) {
  if (sink.format == "json") {
    envelope["data"] = std::move(data);
    return write_text(sink, envelope.dump(2) + "\n");
  }
  return write_text(sink, csv);
}

ojson rational_json(const BigRational& q) {
  ojson j;
  j["rational"] = rational_string(q);
  j["decimal"] = fmt_double(to_double(q));
  return j;
}

// "1+1+3": ascending parts of the weight-n partition behind a cycle type.
std::string partition_string(const CycleType& t) {
  std::string s;
  const auto& c = t.counts();
  for (size_t l = 1; l <= c.size(); ++l) {
    for (uint32_t r = 0; r < c[l - 1]; ++r) {
      if (!s.empty()) s += '+';
      s += std::to_string(l);
    }
  }
  return s.empty() ? "0" : s;
}

unsigned default_workers() {
  if (const char* env = std::getenv("CYCLATION_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    std::cerr << "cyclation: ignoring invalid CYCLATION_WORKERS value '" << env << "'\n";
  }
  return 1;
}

std::string histogram_csv(const Histogram& h, const std::string& key) {
  std::string csv = key + ",count\n";
  for (const auto& [v, c] : h) csv += std::to_string(v) + "," + std::to_string(c) + "\n";
  return csv;
}

ojson histogram_json(const Histogram& h) {
  ojson rows = ojson::array();
  for (const auto& [v, c] : h) {
    ojson r;
    r["value"] = v;
    r["count"] = c;
    rows.push_back(std::move(r));
  }
  return rows;
}

// --- subcommand payloads --------------------------------------------------

int run_counts(const Sink& sink, unsigned n, long long k_opt) {
  auto cy = cyclation_count_row(n);
  auto st = stirling_first_row(n);
  unsigned k_lo = 0, k_hi = n;
  if (k_opt >= 0) {
    k_lo = k_hi = static_cast<unsigned>(std::min<long long>(k_opt, n));
    if (static_cast<unsigned long long>(k_opt) > n) {
      // out-of-range k is a legal query with count 0
      ojson spec;
      spec["mode"] = "counts";
      spec["n"] = n;
      spec["k"] = k_opt;
      ojson data;
      data["rows"] = ojson::array(
          {ojson{{"k", k_opt}, {"cyclations", "0"}, {"stirlings", "0"}}});
      std::string csv = "n,k,cyclations,stirlings\n" + std::to_string(n) + "," +
                        std::to_string(k_opt) + ",0,0\n";
      return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
    }
  }
  ojson spec;
  spec["mode"] = "counts";
  spec["n"] = n;
  if (k_opt >= 0) spec["k"] = k_opt;
  ojson rows = ojson::array();
  std::string csv = "n,k,cyclations,stirlings\n";
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    std::string cys = cy[k].str(), sts = st[k].str();
    ojson r;
    r["k"] = k;
    r["cyclations"] = cys;
    r["stirlings"] = sts;
    rows.push_back(std::move(r));
    csv += std::to_string(n) + "," + std::to_string(k) + "," + cys + "," + sts + "\n";
  }
  ojson data;
  data["total_cyclations"] = odd_double_factorial(n).str();
  data["total_permutations"] = factorial(n).str();
  data["rows"] = std::move(rows);
  return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
}

int run_pmf(const Sink& sink, unsigned n, const std::string& which, unsigned cap) {
  ExactDistributions d = exact_distributions(n, cap);
  const ExactPmf& pmf = which == "k" ? d.K : which == "longest" ? d.M : d.T;
  const BigRational& mean = which == "k" ? d.ex_k : which == "longest" ? d.ex_m : d.ex_t;

  ojson spec;
  spec["mode"] = "pmf";
  spec["n"] = n;
  spec["which"] = which;
  spec["cap"] = cap;

  std::string csv = "value,numerator,denominator,float\n";
  ojson rows = ojson::array();
  const std::string denom = pmf.denom.str();
  for (size_t v = 1; v <= pmf.numer.size(); ++v) {
    const BigCount& num = pmf.numer[v - 1];
    double mass = to_double(BigRational(num, pmf.denom));
    csv += std::to_string(v) + "," + num.str() + "," + denom + "," + fmt_double(mass) + "\n";
    ojson r;
    r["value"] = v;
    r["numerator"] = num.str();
    r["rational"] = num.str() + "/" + denom;
    r["mass"] = fmt_double(mass);
    rows.push_back(std::move(r));
  }
  ojson data;
  data["denominator"] = denom;
  data["mean"] = rational_json(mean);
  data["rows"] = std::move(rows);
  return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
}

ojson welford_json(const Welford& w) {
  ojson j;
  j["mean"] = fmt_double(w.mean());
  j["variance"] = fmt_double(w.variance());
  j["std_error"] = fmt_double(w.std_error());
  return j;
}

int run_sample(const Sink& sink, unsigned n, uint64_t reps, uint64_t seed,
               unsigned workers, const std::string& mode_s, const std::string& engine_s,
               const std::string& hist) {
  BatchOptions opt;
  opt.workers = workers;
  opt.with_histograms = hist != "none" || sink.format == "json";
  opt.engine = engine_s == "jump" ? Engine::kJump
               : engine_s == "stepping" ? Engine::kStepping
                                        : Engine::kPairing;
  Mode mode = mode_s == "permutation" ? Mode::kPermutation : Mode::kCyclation;
  SummaryStats st = batch_stats(n, reps, seed, mode, opt);

  ojson spec;
  spec["mode"] = "sample";
  spec["n"] = n;
  spec["reps"] = reps;
  spec["seed"] = seed;
  spec["workers"] = workers;
  spec["model"] = mode_s;
  spec["engine"] = engine_s;
  spec["hist"] = hist;

  ojson data;
  data["cycles"] = welford_json(st.cycles);
  data["longest"] = welford_json(st.longest);
  data["shortest"] = welford_json(st.shortest);
  if (opt.with_histograms) {
    data["hist_longest"] = histogram_json(st.hist_longest);
    data["hist_shortest"] = histogram_json(st.hist_shortest);
  }

  std::string csv;
  if (hist == "longest") {
    csv = histogram_csv(st.hist_longest, "length");
  } else if (hist == "shortest") {
    csv = histogram_csv(st.hist_shortest, "length");
  } else {
    csv =
        "n,reps,seed,workers,mode,engine,cycles_mean,cycles_se,longest_mean,"
        "longest_se,shortest_mean,shortest_se\n";
    csv += std::to_string(n) + "," + std::to_string(reps) + "," + std::to_string(seed) +
           "," + std::to_string(workers) + "," + mode_s + "," + engine_s + "," +
           fmt_double(st.cycles.mean()) + "," + fmt_double(st.cycles.std_error()) + "," +
           fmt_double(st.longest.mean()) + "," + fmt_double(st.longest.std_error()) + "," +
           fmt_double(st.shortest.mean()) + "," + fmt_double(st.shortest.std_error()) + "\n";
  }
  return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
}

int run_zsample(const Sink& sink, double z, uint64_t reps, uint64_t seed,
                const std::string& hist) {
  ZParams zp(z);
  ZSampler sampler(zp);
  Rng rng(seed, 0);
  Welford kappa, nu, longest, shortest;
  Histogram hist_nu, hist_longest, hist_shortest;
  for (uint64_t r = 0; r < reps; ++r) {
    ZDraw d = sampler.draw(rng);
    if (!zdraw_consistent(d)) throw structure_error("z draw failed its consistency check");
    kappa.add(static_cast<double>(d.kappa));
    nu.add(static_cast<double>(d.nu));
    uint64_t m = d.cycle_type.longest(), t = d.cycle_type.empty() ? 0 : d.cycle_type.shortest();
    longest.add(static_cast<double>(m));
    shortest.add(static_cast<double>(t));
    ++hist_nu[d.nu];
    ++hist_longest[m];
    ++hist_shortest[t];
  }

  ojson spec;
  spec["mode"] = "zsample";
  spec["z"] = fmt_double(z);
  spec["reps"] = reps;
  spec["seed"] = seed;
  spec["hist"] = hist;

  double kappa_exact = zp.t_inf();
  double nu_exact = 0.5 * z / (1.0 - z);
  double longest_exact = ex_extreme_z(zp, Extreme::kLongest);
  double shortest_exact = ex_extreme_z(zp, Extreme::kShortest);

  ojson data;
  data["kappa"] = welford_json(kappa);
  data["nu"] = welford_json(nu);
  data["longest"] = welford_json(longest);
  data["shortest"] = welford_json(shortest);
  ojson ex;
  ex["kappa"] = fmt_double(kappa_exact);
  ex["nu"] = fmt_double(nu_exact);
  ex["longest"] = fmt_double(longest_exact);
  ex["shortest"] = fmt_double(shortest_exact);
  data["exact"] = std::move(ex);
  if (sink.format == "json") {
    data["hist_nu"] = histogram_json(hist_nu);
    data["hist_longest"] = histogram_json(hist_longest);
    data["hist_shortest"] = histogram_json(hist_shortest);
  }

  std::string csv;
  if (hist == "nu") {
    csv = histogram_csv(hist_nu, "value");
  } else if (hist == "longest") {
    csv = histogram_csv(hist_longest, "length");
  } else if (hist == "shortest") {
    csv = histogram_csv(hist_shortest, "length");
  } else {
    csv =
        "z,reps,seed,kappa_mean,kappa_se,nu_mean,nu_se,longest_mean,longest_se,"
        "shortest_mean,shortest_se,kappa_exact,nu_exact,longest_exact,shortest_exact\n";
    csv += fmt_double(z) + "," + std::to_string(reps) + "," + std::to_string(seed) + "," +
           fmt_double(kappa.mean()) + "," + fmt_double(kappa.std_error()) + "," +
           fmt_double(nu.mean()) + "," + fmt_double(nu.std_error()) + "," +
           fmt_double(longest.mean()) + "," + fmt_double(longest.std_error()) + "," +
           fmt_double(shortest.mean()) + "," + fmt_double(shortest.std_error()) + "," +
           fmt_double(kappa_exact) + "," + fmt_double(nu_exact) + "," +
           fmt_double(longest_exact) + "," + fmt_double(shortest_exact) + "\n";
  }
  return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
}

int run_constants(const Sink& sink) {
  QuadratureSpec qspec;
  Constants c = compute_constants(qspec);

  ojson spec;
  spec["mode"] = "constants";

  ojson data;
  data["gamma"] = fmt_double(c.gamma);
  data["longest_cyc"] = ojson{{"value", fmt_double(c.longest_cyc)},
                              {"error", fmt_double(c.longest_cyc_err)}};
  data["shortest_cyc"] = ojson{{"value", fmt_double(c.shortest_cyc)},
                               {"error", fmt_double(c.shortest_cyc_err)}};
  data["longest_perm"] = ojson{{"value", fmt_double(c.longest_perm)},
                               {"error", fmt_double(c.longest_perm_err)}};
  data["shortest_perm_coeff"] = ojson{{"value", fmt_double(c.shortest_perm_coeff)},
                                      {"error", "0"}};
  data["quadrature"] = ojson{{"scheme", qspec.scheme()},
                             {"abs_tol", fmt_double(qspec.abs_tol)},
                             {"upper_cutoff", fmt_double(qspec.upper_cutoff)}};

  std::string csv = "name,value,error\n";
  csv += "gamma," + fmt_double(c.gamma) + ",0\n";
  csv += "longest_cyc," + fmt_double(c.longest_cyc) + "," + fmt_double(c.longest_cyc_err) + "\n";
  csv += "shortest_cyc," + fmt_double(c.shortest_cyc) + "," + fmt_double(c.shortest_cyc_err) + "\n";
  csv += "longest_perm," + fmt_double(c.longest_perm) + "," + fmt_double(c.longest_perm_err) + "\n";
  csv += "shortest_perm_coeff," + fmt_double(c.shortest_perm_coeff) + ",0\n";
  return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
}

int run_verify(const Sink& sink, unsigned cap_n, bool with_n7, uint64_t seed) {
  VerifyOptions opt;
  opt.cap_n = cap_n;
  opt.with_n7 = with_n7;
  opt.seed = seed;
  auto checks = verify_all(opt);

  ojson spec;
  spec["mode"] = "verify";
  spec["cap_n"] = cap_n;
  spec["with_n7"] = with_n7;
  spec["seed"] = seed;

  unsigned failures = 0;
  std::string csv = "name,pass,detail\n";
  ojson rows = ojson::array();
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    csv += csv_field(c.name) + "," + (c.pass ? "true" : "false") + "," +
           csv_field(c.detail) + "\n";
    ojson r;
    r["name"] = c.name;
    r["pass"] = c.pass;
    r["detail"] = c.detail;
    rows.push_back(std::move(r));
  }
  ojson data;
  data["checks"] = std::move(rows);
  data["total"] = checks.size();
  data["failures"] = failures;
  int rc = emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
  if (rc != 0) return rc;
  return failures == 0 ? 0 : 2;
}

int run_converge(const Sink& sink, const std::string& which_s,
                 const std::vector<uint64_t>& grid, uint64_t reps, uint64_t seed,
                 unsigned workers, unsigned cap) {
  Extreme which = which_s == "longest" ? Extreme::kLongest : Extreme::kShortest;
  ConvergeResult r = converge(which, grid, reps, seed, workers, cap);

  ojson spec;
  spec["mode"] = "converge";
  spec["which"] = which_s;
  spec["grid"] = grid;
  spec["reps"] = reps;
  spec["seed"] = seed;
  spec["workers"] = workers;
  spec["cap"] = cap;

  bool shortest = which == Extreme::kShortest;
  std::string csv = "n,reps,mean,stderr,exact,asymptote,ratio,reference";
  if (shortest) {
    csv +=
        ",emp_pr1,emp_pr2,emp_pr3,conj_printed_pr1,conj_printed_pr2,conj_printed_pr3,"
        "conj_tseries_pr1,conj_tseries_pr2,conj_tseries_pr3";
  }
  csv += "\n";
  ojson points = ojson::array();
  for (const ConvergePoint& p : r.points) {
    csv += std::to_string(p.n) + "," + std::to_string(p.reps) + "," + fmt_double(p.mean) +
           "," + fmt_double(p.se) + "," + (p.has_exact ? fmt_double(p.exact) : "") + "," +
           fmt_double(p.asymptote) + "," + fmt_double(p.ratio) + "," +
           (p.has_exact ? "exact" : "asymptote-only");
    if (shortest) {
      for (double v : p.emp_pr) csv += "," + fmt_double(v);
      for (double v : r.conj_printed) csv += "," + fmt_double(v);
      for (double v : r.conj_tseries) csv += "," + fmt_double(v);
    }
    csv += "\n";
    ojson pj;
    pj["n"] = p.n;
    pj["reps"] = p.reps;
    pj["mean"] = fmt_double(p.mean);
    pj["stderr"] = fmt_double(p.se);
    if (p.has_exact) pj["exact"] = fmt_double(p.exact);
    pj["asymptote"] = fmt_double(p.asymptote);
    pj["ratio"] = fmt_double(p.ratio);
    pj["reference"] = p.has_exact ? "exact" : "asymptote-only";
    if (shortest) {
      pj["emp_pr"] = ojson::array();
      for (double v : p.emp_pr) pj["emp_pr"].push_back(fmt_double(v));
    }
    points.push_back(std::move(pj));
  }

  ojson data;
  data["asymptote"] = fmt_double(r.asymptote);
  data["monotone_trend"] = monotone_trend(r);
  if (shortest) {
    // Two candidate readings of the conjectured limiting pmf of T: the
    // printed harmonic form and the t-series form; both are conjecture
    // columns, no correctness claim is made for either.
    ojson conj;
    conj["printed"] = ojson::array();
    conj["tseries"] = ojson::array();
    for (double v : r.conj_printed) conj["printed"].push_back(fmt_double(v));
    for (double v : r.conj_tseries) conj["tseries"].push_back(fmt_double(v));
    data["conjecture"] = std::move(conj);
  }
  data["points"] = std::move(points);
  data["wall_ms"] = fmt_double(r.wall_ms);
  return emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
}

int run_oracle(const Sink& sink, unsigned n) {
  auto counts = brute_force_enumerate(n);

  ojson spec;
  spec["mode"] = "oracle";
  spec["n"] = n;

  std::string csv = "partition,k,count,class_size\n";
  ojson rows = ojson::array();
  BigCount total = 0;
  bool all_match = true;
  for (const auto& [t, c] : counts) {
    total += c;
    BigCount expect = cyc_class_size(t);
    all_match = all_match && (BigCount(c) == expect);
    csv += partition_string(t) + "," + std::to_string(t.cycle_count()) + "," +
           std::to_string(c) + "," + expect.str() + "\n";
    ojson r;
    r["partition"] = partition_string(t);
    r["type"] = t.str();
    r["k"] = t.cycle_count();
    r["count"] = c;
    r["class_size"] = expect.str();
    rows.push_back(std::move(r));
  }
  ojson data;
  data["total"] = total.str();
  data["expected_total"] = odd_double_factorial(n).str();
  data["all_match"] = all_match;
  data["rows"] = std::move(rows);
  int rc = emit(sink, make_envelope(std::move(spec)), std::move(data), csv);
  if (rc != 0) return rc;
  return (all_match && total == odd_double_factorial(n)) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random cyclations: exact counts, samplers, z-model, constants"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--out are accepted after the subcommand too

  Sink sink;
  auto* fmt_opt = app.add_option("--format", sink.format,
                                 "output format (constants defaults to json)")
                      ->check(CLI::IsMember({"csv", "json"}))
                      ->capture_default_str();
  app.add_option("--out", sink.path, "write output to PATH instead of stdout");

  // counts
  unsigned counts_n = 0;
  long long counts_k = -1;
  auto* c_counts = app.add_subcommand("counts", "exact cycle-count table for weight n");
  c_counts->add_option("--n", counts_n, "number of intervals")
      ->required()
      ->check(CLI::Range(0, 1000));
  c_counts->add_option("--k", counts_k, "restrict to a single cycle count k")
      ->check(CLI::Range(0LL, 1000000LL));

  // pmf
  unsigned pmf_n = 0, pmf_cap = kDefaultPartitionCap;
  std::string pmf_which = "k";
  auto* c_pmf = app.add_subcommand("pmf", "exact pmf of K, M, or T at weight n");
  c_pmf->add_option("--n", pmf_n, "number of intervals")->required()->check(CLI::Range(0, 100000));
  c_pmf->add_option("--which", pmf_which, "k, longest, or shortest")
      ->check(CLI::IsMember({"k", "longest", "shortest"}))
      ->capture_default_str();
  c_pmf->add_option("--cap", pmf_cap, "partition enumeration cap")->capture_default_str();

  // sample
  unsigned sample_n = 0, sample_workers = default_workers();
  uint64_t sample_reps = 0, sample_seed = 0;
  std::string sample_mode = "cyclation", sample_engine = "jump", sample_hist = "none";
  auto* c_sample = app.add_subcommand("sample", "Monte Carlo cycle statistics at weight n");
  c_sample->add_option("--n", sample_n, "number of intervals")
      ->required()
      ->check(CLI::Range(1u, 100000000u));
  c_sample->add_option("--reps", sample_reps, "number of draws")
      ->required()
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 40));
  c_sample->add_option("--seed", sample_seed, "master seed")->required();
  c_sample->add_option("--workers", sample_workers, "worker threads (default $CYCLATION_WORKERS or 1)")
      ->check(CLI::Range(1u, 4096u));
  c_sample->add_option("--mode", sample_mode, "cyclation or permutation")
      ->check(CLI::IsMember({"cyclation", "permutation"}))
      ->capture_default_str();
  c_sample->add_option("--engine", sample_engine, "jump, stepping, or pairing")
      ->check(CLI::IsMember({"jump", "stepping", "pairing"}))
      ->capture_default_str();
  c_sample->add_option("--hist", sample_hist, "emit a histogram instead of the summary row")
      ->check(CLI::IsMember({"none", "longest", "shortest"}))
      ->capture_default_str();

  // zsample
  double zs_z = 0.0;
  uint64_t zs_reps = 0, zs_seed = 0;
  std::string zs_hist = "none";
  auto* c_zsample = app.add_subcommand("zsample", "draw from the Poissonized z-model");
  c_zsample->add_option("--z", zs_z, "z parameter in (0,1)")->required();
  c_zsample->add_option("--reps", zs_reps, "number of draws")
      ->required()
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 34));
  c_zsample->add_option("--seed", zs_seed, "master seed")->required();
  c_zsample->add_option("--hist", zs_hist, "emit a histogram instead of the summary row")
      ->check(CLI::IsMember({"none", "nu", "longest", "shortest"}))
      ->capture_default_str();

  // constants
  auto* c_constants =
      app.add_subcommand("constants", "asymptotic constants with quadrature error estimates");

  // verify
  unsigned verify_cap = 40;
  bool verify_n7 = false;
  uint64_t verify_seed = 20260814;
  auto* c_verify = app.add_subcommand("verify", "run every invariant suite");
  c_verify->add_option("--cap-n", verify_cap, "exact-expectation range")
      ->check(CLI::Range(3u, 200u))
      ->capture_default_str();
  c_verify->add_flag("--with-n7", verify_n7, "include the 135135-pairing oracle");
  c_verify->add_option("--seed", verify_seed, "seed for the statistical gates")
      ->capture_default_str();

  // converge
  std::string conv_which;
  std::vector<uint64_t> conv_grid = {1000, 10000, 100000, 1000000};
  uint64_t conv_reps = 2000, conv_seed = 20260814;
  unsigned conv_workers = default_workers(), conv_cap = kDefaultPartitionCap;
  auto* c_converge = app.add_subcommand("converge", "normalized extreme-cycle convergence study");
  c_converge->add_option("--which", conv_which, "longest or shortest")
      ->required()
      ->check(CLI::IsMember({"longest", "shortest"}));
  c_converge->add_option("--grid", conv_grid, "ascending n grid")
      ->delimiter(',')
      ->capture_default_str();
  c_converge->add_option("--reps", conv_reps, "draws per grid point")
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 40))
      ->capture_default_str();
  c_converge->add_option("--seed", conv_seed, "master seed")->capture_default_str();
  c_converge->add_option("--workers", conv_workers, "worker threads (default $CYCLATION_WORKERS or 1)")
      ->check(CLI::Range(1u, 4096u));
  c_converge->add_option("--cap", conv_cap, "exact column available for n <= cap")
      ->capture_default_str();

  // oracle
  unsigned oracle_n = 0;
  auto* c_oracle = app.add_subcommand("oracle", "exhaustive pairing enumeration (n <= 7)");
  c_oracle->add_option("--n", oracle_n, "number of intervals")
      ->required()
      ->check(CLI::Range(1u, 7u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;  // help/version exit 0; every parse failure is 4
  }

  try {
    if (c_counts->parsed()) return run_counts(sink, counts_n, counts_k);
    if (c_pmf->parsed()) return run_pmf(sink, pmf_n, pmf_which, pmf_cap);
    if (c_sample->parsed()) {
      return run_sample(sink, sample_n, sample_reps, sample_seed, sample_workers,
                        sample_mode, sample_engine, sample_hist);
    }
    if (c_zsample->parsed()) {
      if (!(zs_z > 0.0 && zs_z < 1.0)) {
        std::cerr << "cyclation: --z must lie strictly inside (0,1)\n";
        return 4;
      }
      return run_zsample(sink, zs_z, zs_reps, zs_seed, zs_hist);
    }
    if (c_constants->parsed()) {
      if (fmt_opt->count() == 0) sink.format = "json";
      return run_constants(sink);
    }
    if (c_verify->parsed()) return run_verify(sink, verify_cap, verify_n7, verify_seed);
    if (c_converge->parsed()) {
      return run_converge(sink, conv_which, conv_grid, conv_reps, conv_seed, conv_workers,
                          conv_cap);
    }
    if (c_oracle->parsed()) return run_oracle(sink, oracle_n);
  } catch (const resource_error& e) {
    std::cerr << "cyclation: resource cap: " << e.what() << "\n";
    return 3;
  } catch (const structure_error& e) {
    std::cerr << "cyclation: invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const tolerance_error& e) {
    std::cerr << "cyclation: tolerance failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cyclation: error: " << e.what() << "\n";
    return 2;
  }
  return 4;
}
