// Command-line front end: sequence generation (OEIS b-file / CSV / JSON
// lines), identity verification sweeps, subset-bijection demos, and
// evaluation-strategy benchmarks. Exit codes: 0 all good, 1 a check found a
// counterexample, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "binoconv/bijection.hpp"
#include "binoconv/identities.hpp"
#include "binoconv/oracles.hpp"

namespace {

using namespace binoconv;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------- workers

unsigned worker_count() {
  if (const char* env = std::getenv("BINOCONV_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;  // sequential by default
}

// Runs fn(i) for i in [0, count). Results are stored by index, so output
// order stays deterministic no matter how many workers run.
template <typename Result, typename Fn>
std::vector<Result> run_indexed(size_t count, Fn&& fn) {
  std::vector<Result> results(count);
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(worker_count(), count == 0 ? 1 : count));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

// ---------------------------------------------------------------- seq

struct SeqOptions {
  long a = 0;
  std::string k = "0";
  long n_max = 0;
  std::string form = "naive";
  std::string format = "bfile";
};

EvalForm parse_form(const std::string& name) {
  if (name == "naive") return EvalForm::Naive;
  if (name == "eq6") return EvalForm::Eq6;
  return EvalForm::Eq7;
}

int cmd_seq(const SeqOptions& opt) {
  const Rat k = parse_rat(opt.k);
  const EvalForm form = parse_form(opt.form);
  const Int a(opt.a);

  std::vector<std::string> values;
  values.reserve(static_cast<size_t>(opt.n_max) + 1);
  if (k == 0) {
    for (const Int& v : form_series(form, a, opt.n_max)) values.push_back(to_string(v));
  } else {
    for (long n = 0; n <= opt.n_max; ++n) values.push_back(to_string(seq_value(form, a, Int(n), k)));
  }

  if (opt.format == "bfile") {
    for (long n = 0; n <= opt.n_max; ++n) std::cout << n << ' ' << values[static_cast<size_t>(n)] << '\n';
  } else if (opt.format == "csv") {
    std::cout << "n,value\n";
    for (long n = 0; n <= opt.n_max; ++n) std::cout << n << ',' << values[static_cast<size_t>(n)] << '\n';
  } else {
    const std::string k_str = to_string(k);
    for (long n = 0; n <= opt.n_max; ++n) {
      nlohmann::ordered_json rec;
      rec["n"] = n;
      rec["a"] = opt.a;
      rec["k"] = k_str;
      rec["form"] = opt.form;
      rec["value"] = values[static_cast<size_t>(n)];
      std::cout << rec.dump() << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

constexpr long kRangeUnset = std::numeric_limits<long>::min();

struct VerifyOptions {
  std::string target;
  long a_min = -5, a_max = 6;
  long n_min = kRangeUnset, n_max = kRangeUnset;  // per-target default when unset
  std::string mode = "symbolic";
  long s_min = 1, s_max = 7;
  long t_min = 1, t_max = 7;
};

void default_n_range(const std::string& target, long& n_min, long& n_max) {
  long hi = 24;
  if (target == "lemma1") hi = 20;
  if (target == "lemma2") hi = 40;
  if (target == "thm2") hi = 30;
  if (target == "eq3eq4") hi = 200;
  if (target == "a34") hi = 100;
  if (n_min == kRangeUnset) n_min = 0;
  if (n_max == kRangeUnset) n_max = hi;
}

int emit_reports(const std::vector<IdentityReport>& reports) {
  for (const IdentityReport& rep : reports) {
    std::cout << rep.describe() << '\n';
    if (!rep.holds) {
      std::cout << rep.witness_json() << '\n';
      return kExitCounterexample;
    }
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
  VerifyOptions o = opt;
  default_n_range(o.target, o.n_min, o.n_max);
  if (o.a_min > o.a_max || o.n_min > o.n_max || o.n_min < 0)
    throw CLI::ValidationError("verify", "malformed parameter range");

  std::vector<IdentityReport> reports;
  if (o.target == "lemma3") {
    if (o.s_min < 1 || o.t_min < 1 || o.s_min > o.s_max || o.t_min > o.t_max)
      throw CLI::ValidationError("verify", "malformed s/t range");
    struct Tuple {
      long s, t, j;
    };
    std::vector<Tuple> tuples;
    for (long s = o.s_min; s <= o.s_max; ++s)
      for (long t = o.t_min; t <= o.t_max; ++t)
        for (long j = 0; j <= s; ++j) tuples.push_back({s, t, j});
    reports = run_indexed<IdentityReport>(tuples.size(), [&](size_t idx) {
      const auto [s, t, j] = tuples[idx];
      IdentityReport counting = lemma3_count_check(Int(s), Int(t), Int(j));
      if (!counting.holds) return counting;
      return lemma3_bijection_check(s, t, j);
    });
    const int rc = emit_reports(reports);
    if (rc == kExitOk) {
      Int total(0);
      for (const auto& [s, t, j] : tuples) total += binom_int(Int(s + t + 1), Int(j));
      std::cout << "all " << reports.size() << " instances hold; " << to_string(total)
                << " subsets round-tripped\n";
    }
    return rc;
  }

  if (o.target == "eq3eq4") {
    const size_t count = static_cast<size_t>(o.n_max - o.n_min + 1);
    reports = run_indexed<IdentityReport>(count, [&](size_t idx) {
      return eq3_eq4_check(Int(o.n_min + static_cast<long>(idx)));
    });
  } else {
    std::vector<std::pair<long, long>> tuples;
    for (long a = o.a_min; a <= o.a_max; ++a) {
      if (o.target == "a34" && a != 3 && a != 4) continue;
      for (long n = o.n_min; n <= o.n_max; ++n) tuples.push_back({a, n});
    }
    if (tuples.empty()) throw CLI::ValidationError("verify", "empty parameter range");
    const CheckMode mode = o.mode == "grid" ? CheckMode::Grid : CheckMode::Symbolic;
    reports = run_indexed<IdentityReport>(tuples.size(), [&](size_t idx) {
      const auto [a, n] = tuples[idx];
      if (o.target == "thm1") return theorem1_check(Int(a), Int(n), mode);
      if (o.target == "thm2") return thm2_check(Int(a), Int(n));
      if (o.target == "lemma1") return lemma1_check(Int(a), Int(n));
      if (o.target == "lemma2") return lemma2_check(Int(a), Int(n));
      return a34_display_check(Int(a), Int(n));
    });
  }

  const int rc = emit_reports(reports);
  if (rc == kExitOk) std::cout << "all " << reports.size() << " instances hold\n";
  return rc;
}

// ---------------------------------------------------------------- bijection

struct BijectionOptions {
  long s = 0, t = 0, j = 0;
  std::string set = "-";  // "-" = enumerate all subsets
};

std::vector<long> parse_element_list(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad element '" + item + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

int cmd_bijection(const BijectionOptions& opt) {
  if (opt.set != "-") {
    FiniteSet a = FiniteSet(opt.s + opt.t + 1, parse_element_list(opt.set));
    if (a.size() != opt.j) throw std::invalid_argument("element list must have exactly j elements");
    const long p = pivot(a, opt.s, opt.t, opt.j);
    const SplitTriple x = phi(a, opt.s, opt.t, opt.j);
    const FiniteSet back = psi(x, opt.s, opt.t, opt.j);
    std::cout << "A = " << a.str() << '\n';
    std::cout << "p(A) = " << p << ", i = " << x.i << '\n';
    std::cout << "B = " << x.b.str() << '\n';
    std::cout << "C = " << x.c.str() << '\n';
    std::cout << "psi(i, B, C) = " << back.str() << (back == a ? "  round-trip OK" : "  round-trip FAILED")
              << '\n';
    return back == a ? kExitOk : kExitCounterexample;
  }

  const IdentityReport rep = lemma3_bijection_check(opt.s, opt.t, opt.j);
  const std::vector<Int> sizes = partition_sizes(opt.s, opt.t, opt.j);
  Int total(0);
  for (long i = 0; i <= opt.j; ++i) {
    const Int expected = binom_int(Int(opt.s - i), Int(opt.s - opt.j)) * binom_int(Int(opt.t + i), Int(i));
    std::cout << "i=" << i << ": " << to_string(sizes[static_cast<size_t>(i)]) << " subsets (expected "
              << to_string(expected) << ")\n";
    total += sizes[static_cast<size_t>(i)];
  }
  std::cout << "total " << to_string(total) << " = C(" << opt.s + opt.t + 1 << "," << opt.j << ") = "
            << to_string(binom_int(Int(opt.s + opt.t + 1), Int(opt.j))) << '\n';
  std::cout << rep.describe() << '\n';
  if (!rep.holds) {
    std::cout << rep.witness_json() << '\n';
    return kExitCounterexample;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  long a = 0, n = 0;
  std::string forms = "naive,eq6,eq7";
  long reps = 3;
};

int cmd_bench(const BenchOptions& opt) {
  std::vector<EvalForm> forms;
  {
    size_t pos = 0;
    const std::string& text = opt.forms;
    while (pos <= text.size()) {
      const size_t comma = std::min(text.find(',', pos), text.size());
      const std::string item = text.substr(pos, comma - pos);
      if (item != "naive" && item != "eq6" && item != "eq7")
        throw CLI::ValidationError("bench", "unknown form '" + item + "'");
      const EvalForm f = parse_form(item);
      if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
      pos = comma + 1;
    }
  }
  if (forms.empty()) throw CLI::ValidationError("bench", "no forms requested");

  // Correctness gate: every requested form must produce the same series
  // before any timing is reported.
  const Int a(opt.a);
  std::vector<std::vector<Int>> series;
  series.reserve(forms.size());
  for (const EvalForm f : forms) series.push_back(form_series(f, a, opt.n));
  for (size_t fi = 1; fi < forms.size(); ++fi) {
    for (long m = 0; m <= opt.n; ++m) {
      if (series[fi][static_cast<size_t>(m)] != series[0][static_cast<size_t>(m)]) {
        nlohmann::ordered_json j;
        j["target"] = "bench";
        j["a"] = opt.a;
        j["m"] = m;
        j["form_lhs"] = to_string(forms[0]);
        j["form_rhs"] = to_string(forms[fi]);
        j["lhs"] = to_string(series[0][static_cast<size_t>(m)]);
        j["rhs"] = to_string(series[fi][static_cast<size_t>(m)]);
        std::cout << "forms disagree:\n" << j.dump() << '\n';
        return kExitCounterexample;
      }
    }
  }

  std::string names;
  for (const EvalForm f : forms) names += (names.empty() ? "" : ", ") + std::string(to_string(f));
  std::cout << "forms agree: P_" << opt.a << "(m) identical for " << names << " over m = 0.." << opt.n << '\n';
  const std::string last = to_string(series[0].back());
  if (last.size() <= 50)
    std::cout << "P_" << opt.a << "(" << opt.n << ") = " << last << '\n';
  else
    std::cout << "P_" << opt.a << "(" << opt.n << ") has " << last.size() << " digits\n";

  std::cout << "form      reps   median-ms\n";
  for (const EvalForm f : forms) {
    std::vector<double> times;
    times.reserve(static_cast<size_t>(opt.reps));
    for (long r = 0; r < opt.reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      volatile size_t guard = form_series(f, a, opt.n).size();
      (void)guard;
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    const size_t mid = times.size() / 2;
    const double median =
        times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
    std::printf("%-8s %5ld %11.3f\n", to_string(f), opt.reps, median);
  }
  return kExitOk;
}

int run_app(int argc, char** argv) {
  CLI::App app{"Exact generalized central-binomial convolutions: sequences, identity checks, subset bijection, benchmarks"};
  app.require_subcommand(1);

  SeqOptions seq_opt;
  CLI::App* seq = app.add_subcommand("seq", "Emit P_a(0..n) at a rational shift k");
  seq->add_option("--a", seq_opt.a, "integer a (any sign)")->required();
  seq->add_option("--k", seq_opt.k, "rational shift k, e.g. 0, 3, -1/2")->capture_default_str();
  seq->add_option("--nmax", seq_opt.n_max, "last index n")->required()->check(CLI::NonNegativeNumber);
  seq->add_option("--form", seq_opt.form, "evaluation form")
      ->check(CLI::IsMember({"naive", "eq6", "eq7"}))
      ->capture_default_str();
  seq->add_option("--format", seq_opt.format, "output format")
      ->check(CLI::IsMember({"bfile", "csv", "jsonl"}))
      ->capture_default_str();

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run an identity sweep; exit 1 with a witness on failure");
  verify->add_option("target", verify_opt.target, "identity family")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "lemma1", "lemma2", "lemma3", "eq3eq4", "a34"}));
  verify->add_option("--amin", verify_opt.a_min, "smallest a")->capture_default_str();
  verify->add_option("--amax", verify_opt.a_max, "largest a")->capture_default_str();
  verify->add_option("--nmin", verify_opt.n_min, "smallest n (default per target)");
  verify->add_option("--nmax", verify_opt.n_max, "largest n (default per target)");
  verify->add_option("--mode", verify_opt.mode, "thm1 comparison mode")
      ->check(CLI::IsMember({"symbolic", "grid"}))
      ->capture_default_str();
  verify->add_option("--smin", verify_opt.s_min, "lemma3: smallest s")->capture_default_str();
  verify->add_option("--smax", verify_opt.s_max, "lemma3: largest s")->capture_default_str();
  verify->add_option("--tmin", verify_opt.t_min, "lemma3: smallest t")->capture_default_str();
  verify->add_option("--tmax", verify_opt.t_max, "lemma3: largest t")->capture_default_str();

  BijectionOptions bij_opt;
  CLI::App* bij = app.add_subcommand("bijection", "Split subsets of [s+t+1] at their pivot");
  bij->add_option("--s", bij_opt.s, "parameter s >= 1")->required();
  bij->add_option("--t", bij_opt.t, "parameter t >= 1")->required();
  bij->add_option("--j", bij_opt.j, "subset size, 0 <= j <= s")->required();
  bij->add_option("--set", bij_opt.set, "comma-separated subset A (omit to enumerate all)");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Time the evaluation forms at k = 0");
  bench->add_option("--a", bench_opt.a, "integer a")->required();
  bench->add_option("--n", bench_opt.n, "compute P_a(0..n)")->required()->check(CLI::NonNegativeNumber);
  bench->add_option("--forms", bench_opt.forms, "comma-separated forms")->capture_default_str();
  bench->add_option("--reps", bench_opt.reps, "timing repetitions (>= 1)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(seq)) return cmd_seq(seq_opt);
    if (app.got_subcommand(verify)) return cmd_verify(verify_opt);
    if (app.got_subcommand(bij)) return cmd_bijection(bij_opt);
    if (app.got_subcommand(bench)) {
      if (bench_opt.reps < 1) {
        std::cerr << "bench: --reps must be >= 1\n";
        return kExitUsage;
      }
      return cmd_bench(bench_opt);
    }
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return kExitUsage;
  }
}
