#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "fanohodge/curves.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/fano_even.hpp"
#include "fanohodge/fano_odd.hpp"
#include "fanohodge/motivic.hpp"
#include "fanohodge/serialize.hpp"
#include "fanohodge/stacky_counts.hpp"
#include "fanohodge/suites.hpp"

namespace fanohodge::cli {

namespace {

// Raised for semantically invalid flag combinations; the message names the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kDiamondTargets = {"fano-odd", "fano-even", "sym", "jac"};
const std::vector<std::string> kVerifyTargets = {"odd",        "lemma-k0",   "bgmn",
                                                 "hochschild", "euler-even", "stacky-length"};
const std::vector<std::string> kIdentityTargets = {"gessel", "gessel-series", "chu-vandermonde",
                                                   "multiplicity-at-one", "q-binomial"};

constexpr int kDefaultSweepMaxG = 12;
constexpr int kDefaultAtOneMaxG = 40;

int require(const std::optional<int>& value, const char* flag, const std::string& context) {
  if (!value) throw UsageError(std::string(flag) + " is required for " + context);
  return *value;
}

int require_g(const CliConfig& config, const std::string& context) {
  const int g = require(config.g, "--g", context);
  if (g < 2) throw UsageError("--g must be at least 2 for " + context);
  return g;
}

int require_k(const CliConfig& config, int g, const std::string& context) {
  const int k = require(config.k, "--k", context);
  if (k < 0 || k > g - 2) throw UsageError("--k must lie in [0, g-2] for " + context);
  return k;
}

void write_output(const CliConfig& config, const std::string& text, std::ostream& out) {
  if (!config.output) {
    out << text;
    return;
  }
  // Write beside the destination, then rename over it.
  const std::filesystem::path target(*config.output);
  std::filesystem::path temporary = target;
  temporary += ".tmp";
  {
    std::ofstream file(temporary, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("--output: cannot open " + temporary.string());
    file << text;
    if (!file.flush()) throw UsageError("--output: write failed for " + temporary.string());
  }
  std::filesystem::rename(temporary, target);
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

int run_diamond(const CliConfig& config, std::ostream& out) {
  const std::string context = "diamond " + config.target;
  const HodgeDiamond dia = [&] {
    if (config.target == "fano-odd") {
      const int g = require_g(config, context);
      return fano_odd_diamond(OddFanoParams(g, require_k(config, g, context)));
    }
    if (config.target == "fano-even") {
      const int g = require_g(config, context);
      return fano_even_diamond(EvenFanoParams(g, require_k(config, g, context)));
    }
    const int g = require(config.g, "--g", context);
    if (g < 0) throw UsageError("--g must be non-negative for " + context);
    if (config.target == "jac") return jacobian_diamond(g);
    const int n = require(config.n, "--n", context);
    if (n < 0) throw UsageError("--n must be non-negative for " + context);
    return sym_curve_diamond(g, n);
  }();
  write_output(config, config.format == Format::json ? dump(to_json(dia)) : render_text(dia), out);
  return kExitVerified;
}

VerificationReport single_verification(const CliConfig& config) {
  const std::string context = "verify " + config.target;
  const int g = require_g(config, context);
  if (config.target == "odd") return verify_conjecture_b(g, require_k(config, g, context));
  if (config.target == "hochschild") return verify_hochschild(g, require_k(config, g, context));
  if (config.target == "euler-even") return verify_euler_even(g, require_k(config, g, context));
  if (config.target == "stacky-length") return verify_stacky_length(g, require_k(config, g, context));
  if (config.target == "lemma-k0") return verify_lemma_k0(g);
  return verify_bgmn_crosscheck(g);
}

VerificationReport identity_suite(const CliConfig& config) {
  if (config.max_m < 0) throw UsageError("--max-m must be non-negative");
  if (config.max_a < 0) throw UsageError("--max-a must be non-negative");
  if (config.max_n < 0) throw UsageError("--max-n must be non-negative");
  if (config.target == "gessel") return gessel_suite(config.max_m, config.max_a);
  if (config.target == "gessel-series") return gessel_series_suite(config.max_m, config.max_a);
  if (config.target == "chu-vandermonde") return chu_vandermonde_suite(config.max_n);
  if (config.target == "q-binomial") return q_binomial_suite(config.max_n);
  const int max_g = config.max_g.value_or(kDefaultAtOneMaxG);
  if (max_g < 2) throw UsageError("--max-g must be at least 2");
  return multiplicity_at_one_suite(max_g);
}

int emit_single(const CliConfig& config, const VerificationReport& report, std::ostream& out) {
  const std::string text =
      config.format == Format::json
          ? dump(to_json(report, config.timing))
          : render_text(report, {.detailed = true, .include_timing = config.timing});
  write_output(config, text, out);
  return report.verified() ? kExitVerified : kExitFailed;
}

int run_sweep(const CliConfig& config, std::ostream& out) {
  const std::vector<VerificationReport> reports = sweep_reports(config);
  const auto failed = std::ranges::count_if(reports, [](const auto& r) { return !r.verified(); });

  std::string text;
  if (config.format == Format::json) {
    Json list = Json::array();
    for (const auto& report : reports) list.push_back(to_json(report, config.timing));
    Json summary;
    summary["total"] = reports.size();
    summary["verified"] = reports.size() - static_cast<std::size_t>(failed);
    summary["failed"] = failed;
    Json document;
    document["reports"] = std::move(list);
    document["summary"] = std::move(summary);
    text = dump(document);
  } else {
    std::ostringstream lines;
    for (const auto& report : reports) {
      // Failed reports carry both sides so the mismatch is visible.
      lines << render_text(report, {.detailed = !report.verified(), .include_timing = config.timing});
    }
    lines << reports.size() << " reports, " << failed << " failed\n";
    text = lines.str();
  }
  write_output(config, text, out);
  return exit_code_for(reports);
}

}  // namespace

int exit_code_for(std::span<const VerificationReport> reports) {
  const bool all = std::ranges::all_of(reports, [](const auto& r) { return r.verified(); });
  return all ? kExitVerified : kExitFailed;
}

std::vector<VerificationReport> run_jobs(const std::vector<std::function<VerificationReport()>>& jobs,
                                         unsigned threads) {
  std::vector<std::optional<VerificationReport>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t index = next++; index < jobs.size(); index = next++) {
      try {
        slots[index] = jobs[index]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::jthread> pool;
  pool.reserve(count);
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  pool.clear();  // joins

  if (failure) std::rethrow_exception(failure);
  std::vector<VerificationReport> results;
  results.reserve(slots.size());
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

std::vector<VerificationReport> sweep_reports(const CliConfig& config) {
  const int max_g = config.max_g.value_or(kDefaultSweepMaxG);
  if (max_g < 2) throw UsageError("--max-g must be at least 2");
  if (config.max_m < 0) throw UsageError("--max-m must be non-negative");
  if (config.max_a < 0) throw UsageError("--max-a must be non-negative");
  if (config.max_n < 0) throw UsageError("--max-n must be non-negative");

  std::vector<std::function<VerificationReport()>> jobs;
  auto per_gk = [&](VerificationReport (*verify)(int, int)) {
    for (int g = 2; g <= max_g; ++g) {
      for (int k = 0; k <= g - 2; ++k) jobs.emplace_back([=] { return verify(g, k); });
    }
  };
  auto per_g = [&](VerificationReport (*verify)(int)) {
    for (int g = 2; g <= max_g; ++g) jobs.emplace_back([=] { return verify(g); });
  };

  per_gk(verify_conjecture_b);
  per_gk(verify_hochschild);
  per_g(verify_lemma_k0);
  per_g(verify_bgmn_crosscheck);
  per_gk(verify_euler_even);
  per_gk(verify_stacky_length);
  jobs.emplace_back([=] { return multiplicity_at_one_suite(max_g); });
  jobs.emplace_back([&config] { return gessel_suite(config.max_m, config.max_a); });
  jobs.emplace_back([&config] { return gessel_series_suite(config.max_m, config.max_a); });
  jobs.emplace_back([&config] { return chu_vandermonde_suite(config.max_n); });
  jobs.emplace_back([&config] { return q_binomial_suite(config.max_n); });

  const unsigned threads = config.jobs != 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  return run_jobs(jobs, threads);
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::diamond:
        return run_diamond(config, out);
      case Command::verify:
        return emit_single(config, single_verification(config), out);
      case Command::identity:
        return emit_single(config, identity_suite(config), out);
      case Command::sweep:
        return run_sweep(config, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "--output: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge diamonds and motivic identities for Fano schemes of intersections of two quadrics",
               "fanohodge"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "text";
  bool no_timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", config.output, "Write the result to FILE instead of standard output");
    sub->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-reproducible output");
  };
  auto add_gkn = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--g", config.g, "Genus of the associated curve");
    sub->add_option("--k", config.k, "Dimension of the linear subspaces");
    if (with_n) sub->add_option("--n", config.n, "Symmetric power");
  };

  CLI::App* diamond = app.add_subcommand("diamond", "Print a Hodge diamond");
  diamond->add_option("target", config.target, "fano-odd | fano-even | sym | jac")
      ->required()
      ->check(CLI::IsMember(kDiamondTargets));
  add_gkn(diamond, true);
  add_common(diamond);

  CLI::App* verify = app.add_subcommand("verify", "Check one identity instance");
  verify->add_option("identity", config.target,
                     "odd | lemma-k0 | bgmn | hochschild | euler-even | stacky-length")
      ->required()
      ->check(CLI::IsMember(kVerifyTargets));
  add_gkn(verify, false);
  add_common(verify);

  CLI::App* identity = app.add_subcommand("identity", "Check a counting identity over a range");
  identity->add_option("suite", config.target,
                       "gessel | gessel-series | chu-vandermonde | multiplicity-at-one | q-binomial")
      ->required()
      ->check(CLI::IsMember(kIdentityTargets));
  identity->add_option("--max-g", config.max_g, "Largest genus (multiplicity-at-one, default 40)");
  identity->add_option("--max-m", config.max_m, "Largest m (gessel, default 30)");
  identity->add_option("--max-a", config.max_a, "Largest even a (gessel, default 60)");
  identity->add_option("--max-n", config.max_n, "Largest n (chu-vandermonde, q-binomial, default 40)");
  add_common(identity);

  CLI::App* sweep = app.add_subcommand("sweep", "Verify every identity over a parameter range");
  sweep->add_option("--max-g", config.max_g, "Largest genus (default 12)");
  sweep->add_option("--max-m", config.max_m, "Largest m for the gessel suites (default 30)");
  sweep->add_option("--max-a", config.max_a, "Largest even a for the gessel suites (default 60)");
  sweep->add_option("--max-n", config.max_n, "Largest n for chu-vandermonde and q-binomial (default 40)");
  sweep->add_option("--jobs", config.jobs, "Worker threads (default: hardware concurrency)");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitVerified};
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return {std::nullopt, kExitUsage};
  }

  if (diamond->parsed()) {
    config.command = Command::diamond;
  } else if (verify->parsed()) {
    config.command = Command::verify;
  } else if (identity->parsed()) {
    config.command = Command::identity;
  } else {
    config.command = Command::sweep;
  }
  config.format = format == "json" ? Format::json : Format::text;
  config.timing = !no_timing;
  return {config, kExitVerified};
}

}  // namespace fanohodge::cli
