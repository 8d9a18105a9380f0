#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "padic/bernoulli.hpp"
#include "padic/claims.hpp"
#include "padic/combinatorics.hpp"
#include "padic/digits.hpp"
#include "padic/errors.hpp"
#include "padic/lucas.hpp"
#include "padic/serialize.hpp"
#include "padic/sums.hpp"
#include "padic/valuation.hpp"
#include "padic/verifier.hpp"

namespace {

using namespace padic;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

struct CommonArgs {
  std::string format = "json-lines";
  std::string out_path;
  unsigned workers = 1;
};

std::ostream& open_output(const CommonArgs& common, std::ofstream& file) {
  if (common.out_path.empty()) return std::cout;
  file.open(common.out_path);
  if (!file) throw bad_parameters_error("cannot open output file: " + common.out_path);
  return file;
}

int emit_records(const std::vector<VerificationRecord>& records, const CommonArgs& common) {
  const OutputFormat format = parse_format(common.format);
  std::ofstream file;
  std::ostream& os = open_output(common, file);
  bool any_fail = false;
  for (const auto& rec : records) {
    os << serialize_record(rec, format) << "\n";
    if (rec.status == RecordStatus::fail) any_fail = true;
  }
  return any_fail ? kExitFail : kExitPass;
}

struct ClaimFlags {
  std::string claim;
  bool all = false;
  std::optional<std::uint64_t> n_max;
  std::optional<long> m;
  std::string m_range;
  std::optional<std::uint64_t> p;
  std::string p_set;
  std::optional<unsigned> a_max;
  std::optional<std::uint64_t> bound;
  std::optional<std::uint64_t> p_max;
};

void add_claim_flags(CLI::App* cmd, ClaimFlags& flags, CommonArgs& common) {
  cmd->add_option("--claim", flags.claim, "claim identifier (see --list)");
  cmd->add_flag("--all", flags.all, "run every claim at its default (acceptance) ranges");
  cmd->add_option("--n-max", flags.n_max, "upper bound for n ranges");
  cmd->add_option("--m", flags.m, "single m value");
  cmd->add_option("--m-range", flags.m_range, "m range as LO:HI");
  cmd->add_option("--p", flags.p, "single prime p");
  cmd->add_option("--p-set", flags.p_set, "comma-separated primes");
  cmd->add_option("--a-max", flags.a_max, "upper bound for prime-power exponents");
  cmd->add_option("--bound", flags.bound, "search bound");
  cmd->add_option("--p-max", flags.p_max, "upper bound for prime ranges");
  cmd->add_option("--workers", common.workers, "worker thread count")->check(CLI::Range(1, 64));
  cmd->add_option("--format", common.format, "json-lines | csv | human")
      ->check(CLI::IsMember({"json-lines", "csv", "human"}));
  cmd->add_option("--out", common.out_path, "write output to FILE instead of stdout");
}

ClaimOptions to_claim_options(const ClaimFlags& flags, const CommonArgs& common) {
  ClaimOptions opt;
  opt.n_max = flags.n_max;
  opt.m = flags.m;
  opt.p = flags.p;
  opt.a_max = flags.a_max;
  opt.bound = flags.bound;
  opt.p_max = flags.p_max;
  opt.workers = common.workers;
  if (!flags.m_range.empty()) {
    const auto colon = flags.m_range.find(':');
    if (colon == std::string::npos)
      throw bad_parameters_error("--m-range expects LO:HI, got: " + flags.m_range);
    opt.m_range = std::make_pair(std::stol(flags.m_range.substr(0, colon)),
                                 std::stol(flags.m_range.substr(colon + 1)));
  }
  if (!flags.p_set.empty()) {
    std::vector<std::uint64_t> primes;
    std::stringstream ss(flags.p_set);
    std::string item;
    while (std::getline(ss, item, ',')) primes.push_back(std::stoull(item));
    opt.p_set = std::move(primes);
  }
  return opt;
}

int run_claims(const std::vector<std::string>& claims, const ClaimFlags& flags,
               const CommonArgs& common) {
  const ClaimOptions opt = to_claim_options(flags, common);
  std::vector<ClaimTask> tasks;
  for (const auto& claim : claims)
    for (auto& task : build_claim_tasks(claim, opt)) tasks.push_back(std::move(task));
  return emit_records(run_claim_tasks(std::move(tasks), common.workers), common);
}

int run_verify(const ClaimFlags& flags, const CommonArgs& common) {
  if (flags.all) return run_claims(known_claims(), flags, common);
  if (flags.claim.empty()) throw bad_parameters_error("verify: need --claim or --all");
  if (!is_known_claim(flags.claim))
    throw bad_parameters_error("verify: unknown claim: " + flags.claim);
  return run_claims({flags.claim}, flags, common);
}

int run_scan(const ClaimFlags& flags, const CommonArgs& common) {
  if (flags.all) return run_claims({"conj1.1", "conj1.2"}, flags, common);
  if (flags.claim != "conj1.1" && flags.claim != "conj1.2")
    throw bad_parameters_error("scan: claim must be conj1.1 or conj1.2");
  return run_claims({flags.claim}, flags, common);
}

int run_search(const ClaimFlags& flags, const CommonArgs& common) {
  return run_claims({"special-primes"}, flags, common);
}

struct ComputeFlags {
  std::string op;
  std::optional<long long> n, k, m, a, b, h, p;
  std::string x;
  bool alternating = false;
};

int run_compute(const ComputeFlags& flags, const CommonArgs& common) {
  auto need = [](const std::optional<long long>& v, const char* name) -> long long {
    if (!v) throw bad_parameters_error(std::string("compute: missing --") + name);
    return *v;
  };

  std::vector<std::pair<std::string, long long>> params;
  std::string value;

  if (flags.op == "binomial") {
    long long n = need(flags.n, "n"), k = need(flags.k, "k");
    params = {{"n", n}, {"k", k}};
    value = binomial(static_cast<std::uint64_t>(n), k).get_str();
  } else if (flags.op == "multinomial") {
    long long h = need(flags.h, "h"), k = need(flags.k, "k");
    params = {{"h", h}, {"k", k}};
    value = multinomial_equal(static_cast<unsigned>(h), static_cast<std::uint64_t>(k)).get_str();
  } else if (flags.op == "catalan") {
    long long k = need(flags.k, "k");
    params = {{"k", k}};
    value = catalan(static_cast<std::uint64_t>(k)).get_str();
  } else if (flags.op == "bernoulli") {
    long long n = need(flags.n, "n");
    params = {{"n", n}};
    value = bernoulli(static_cast<unsigned>(n)).get_str();
  } else if (flags.op == "vp") {
    long long p = need(flags.p, "p");
    if (flags.x.empty()) throw bad_parameters_error("compute: missing --x");
    mpq_class x(flags.x);
    x.canonicalize();
    params = {{"p", p}};
    Valuation v = vp(x, static_cast<std::uint64_t>(p));
    value = v.infinite ? "inf" : std::to_string(v.value);
  } else if (flags.op == "factorial-vp") {
    long long n = need(flags.n, "n"), p = need(flags.p, "p");
    params = {{"n", n}, {"p", p}};
    value = std::to_string(
        factorial_vp(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p)));
  } else if (flags.op == "central-sum" || flags.op == "central-sum-alt") {
    long long n = need(flags.n, "n"), m = need(flags.m, "m");
    params = {{"n", n}, {"m", m}};
    auto cs = flags.op == "central-sum" ? central_sum(static_cast<std::uint64_t>(n), mpz_class(static_cast<long>(m)))
                                        : central_sum_alt(static_cast<std::uint64_t>(n),
                                                          mpz_class(static_cast<long>(m)));
    value = cs.normalized_value.get_str();
  } else if (flags.op == "multinomial-sum") {
    long long n = need(flags.n, "n"), h = need(flags.h, "h");
    params = {{"n", n}, {"h", h}, {"alternating", flags.alternating ? 1 : 0}};
    value = multinomial_sum(static_cast<std::uint64_t>(n), static_cast<unsigned>(h),
                            flags.alternating)
                .value.get_str();
  } else if (flags.op == "lucas-u") {
    long long a = need(flags.a, "A"), b = need(flags.b, "B"), n = need(flags.n, "n");
    params = {{"A", a}, {"B", b}, {"n", n}};
    value = lucas_u(LucasParams{mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b))}, static_cast<std::uint64_t>(n))
                .get_str();
  } else if (flags.op == "dyson") {
    long long h = need(flags.h, "h"), k = need(flags.k, "k");
    params = {{"h", h}, {"k", k}};
    value = dyson_constant_term(static_cast<unsigned>(h), static_cast<std::uint64_t>(k)).get_str();
  } else {
    throw bad_parameters_error("compute: unknown op: " + flags.op);
  }

  // Computed values reuse the record line formats with the op as claim id.
  VerificationRecord rec;
  rec.claim_id = "compute/" + flags.op;
  rec.params = std::move(params);
  rec.status = RecordStatus::pass;
  rec.note("value", value);
  return emit_records({rec}, common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verifier for central-binomial and multinomial sum congruences"};
  app.require_subcommand(1);

  CommonArgs common;
  ClaimFlags verify_flags, scan_flags, search_flags;
  ComputeFlags compute_flags;
  bool list_claims = false;

  CLI::App* verify = app.add_subcommand("verify", "run claim checkers");
  add_claim_flags(verify, verify_flags, common);
  verify->add_flag("--list", list_claims, "list known claim identifiers");

  CLI::App* scan = app.add_subcommand("scan", "scan a conjecture for counterexamples");
  add_claim_flags(scan, scan_flags, common);

  CLI::App* search = app.add_subcommand("search", "search for special primes");
  bool special_primes = false;
  search->add_flag("--special-primes", special_primes,
                   "search odd primes with (p-2)! == 1 (mod p^2)");
  add_claim_flags(search, search_flags, common);

  CLI::App* compute = app.add_subcommand("compute", "compute a single quantity");
  // --h is a real operand here, so keep only the long help flag
  compute->set_help_flag("--help", "print help");
  compute->add_option("--op", compute_flags.op,
                      "binomial | multinomial | catalan | bernoulli | vp | factorial-vp | "
                      "central-sum | central-sum-alt | multinomial-sum | lucas-u | dyson")
      ->required();
  compute->add_option("--n", compute_flags.n, "n");
  compute->add_option("--k", compute_flags.k, "k");
  compute->add_option("--m", compute_flags.m, "m");
  compute->add_option("--h", compute_flags.h, "h");
  compute->add_option("--p", compute_flags.p, "p");
  compute->add_option("--A", compute_flags.a, "Lucas parameter A");
  compute->add_option("--B", compute_flags.b, "Lucas parameter B");
  compute->add_option("--x", compute_flags.x, "rational argument, e.g. 4/9");
  compute->add_flag("--alternating", compute_flags.alternating, "alternating sum");
  compute->add_option("--format", common.format, "json-lines | csv | human")
      ->check(CLI::IsMember({"json-lines", "csv", "human"}));
  compute->add_option("--out", common.out_path, "write output to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (list_claims) {
        for (const auto& c : known_claims()) std::cout << c << "\n";
        return kExitPass;
      }
      return run_verify(verify_flags, common);
    }
    if (scan->parsed()) return run_scan(scan_flags, common);
    if (search->parsed()) return run_search(search_flags, common);
    if (compute->parsed()) return run_compute(compute_flags, common);
    return kExitUsage;
  } catch (const resource_guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const bad_parameters_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
