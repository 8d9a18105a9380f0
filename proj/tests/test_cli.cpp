#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "padic/serialize.hpp"

using namespace padic;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PADICSUMS_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("verify --claim bogus").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify --claim thm1.1 --format nosuch").exit_code == 2);
  CHECK(run_cli("compute --op binomial").exit_code == 2);  // missing operands
}

TEST_CASE("resource guards exit with code 3") {
  CHECK(run_cli("search --special-primes --bound 2000000").exit_code == 3);
}

TEST_CASE("verify --list names every claim") {
  auto r = run_cli("verify --list");
  CHECK(r.exit_code == 0);
  for (const char* claim : {"thm1.1", "corollaries", "thm1.2-i", "special-primes", "conj1.1"})
    CHECK(r.out.find(claim) != std::string::npos);
}

TEST_CASE("special-prime search output") {
  auto r = run_cli("search --special-primes --bound 100");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"p\":3") != std::string::npos);
  CHECK(r.out.find("\"p\":11") != std::string::npos);
  CHECK(r.out.find("\"p\":13") == std::string::npos);
}

TEST_CASE("compute subcommand") {
  auto r = run_cli("compute --op binomial --n 10 --k 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("252") != std::string::npos);

  auto vpr = run_cli("compute --op vp --x 4/9 --p 3");
  CHECK(vpr.exit_code == 0);
  CHECK(vpr.out.find("-2") != std::string::npos);

  auto lucas = run_cli("compute --op lucas-u --A 1 --B -1 --n 10");
  CHECK(lucas.exit_code == 0);
  CHECK(lucas.out.find("55") != std::string::npos);
}

TEST_CASE("json-lines output round-trips through the parser") {
  auto r = run_cli("verify --claim sec3 --n-max 20 --format json-lines");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    VerificationRecord rec = parse_record_json(line);
    CHECK(serialize_record(rec, OutputFormat::json_lines) == line);
    CHECK(rec.passed());
    ++count;
  }
  CHECK(count == 40);  // two identities per n
}

TEST_CASE("csv and human formats emit one line per record") {
  auto csv = run_cli("verify --claim sec3 --n-max 5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("sec3/sigma") != std::string::npos);
  auto human = run_cli("verify --claim sec3 --n-max 5 --format human");
  CHECK(human.exit_code == 0);
  CHECK(human.out.find("PASS") != std::string::npos);
}

TEST_CASE("worker count does not change the bytes written") {
  std::string a = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/cli_a.jsonl";
  std::string b = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/cli_b.jsonl";
  CHECK(run_cli("verify --claim lem2.4 --n-max 6 --workers 1 --out " + a).exit_code == 0);
  CHECK(run_cli("verify --claim lem2.4 --n-max 6 --workers 4 --out " + b).exit_code == 0);
  std::string ca = slurp(a), cb = slurp(b);
  CHECK_FALSE(ca.empty());
  CHECK(ca == cb);
  std::remove(a.c_str());
  std::remove(b.c_str());
}
