// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Optional arguments: path to the CLI binary and to the golden directory;
// both are supplied by the ctest registration so the byte-stability
// criterion runs in-process too.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "derange/bijections.hpp"
#include "derange/families.hpp"
#include "derange/identities.hpp"
#include "derange/numbers.hpp"
#include "derange/orthopoly.hpp"
#include "derange/series.hpp"

using namespace derange;

namespace {

bool run_criterion(const char* label, double budget_s, const std::function<bool()>& fn,
                   bool& all) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    err = e.what();
  }
  const double el =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = ok && el <= budget_s;
  all = all && pass;
  std::printf("[%s] %-52s %7.2fs  (budget %.0fs)\n", pass ? "PASS" : "FAIL", label, el,
              budget_s);
  if (!err.empty()) std::printf("       exception: %s\n", err.c_str());
  if (ok && el > budget_s) std::printf("       correct but over budget\n");
  return pass;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string capture(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  if (pclose(p) != 0) throw std::runtime_error("nonzero exit: " + cmd);
  return out;
}

const std::vector<std::vector<Int>> kMinimaTable = {
    {1},
    {1, 1},
    {3, 5, 1},
    {11, 21, 11, 1},
    {53, 113, 79, 19, 1},
    {309, 715, 589, 211, 29, 1},
    {2119, 5235, 4835, 2141, 461, 41, 1}};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::string golden_dir = argc > 2 ? argv[2] : "";
  bool all = true;

  run_criterion("identity catalog, full ranges", 60, [] {
    const auto cases = verify_all_identities(7, 5);
    if (cases.empty()) return false;
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }, all);

  run_criterion("minima table to n=8, both routes", 10, [] {
    if (rlm_table(8) != kMinimaTable) return false;
    for (int n = 2; n <= 8; ++n)
      if (rlm_row_cf(n) != kMinimaTable[static_cast<std::size_t>(n) - 2]) return false;
    return true;
  }, all);

  run_criterion("three-variable moments vs sums to n=7", 30, [] {
    return all_pass(verify_jfraction_theorem(7));
  }, all);

  run_criterion("bijection contracts, all slices and sizes", 60, [] {
    for (int n = 2; n <= 7; ++n)
      for (int j = 1; j <= n - 1; ++j)
        if (!check_slice_bijections(n, j).pass()) return false;
    for (int n = 2; n <= 5; ++n)
      if (!typeb_matching(n).pass()) return false;
    for (int n = 2; n <= 5; ++n)
      if (!check_typeb_recursion(n).pass()) return false;
    return true;
  }, all);

  run_criterion("orthogonality of the displayed family", 10, [] {
    const MomentFunctional L = MomentFunctional::from_fraction(2);
    const Poly a(Var::a());
    if (!(L.mu[2] - (a + 1) * L.mu[1] - a * L.mu[0]).is_zero()) return false;
    return orthogonality_check(6).pass();
  }, all);

  run_criterion("integer sequences and their relations", 5, [] {
    return check_number_relations(8);
  }, all);

  run_criterion("command-line output byte-stable", 60, [&] {
    if (cli.empty() || golden_dir.empty()) {
      std::printf("       missing CLI or golden path arguments\n");
      return false;
    }
    const std::string table = capture(cli + " table --max-n 8 --format csv");
    if (table != slurp(golden_dir + "/table_max8.csv")) return false;
    const std::string verify =
        capture(cli + " verify --all --format json --deterministic");
    return verify == slurp(golden_dir + "/verify_all.json");
  }, all);

  std::printf("%s\n", all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES above");
  return all ? 0 : 1;
}
