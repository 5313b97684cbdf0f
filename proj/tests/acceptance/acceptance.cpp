// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "dw/verify.hpp"

using namespace dw;

namespace {

int failed = 0;

void criterion(int id, const char* what, double limit_s, const std::function<Report()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  std::string err;
  try {
    r = run();
  } catch (const std::exception& e) {
    err = e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || s < limit_s;
  const bool ok = err.empty() && r.ok() && r.checks > 0 && in_time;
  if (!ok) ++failed;
  std::printf("AC%d %s %s: %zu cases, %zu checks, %zu failures, %.2f s", id, ok ? "PASS" : "FAIL", what, r.cases,
              r.checks, r.failures.size(), s);
  if (limit_s > 0) std::printf(" (limit %.0f s)", limit_s);
  if (!err.empty()) std::printf(" error: %s", err.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
    std::printf("    %s\n      %s\n      %s\n", r.failures[i].inputs.dump().c_str(), r.failures[i].lhs.c_str(),
                r.failures[i].rhs.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
  criterion(1, "operator identities", 60, [&] { return verify_operators(seed, 200); });
  criterion(2, "rank-3 closed form", 0, [&] { return verify_rank3(seed, 100); });
  criterion(3, "dual-basis residues", 0, [&] { return verify_residues(seed, 100); });
  criterion(4, "f-remainders", 0, [&] { return verify_remainders(seed, 200); });
  criterion(5, "truncated generating functions, N = 3", 300, [&] { return verify_agf(seed, 3); });
  criterion(6, "Maurischat-Perkins congruence", 0, [&] { return verify_maurischat_perkins(seed); });
  criterion(7, "main theorem, r = 2, N = 2", 0, [&] { return verify_main_theorem(seed); });
  criterion(8, "pairing axioms", 60, [&] { return verify_pairing_axioms(seed, 200); });
  criterion(9, "torsion sanity", 0, [&] { return verify_torsion(seed, 24); });
  return failed ? 1 : 0;
}
