#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dw {

struct Failure {
  nlohmann::json inputs;
  std::string lhs, rhs;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0, checks = 0;
  std::vector<Failure> failures;
  nlohmann::json guard_band;  // main-theorem only
  double elapsed = 0;
  bool ok() const { return failures.empty(); }
};

// operators, residues, remainders, agf, maurischat-perkins, main-theorem, pairing-axioms, torsion, all
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// cases == 0 and trunc == 0 pick the suite defaults; trunc only affects agf
Report run_suite(const std::string& name, std::uint64_t seed, std::size_t cases = 0, std::size_t trunc = 0);
nlohmann::json report_json(const Report& r, bool timing = false);

// Individual parts.
Report verify_operators(std::uint64_t seed, std::size_t per_q);
Report verify_rank3(std::uint64_t seed, std::size_t random_cases);
Report verify_residues(std::uint64_t seed, std::size_t cases);
Report verify_remainders(std::uint64_t seed, std::size_t cases);
Report verify_agf(std::uint64_t seed, std::size_t N);
Report verify_maurischat_perkins(std::uint64_t seed);
Report verify_main_theorem(std::uint64_t seed);
Report verify_pairing_axioms(std::uint64_t seed, std::size_t samples);
Report verify_torsion(std::uint64_t seed, std::size_t cases);

}  // namespace dw
