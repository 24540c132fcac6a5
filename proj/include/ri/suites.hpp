#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ri/checks.hpp"

namespace ri {

std::vector<CheckRecord> suite_norms(std::uint64_t seed);
std::vector<CheckRecord> suite_growth(std::uint64_t seed);
std::vector<CheckRecord> suite_oneil(std::uint64_t seed);
std::vector<CheckRecord> suite_kolmogorov(std::uint64_t seed);
std::vector<CheckRecord> suite_transfer(std::uint64_t seed);
std::vector<CheckRecord> suite_maximal(std::uint64_t seed);
std::vector<CheckRecord> suite_statphys(std::uint64_t seed);

// name in {norms, growth, oneil, kolmogorov, transfer, maximal, statphys, all}.
// Checks run as independent jobs on `jobs` threads; the aggregated report is
// sorted by check_name then params hash, so output is deterministic.
std::vector<CheckRecord> run_suite(const std::string& name, std::uint64_t seed, int jobs);

}  // namespace ri
