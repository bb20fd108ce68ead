/// Named verification suites behind the CLI `verify` subcommand and the
/// acceptance runner. Check ids are stable and reports are sorted by id,
/// so a run is deterministic for a fixed seed.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpoincare/report.hpp"

namespace qpoin {

struct VerifyOptions {
    uint64_t seed = 1;
    int trials = 500;   // confluence fuzz trials
    int max_len = 8;    // confluence fuzz word length
    std::vector<double> qvalues;  // spin-rep residual grid (limit suite)
};

/// suite names accepted by run_suite, including "all"
const std::vector<std::string>& suite_names();

/// run one suite; results sorted by check id; throws DomainError for an
/// unknown suite name
std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& opts = {});

}  // namespace qpoin
