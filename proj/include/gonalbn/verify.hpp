#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gonalbn/oracle.hpp"

namespace gonalbn {

struct SweepReport {
    std::int64_t cells = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Brute-force-versus-closed-form sweep over all gonalities nu in [3,
/// nu_max], section counts r in [0, r_max] and pushforward degrees with
/// |d'| <= dprime_abs_max inside the special range; each cell checks
/// exact set equality plus the per-vector cover-move certificates.
SweepReport oracle_equivalence_sweep(int nu_max = 6, int r_max = 3,
                                     int dprime_abs_max = 12, int window_pad = 3,
                                     bool parallel = true);

/// Randomized splitting-type property suites (dominance partial order,
/// balanced maximum, semicontinuity, index identity) with a fixed seed.
SweepReport splitting_property_suite(int iterations = 10000, std::uint64_t seed = 2024);

/// Classifier invariants swept over 4 <= g <= g_max, all admissible nu,
/// all 2g-2 <= d <= 4g-4: regularity guard, dimension lower bound,
/// family dimension identities, status coherence, atlas coverage.
SweepReport rank_two_invariant_sweep(std::int64_t g_max = 40, bool parallel = true);

struct VerificationReport {
    std::int64_t g_max = 0;
    int nu_max = 0;
    CrosscheckReport tables;
    SweepReport oracle_sweep;
    SweepReport properties;
    SweepReport rank_two;
    bool pass() const {
        return tables.pass() && oracle_sweep.pass() && properties.pass() &&
               rank_two.pass();
    }
};

/// Full verification battery behind the `verify` subcommand.
VerificationReport run_verification(std::int64_t g_max, int nu_max, int window_pad = 3,
                                    bool parallel = true);

}  // namespace gonalbn
