#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gonalbn/splitting.hpp"

namespace gonalbn {

/// Brute-force enumeration window: sorted `length`-tuples with entries in
/// [entry_min, entry_max] summing to `degree`.
struct EnumWindow {
    int length = 1;
    std::int64_t degree = 0;
    std::int64_t entry_min = 0;
    std::int64_t entry_max = 0;
};

/// Streams every tuple of the window exactly once, in lexicographic
/// order.  An infeasible window yields nothing (not an error).
void for_each_vector(const EnumWindow& w,
                     const std::function<void(const std::vector<std::int64_t>&)>& visit);

std::vector<SplittingVector> enumerate_vectors(const EnumWindow& w);

/// Independent count of the window's tuples (restricted-partition
/// recursion with memoization); used to certify the enumerator.
std::int64_t count_vectors(const EnumWindow& w);

struct MaximalSetResult {
    std::vector<SplittingVector> maximal;  // lexicographically sorted
    bool conclusive = true;                // window certified (no boundary contact)
    int pad_used = 0;
    std::vector<std::string> issues;       // certificate / completeness violations
    bool clean() const { return conclusive && issues.empty(); }
};

/// Brute-force maximal splitting types: enumerates all length-nu vectors
/// of pushforward degree d+1-g-nu with entries within
/// [-(|d'|+nu+r+pad), |d'|+nu+r+pad], filters h0 >= r+1 and keeps the
/// vectors none of whose upward cover moves stays in the filtered set
/// (the window-independence certificate).  The window pad doubles up to
/// two retries if a maximal vector touches the window boundary.
///
/// Requires the special range r > d - g (std::invalid_argument otherwise).
MaximalSetResult maximal_with_sections(std::int64_t g, int nu, std::int64_t d, int r,
                                       int window_pad = 3);

struct CrosscheckIssue {
    std::int64_t g = 0;
    int nu = 0;
    std::int64_t t = 0;
    int r = 0;
    std::string what;
};

struct CrosscheckReport {
    std::int64_t cells = 0;
    std::int64_t oracle_cells = 0;
    std::vector<CrosscheckIssue> failures;
    std::vector<CrosscheckIssue> notes;  // printed rows listing redundant strata
    bool pass() const { return failures.empty(); }
};

/// Triangulates the three routes over the grid 4 <= g <= g_max,
/// 3 <= nu <= nu_max (within the gonality hypothesis), nu <= t <= g+3,
/// r in {1, 2}:
///   - printed case tables against the closed-form component lists,
///   - closed-form maximal vectors against the brute-force maximal sets,
///   - component lists against the brute-force sets filtered by
///     non-negative expected dimension.
/// A printed row naming a stratum that is not a component passes only if
/// the stratum is certified redundant (vector nonexistent or strictly
/// dominated by an emitted component); such rows are recorded as notes.
CrosscheckReport crosscheck_tables(std::int64_t g_max, int nu_max, int window_pad = 3,
                                   bool parallel = true);

/// True when the parallel path actually runs multithreaded.
bool openmp_enabled();

}  // namespace gonalbn
