#pragma once

#include <cstdint>
#include <vector>

namespace gonalbn {

/// Splitting type of a vector bundle on the projective line: a sorted
/// non-decreasing tuple of summand degrees (e1 <= ... <= en), n >= 1.
///
/// Value type; the canonical sorted form is enforced at construction
/// (unsorted input is sorted, never rejected).  All arithmetic is exact
/// 64-bit integer arithmetic.
class SplittingVector {
public:
    /// Sorts `entries`; throws std::invalid_argument when empty.
    explicit SplittingVector(std::vector<std::int64_t> entries);

    const std::vector<std::int64_t>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }

    /// Sum of the entries.
    std::int64_t degree() const;

    /// Global sections: sum of max(0, e+1) over the entries.
    std::int64_t h0() const;

    /// First cohomology: sum of max(0, -e-1) over the entries.
    std::int64_t h1() const;

    /// Expected codimension of the splitting stratum:
    /// sum over index pairs i<j of max(0, e_j - e_i - 1).
    std::int64_t magnitude() const;

    friend bool operator==(const SplittingVector& a, const SplittingVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const SplittingVector& a, const SplittingVector& b) {
        return !(a == b);
    }
    /// Lexicographic; used only for canonical container ordering.
    friend bool operator<(const SplittingVector& a, const SplittingVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<std::int64_t> entries_;
};

/// The unique rank-`rank`, degree-`degree` vector whose entries pairwise
/// differ by at most one.  Throws std::invalid_argument when rank < 1.
SplittingVector balanced(int rank, std::int64_t degree);

/// Sorted merge of the two tuples (direct-sum degree sequence).
SplittingVector concat(const SplittingVector& a, const SplittingVector& b);

/// Specialization order by ascending partial sums: returns true iff every
/// partial sum of `lower` is <= the corresponding partial sum of `upper`,
/// i.e. lower <= upper with the balanced vector the unique maximum of its
/// (length, degree) class.  Throws std::invalid_argument when lengths or
/// degrees differ (incomparable).
bool dominates(const SplittingVector& upper, const SplittingVector& lower);

/// All one-step moves toward balance: pick entries e_i <= e_j - 2 and
/// replace them by (e_i+1, e_j-1).  Deduplicated, sorted output; every
/// element strictly dominates the input.
std::vector<SplittingVector> cover_moves_up(const SplittingVector& v);

std::vector<std::int64_t> cat_entries(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b);

}  // namespace gonalbn
