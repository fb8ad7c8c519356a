#include "gonalbn/splitting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gonalbn {

SplittingVector::SplittingVector(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("splitting vector must have length >= 1");
    }
    std::sort(entries_.begin(), entries_.end());
}

std::int64_t SplittingVector::degree() const {
    std::int64_t s = 0;
    for (auto e : entries_) s += e;
    return s;
}

std::int64_t SplittingVector::h0() const {
    std::int64_t s = 0;
    for (auto e : entries_) s += std::max<std::int64_t>(0, e + 1);
    return s;
}

std::int64_t SplittingVector::h1() const {
    std::int64_t s = 0;
    for (auto e : entries_) s += std::max<std::int64_t>(0, -e - 1);
    return s;
}

std::int64_t SplittingVector::magnitude() const {
    std::int64_t s = 0;
    const auto n = entries_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            s += std::max<std::int64_t>(0, entries_[j] - entries_[i] - 1);
        }
    }
    return s;
}

SplittingVector balanced(int rank, std::int64_t degree) {
    if (rank < 1) throw std::invalid_argument("balanced: rank must be >= 1");
    // floor division toward -infinity
    std::int64_t q = degree / rank;
    std::int64_t r = degree % rank;
    if (r < 0) {
        q -= 1;
        r += rank;
    }
    // `rank - r` entries equal q, then `r` entries equal q+1
    std::vector<std::int64_t> entries(static_cast<std::size_t>(rank), q);
    for (std::int64_t i = 0; i < r; ++i) {
        entries[static_cast<std::size_t>(rank - 1 - i)] = q + 1;
    }
    return SplittingVector(std::move(entries));
}

std::vector<std::int64_t> cat_entries(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

SplittingVector concat(const SplittingVector& a, const SplittingVector& b) {
    return SplittingVector(cat_entries(a.entries(), b.entries()));
}

bool dominates(const SplittingVector& upper, const SplittingVector& lower) {
    if (upper.length() != lower.length()) {
        throw std::invalid_argument("dominates: incomparable (length mismatch)");
    }
    if (upper.degree() != lower.degree()) {
        throw std::invalid_argument("dominates: incomparable (degree mismatch)");
    }
    std::int64_t pu = 0;
    std::int64_t pl = 0;
    const auto& u = upper.entries();
    const auto& l = lower.entries();
    for (std::size_t k = 0; k < u.size(); ++k) {
        pu += u[k];
        pl += l[k];
        if (pl > pu) return false;
    }
    return true;
}

std::vector<SplittingVector> cover_moves_up(const SplittingVector& v) {
    std::set<std::vector<std::int64_t>> seen;
    const auto& e = v.entries();
    const auto n = e.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (e[i] <= e[j] - 2) {
                std::vector<std::int64_t> moved = e;
                moved[i] += 1;
                moved[j] -= 1;
                std::sort(moved.begin(), moved.end());
                seen.insert(std::move(moved));
            }
        }
    }
    std::vector<SplittingVector> out;
    out.reserve(seen.size());
    for (auto& entries : seen) out.emplace_back(entries);
    return out;
}

}  // namespace gonalbn
