#include "gonalbn/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "gonalbn/rank_one.hpp"
#include "gonalbn/rank_two.hpp"

namespace gonalbn {

namespace {

void failf(std::vector<std::string>& out, const std::string& what) {
    out.push_back(what);
}

std::string show(const SplittingVector& v) {
    std::ostringstream os;
    os << '(';
    const auto& e = v.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

SweepReport oracle_equivalence_sweep(int nu_max, int r_max, int dprime_abs_max,
                                     int window_pad, bool parallel) {
    struct SweepCell {
        int nu;
        int r;
        std::int64_t dprime;
    };
    std::vector<SweepCell> cells;
    for (int nu = 3; nu <= nu_max; ++nu) {
        for (int r = 0; r <= r_max; ++r) {
            // special range r > d - g reads d' <= r - nu on pushforward degrees
            for (std::int64_t dp = -dprime_abs_max;
                 dp <= std::min<std::int64_t>(r - nu, dprime_abs_max); ++dp) {
                cells.push_back({nu, r, dp});
            }
        }
    }

    std::vector<std::vector<std::string>> fails(cells.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells.size()); ++idx) {
        const auto& cell = cells[static_cast<std::size_t>(idx)];
        auto& out = fails[static_cast<std::size_t>(idx)];
        // realize (g, d) for this pushforward degree; the maximal set and
        // the side conditions depend only on (nu, r, d')
        const std::int64_t g = 60;
        const std::int64_t d = cell.dprime - 1 + g + cell.nu;

        MaximalSetResult oracle;
        try {
            oracle = maximal_with_sections(g, cell.nu, d, cell.r, window_pad);
        } catch (const std::exception& e) {
            failf(out, std::string("oracle threw: ") + e.what());
            continue;
        }
        std::ostringstream tag;
        tag << "(nu=" << cell.nu << ", r=" << cell.r << ", d'=" << cell.dprime << ") ";
        if (!oracle.clean()) {
            for (const auto& i : oracle.issues) failf(out, tag.str() + i);
            if (!oracle.conclusive) failf(out, tag.str() + "window inconclusive");
        }
        std::vector<SplittingVector> formula;
        for (int ell = 0; ell <= cell.r; ++ell) {
            auto vec = maximal_splitting_vector(g, cell.nu, d, cell.r, ell);
            if (vec) formula.push_back(*vec);
        }
        std::sort(formula.begin(), formula.end());
        if (formula != oracle.maximal) {
            std::ostringstream os;
            os << tag.str() << "set mismatch: formula {";
            for (const auto& v : formula) os << show(v) << ' ';
            os << "} vs brute force {";
            for (const auto& v : oracle.maximal) os << show(v) << ' ';
            os << '}';
            failf(out, os.str());
        }
    }

    SweepReport report;
    report.cells = static_cast<std::int64_t>(cells.size());
    for (auto& f : fails) {
        report.failures.insert(report.failures.end(), f.begin(), f.end());
    }
    return report;
}

SweepReport splitting_property_suite(int iterations, std::uint64_t seed) {
    SweepReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 7);
    std::uniform_int_distribution<std::int64_t> entry_dist(-9, 9);

    auto random_vector = [&](int len) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(len));
        for (auto& x : e) x = entry_dist(rng);
        return SplittingVector(std::move(e));
    };

    for (int it = 0; it < iterations; ++it) {
        report.cells += 1;
        const int len = len_dist(rng);
        const SplittingVector v = random_vector(len);

        // index identity h0 - h1 = degree + length
        if (v.h0() - v.h1() != v.degree() + v.length()) {
            failf(report.failures, "index identity fails at " + show(v));
        }
        if (!dominates(v, v)) {
            failf(report.failures, "dominance not reflexive at " + show(v));
        }

        const SplittingVector bal = balanced(len, v.degree());
        if (bal.magnitude() != 0) {
            failf(report.failures, "balanced vector has nonzero magnitude " + show(bal));
        }
        if (!dominates(bal, v)) {
            failf(report.failures, "balanced does not dominate " + show(v));
        }
        if (v != bal && dominates(v, bal)) {
            failf(report.failures, "antisymmetry fails against balanced at " + show(v));
        }

        // semicontinuity along each upward move, and termination at balanced
        SplittingVector cur = v;
        int steps = 0;
        while (true) {
            auto ups = cover_moves_up(cur);
            if (ups.empty()) break;
            for (const auto& up : ups) {
                if (!dominates(up, cur) || up == cur) {
                    failf(report.failures, "cover move does not strictly dominate " + show(cur));
                }
                if (up.h0() > cur.h0() || up.h1() > cur.h1()) {
                    failf(report.failures, "h0/h1 increase along a move at " + show(cur));
                }
            }
            cur = ups[static_cast<std::size_t>(
                std::uniform_int_distribution<int>(0, static_cast<int>(ups.size()) - 1)(rng))];
            if (++steps > 4000) {
                failf(report.failures, "move chain does not terminate from " + show(v));
                break;
            }
        }
        if (cur != bal) {
            failf(report.failures, "move chain from " + show(v) + " ends at " + show(cur));
        }

        // transitivity and antisymmetry on a random comparable-or-not triple
        const SplittingVector a = random_vector(len);
        std::vector<std::int64_t> be = a.entries();
        // redistribute to keep length and degree
        for (int k = 0; k < 3 && be.size() >= 2; ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, be.size() - 1);
            std::size_t i = pick(rng), j = pick(rng);
            if (i != j) {
                be[i] += 1;
                be[j] -= 1;
            }
        }
        const SplittingVector b(std::move(be));
        const SplittingVector c = balanced(len, a.degree());
        if (dominates(b, a) && dominates(a, b) && a != b) {
            failf(report.failures, "antisymmetry fails: " + show(a) + " ~ " + show(b));
        }
        if (dominates(b, a) && dominates(c, b) && !dominates(c, a)) {
            failf(report.failures, "transitivity fails through " + show(b));
        }
    }
    return report;
}

namespace {

void check_report_invariants(const ClassifierReport& rep, std::vector<std::string>& out) {
    std::ostringstream tag;
    tag << "(g=" << rep.g << ", nu=" << rep.nu << ", d=" << rep.d << ") ";
    const std::int64_t g = rep.g;
    const std::int64_t n = rep.nu;
    const std::int64_t d = rep.d;

    const bool in_range = d >= 2 * g - 2 && d <= 4 * g - 4;
    if (!in_range) {
        if (rep.status != ReportStatus::NotApplicable) {
            failf(out, tag.str() + "out-of-range degree not marked NotApplicable");
        }
        return;
    }
    if (rep.status == ReportStatus::NotApplicable) {
        failf(out, tag.str() + "in-range degree marked NotApplicable");
        return;
    }

    const bool empt = !rep.empties.empty();
    if (empt != (rep.status == ReportStatus::AssertedEmpty)) {
        failf(out, tag.str() + "emptiness clauses disagree with status");
    }
    if (rep.status == ReportStatus::AssertedEmpty &&
        (!rep.components.empty() || !rep.unknowns.empty())) {
        failf(out, tag.str() + "asserted-empty report carries components or unknowns");
    }
    if (!empt && rep.components.empty() && rep.unknowns.empty()) {
        failf(out, tag.str() + "no emptiness clause, no components, no unknowns");
    }
    if (rep.excluded_types.size() != 2) {
        failf(out, tag.str() + "excluded-type ledger missing");
    }

    for (const auto& comp : rep.components) {
        if (comp.dimension < rep.rho) {
            failf(out, tag.str() + "component dimension below expected dimension");
        }
        const bool regular = comp.regularity == Regularity::Regular;
        if (regular != (comp.dimension == rep.rho)) {
            failf(out, tag.str() + "regularity flag disagrees with dimension");
        }
        if (regular && 3 * d > 10 * g - 18) {
            failf(out, tag.str() + "regular component past the superabundant threshold");
        }
        if (comp.family == Family::FirstType1a) {
            if (comp.dimension != 6 * g - 6 - 4 * n - d) {
                failf(out, tag.str() + "first-type dimension identity fails");
            }
            if (regular != (d == 2 * g - 6 + 2 * n)) {
                failf(out, tag.str() + "first-type regularity point is off");
            }
        }
        if (comp.family == Family::ModType2bMod) {
            if (comp.dimension != 8 * g - 11 - 2 * n - 2 * d) {
                failf(out, tag.str() + "modified-type dimension identity fails");
            }
            if (regular != (d == 2 * g - 7 + 2 * n)) {
                failf(out, tag.str() + "modified-type regularity point is off");
            }
        }
        const std::int64_t quotient_degree =
            comp.presentation.quotient == QuotientKind::CanonicalMinusTwoGonal
                ? 2 * g - 2 - 2 * n
            : comp.presentation.quotient == QuotientKind::CanonicalMinusGonal
                ? 2 * g - 2 - n
            : comp.presentation.quotient == QuotientKind::Canonical
                ? 2 * g - 2
                : 2 * g - 2 - (4 * g - 4 - d);
        if (comp.presentation.kernel_degree + quotient_degree != d) {
            failf(out, tag.str() + "presentation degrees do not sum to d");
        }
    }
    if (!rep.warnings.empty()) {
        failf(out, tag.str() + "classifier warning: " + rep.warnings.front());
    }

    // Annotation points: where the clauses' hypotheses all hold, the marked
    // degrees carry their advertised regular/superabundant counts.
    int regular = 0;
    int superabundant = 0;
    for (const auto& comp : rep.components) {
        (comp.regularity == Regularity::Regular ? regular : superabundant) += 1;
    }
    const bool second_type = g >= 7 && 2 * n < g;
    const bool first_type = g >= 9 && 3 * n <= g;
    const bool mod_type = g >= 10 && 5 * n <= g + 5;
    if (d == 2 * g - 7 + 2 * n && second_type && mod_type) {
        if (regular != 2 || superabundant != 0) {
            failf(out, tag.str() + "marked degree 2g-7+2nu lacks its two regular components");
        }
    }
    if (d == 2 * g - 6 + 2 * n && second_type && first_type && mod_type) {
        if (regular != 2 || superabundant != 1) {
            failf(out, tag.str() +
                           "marked degree 2g-6+2nu lacks two regular plus one superabundant");
        }
    }
}

}  // namespace

SweepReport rank_two_invariant_sweep(std::int64_t g_max, bool parallel) {
    struct Pair {
        std::int64_t g;
        int nu;
    };
    std::vector<Pair> pairs;
    for (std::int64_t g = 4; g <= g_max; ++g) {
        for (int nu = 3; nu <= static_cast<int>(g); ++nu) {
            if (gonality_hypothesis_ok(g, nu)) pairs.push_back({g, nu});
        }
    }

    std::vector<std::vector<std::string>> fails(pairs.size());
    std::vector<std::int64_t> counts(pairs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(pairs.size()); ++idx) {
        const auto& p = pairs[static_cast<std::size_t>(idx)];
        auto& out = fails[static_cast<std::size_t>(idx)];
        for (std::int64_t d = 2 * p.g - 2; d <= 4 * p.g - 4; ++d) {
            counts[static_cast<std::size_t>(idx)] += 1;
            const ClassifierReport rep = classify_b3(p.g, p.nu, d);
            check_report_invariants(rep, out);
            const ClassifierReport again = classify_b3(p.g, p.nu, d);
            if (again.status != rep.status || again.components.size() != rep.components.size()) {
                failf(out, "classifier is not deterministic");
            }
        }
        const Atlas a = atlas(p.g, p.nu);
        std::int64_t expect = a.d_min;
        for (const auto& region : a.regions) {
            if (region.d_min != expect || region.d_max < region.d_min) {
                failf(out, "atlas regions do not partition the degree range");
                break;
            }
            expect = region.d_max + 1;
        }
        if (expect != a.d_max + 1) {
            failf(out, "atlas regions stop short of the degree range");
        }
    }

    SweepReport report;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        report.cells += counts[i];
        report.failures.insert(report.failures.end(), fails[i].begin(), fails[i].end());
    }
    return report;
}

VerificationReport run_verification(std::int64_t g_max, int nu_max, int window_pad,
                                    bool parallel) {
    VerificationReport rep;
    rep.g_max = g_max;
    rep.nu_max = nu_max;
    rep.tables = crosscheck_tables(g_max, nu_max, window_pad, parallel);
    rep.oracle_sweep = oracle_equivalence_sweep(6, 3, 12, window_pad, parallel);
    rep.properties = splitting_property_suite();
    rep.rank_two = rank_two_invariant_sweep(std::min<std::int64_t>(g_max, 40), parallel);
    return rep;
}

}  // namespace gonalbn
