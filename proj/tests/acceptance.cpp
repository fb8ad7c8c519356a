// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// wall-clock budgets enforced where stated.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gonalbn/oracle.hpp"
#include "gonalbn/rank_one.hpp"
#include "gonalbn/rank_two.hpp"
#include "gonalbn/verify.hpp"

using namespace gonalbn;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    std::vector<std::string> problems;
    double elapsed_s = 0.0;

    void check(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    template <typename Fn>
    void timed(Fn&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn(*this);
        const auto t1 = std::chrono::steady_clock::now();
        elapsed_s = std::chrono::duration<double>(t1 - t0).count();
    }
    void budget(double seconds) {
        if (elapsed_s >= seconds) {
            std::ostringstream os;
            os << "runtime " << elapsed_s << " s exceeds the " << seconds << " s budget";
            problems.push_back(os.str());
        }
    }
    void report() const {
        if (problems.empty()) {
            std::cout << "[PASS] " << name << "  (" << elapsed_s << " s)\n";
        } else {
            ++g_failures;
            std::cout << "[FAIL] " << name << "\n";
            for (const auto& p : problems) std::cout << "       " << p << "\n";
        }
    }
};

std::string place(std::int64_t g, int nu, std::int64_t t, int r) {
    std::ostringstream os;
    os << "(g=" << g << ", nu=" << nu << ", t=" << t << ", r=" << r << ")";
    return os.str();
}

// Agreement between a printed net-table row and the component list: every
// component's stratum is listed, and every listed stratum that is not a
// component is certified redundant (nonexistent at this gonality, or
// strictly dominated by an emitted component).
void check_r2_agreement(Criterion& c, std::int64_t g, int nu, std::int64_t t) {
    const TableR2 row = table_r2(g, nu, t);
    const Rank1Locus locus = components_w(g, nu, t, 2);
    if (row.picard != locus.whole_picard) {
        c.check(false, place(g, nu, t, 2) + " Picard disagreement");
        return;
    }
    if (row.picard) return;
    bool present[3] = {false, false, false};
    for (const auto& comp : locus.components) {
        present[comp.ell] = true;
        const std::int64_t printed = comp.ell == 2   ? t - 2 * nu
                                     : comp.ell == 1 ? 2 * t - g - nu - 2
                                                     : 3 * t - 2 * g - 6;
        c.check(comp.dimension == printed,
                place(g, nu, t, 2) + " printed dimension formula mismatch");
    }
    const bool in_row[3] = {row.w20, row.w21, row.w22};
    for (int ell = 0; ell <= 2; ++ell) {
        if (present[ell] && !in_row[ell]) {
            c.check(false, place(g, nu, t, 2) + " component missing from the row");
        }
        if (!present[ell] && in_row[ell]) {
            const int first_rank = nu - 3 + ell;
            if (first_rank <= 0) continue;  // stratum nonexistent: redundant
            const auto vec =
                concat(balanced(first_rank, t + 1 - g - nu - ell), balanced(3 - ell, ell));
            bool absorbed = false;
            for (const auto& comp : locus.components) {
                if (comp.vector != vec && dominates(comp.vector, vec)) absorbed = true;
            }
            c.check(absorbed, place(g, nu, t, 2) + " unabsorbed extra stratum in the row");
        }
    }
}

void check_r1_agreement(Criterion& c, std::int64_t g, int nu, std::int64_t t) {
    const TableR1 row = table_r1(g, nu, t);
    const Rank1Locus locus = components_w(g, nu, t, 1);
    TableR1 derived = TableR1::Empty;
    if (locus.whole_picard) {
        derived = TableR1::Picard;
    } else {
        bool w11 = false, w10 = false;
        for (const auto& comp : locus.components) {
            (comp.ell == 1 ? w11 : w10) = true;
            const std::int64_t printed = comp.ell == 1 ? t - nu : 2 * t - g - 2;
            c.check(comp.dimension == printed,
                    place(g, nu, t, 1) + " printed dimension formula mismatch");
        }
        derived = w11 && w10 ? TableR1::Both
                  : w11      ? TableR1::OnlyW11
                  : w10      ? TableR1::OnlyW10
                             : TableR1::Empty;
    }
    c.check(derived == row, place(g, nu, t, 1) + " table row '" + to_string(row) +
                                "' vs components '" + to_string(derived) + "'");
}

void criterion1(Criterion& c) {
    for (std::int64_t g = 4; g <= 30; ++g) {
        for (int nu = 3; nu <= static_cast<int>(g); ++nu) {
            if (!gonality_hypothesis_ok(g, nu)) continue;
            for (std::int64_t t = nu; t <= g + 3; ++t) {
                check_r1_agreement(c, g, nu, t);
                check_r2_agreement(c, g, nu, t);
            }
        }
    }
    // golden transcriptions of the printed trigonal rows, g = 4..8
    for (std::int64_t g = 4; g <= 8; ++g) {
        const std::string path =
            std::string(GONALBN_GOLDEN_DIR) + "/w2t_nu3_g" + std::to_string(g) + ".txt";
        std::ifstream in(path);
        if (!in) {
            c.check(false, "golden file missing: " + path);
            continue;
        }
        std::ostringstream want;
        want << "g=" << g << " nu=3\n";
        for (std::int64_t t = 3; t <= g + 3; ++t) {
            want << "t=" << t << ": " << to_string(table_r2(g, 3, t)) << "\n";
        }
        std::ostringstream have;
        have << in.rdbuf();
        c.check(have.str() == want.str(), "golden row mismatch for g=" + std::to_string(g));
    }
}

void criterion2(Criterion& c) {
    const auto sweep = oracle_equivalence_sweep(6, 3, 12, 3, true);
    for (const auto& f : sweep.failures) c.check(false, f);
    c.check(sweep.cells >= 150, "sweep covered too few cells");
}

void criterion3(Criterion& c) {
    for (std::int64_t g = 4; g <= 30; ++g) {
        for (int nu = 3; nu <= static_cast<int>(g); ++nu) {
            if (!gonality_hypothesis_ok(g, nu)) continue;
            for (std::int64_t t = nu; t <= g + 3; ++t) {
                for (int r = 1; r <= 2; ++r) {
                    const auto locus = components_w(g, nu, t, r);
                    for (const auto& comp : locus.components) {
                        c.check(comp.dimension == g - comp.vector.magnitude(),
                                place(g, nu, t, r) + " dimension identity fails");
                        c.check(comp.vector.h0() == r + 1,
                                place(g, nu, t, r) + " section count identity fails");
                    }
                }
            }
        }
    }
}

void criterion4(Criterion& c) {
    const std::vector<std::pair<std::int64_t, int>> pairs = {
        {20, 3}, {25, 4}, {20, 4}, {18, 4}, {16, 5}, {15, 6}};
    for (const auto& [g, nu] : pairs) {
        const std::int64_t n = nu;
        std::ostringstream tag;
        tag << "(g=" << g << ", nu=" << nu << ") ";

        // d = 2g-2: exactly the second-type regular component
        {
            const auto rep = classify_b3(g, nu, 2 * g - 2);
            c.check(rep.components.size() == 1, tag.str() + "d=2g-2 component count");
            if (rep.components.size() == 1) {
                const auto& comp = rep.components[0];
                c.check(comp.family == Family::RegularEi, tag.str() + "d=2g-2 family");
                c.check(comp.clause == "E-i", tag.str() + "d=2g-2 clause");
                c.check(comp.dimension == 10 * g - 18 - 3 * (2 * g - 2),
                        tag.str() + "d=2g-2 dimension");
                c.check(comp.regularity == Regularity::Regular,
                        tag.str() + "d=2g-2 regularity");
            }
        }

        // d = 2g-7+2nu: two regular components when the modified-type
        // clause's genus/gonality hypotheses hold
        {
            const std::int64_t d = 2 * g - 7 + 2 * n;
            const auto rep = classify_b3(g, nu, d);
            const bool mod_clause = g >= 10 && 5 * n <= g + 5;
            if (mod_clause) {
                c.check(rep.components.size() == 2, tag.str() + "d=2g-7+2nu count");
                int regular = 0;
                bool saw_mod = false, saw_ei = false;
                for (const auto& comp : rep.components) {
                    if (comp.regularity == Regularity::Regular) ++regular;
                    if (comp.family == Family::ModType2bMod) {
                        saw_mod = true;
                        c.check(comp.clause == "D-ii(ii2)",
                                tag.str() + "d=2g-7+2nu modified-type clause id");
                    }
                    if (comp.family == Family::RegularEi) saw_ei = true;
                }
                c.check(regular == 2, tag.str() + "d=2g-7+2nu two regular");
                c.check(saw_mod && saw_ei, tag.str() + "d=2g-7+2nu families");
            } else {
                for (const auto& comp : rep.components) {
                    c.check(comp.family != Family::ModType2bMod,
                            tag.str() + "modified-type asserted without its clause");
                }
            }
        }

        // d = 2g-6+2nu: two regular plus one superabundant when the
        // first-type and modified-type clauses both hold
        {
            const std::int64_t d = 2 * g - 6 + 2 * n;
            const auto rep = classify_b3(g, nu, d);
            const bool first_clause = g >= 9 && 3 * n <= g;
            const bool mod_clause = g >= 10 && 5 * n <= g + 5;
            int regular = 0, superabundant = 0;
            for (const auto& comp : rep.components) {
                (comp.regularity == Regularity::Regular ? regular : superabundant) += 1;
            }
            if (first_clause && mod_clause) {
                c.check(rep.components.size() == 3, tag.str() + "d=2g-6+2nu count");
                c.check(regular == 2 && superabundant == 1,
                        tag.str() + "d=2g-6+2nu two regular plus one superabundant");
                bool first_regular = false;
                for (const auto& comp : rep.components) {
                    if (comp.family == Family::FirstType1a) {
                        first_regular = comp.regularity == Regularity::Regular &&
                                        comp.clause == "C-ii";
                    }
                }
                c.check(first_regular, tag.str() + "d=2g-6+2nu first-type regular");
            } else if (first_clause) {
                c.check(regular == 2 && superabundant == 0,
                        tag.str() + "d=2g-6+2nu two regular (no modified-type clause)");
            } else {
                c.check(regular == 1 && superabundant == 0,
                        tag.str() + "d=2g-6+2nu single regular (no other clause)");
            }
        }
    }
}

void criterion5(Criterion& c) {
    for (std::int64_t d = 74; d <= 76; ++d) {
        const auto rep = classify_b3(20, 3, d);
        c.check(rep.status == ReportStatus::AssertedEmpty &&
                    !rep.empties.empty() && rep.empties.front() == "A",
                "(20,3," + std::to_string(d) + ") not asserted empty via A");
    }
    for (std::int64_t d = 68; d <= 73; ++d) {
        const auto rep = classify_b3(20, 4, d);
        c.check(rep.status == ReportStatus::AssertedEmpty &&
                    !rep.empties.empty() && rep.empties.front() == "B",
                "(20,4," + std::to_string(d) + ") not asserted empty via B");
    }
}

void criterion6(Criterion& c) {
    std::int64_t reports = 0;
    for (std::int64_t g = 4; g <= 40; ++g) {
        for (int nu = 3; nu <= static_cast<int>(g); ++nu) {
            if (!gonality_hypothesis_ok(g, nu)) continue;
            for (std::int64_t d = 2 * g - 2; d <= 4 * g - 4; ++d) {
                const auto rep = classify_b3(g, nu, d);
                ++reports;
                for (const auto& comp : rep.components) {
                    if (comp.regularity == Regularity::Regular) {
                        c.check(3 * d <= 10 * g - 18,
                                "regular record past the threshold at (g=" +
                                    std::to_string(g) + ", nu=" + std::to_string(nu) +
                                    ", d=" + std::to_string(d) + ")");
                    }
                    c.check(comp.dimension >= rep.rho,
                            "component below the expected dimension at (g=" +
                                std::to_string(g) + ", nu=" + std::to_string(nu) +
                                ", d=" + std::to_string(d) + ")");
                }
            }
        }
    }
    c.check(reports > 10000, "sweep covered too few reports");
}

void criterion7(Criterion& c) {
    const auto r40 = classify_fixed_determinant(20, 3, 40);
    bool ok40 = false;
    for (const auto& comp : r40.components) {
        if (comp.family == "FirstType_1a_M") {
            ok40 = comp.dimension == 42 && r40.rho_m == 42 &&
                   comp.regularity == Regularity::Regular;
        }
    }
    c.check(ok40, "(20,3,40) fixed-determinant record wrong");

    const auto r50 = classify_fixed_determinant(20, 3, 50);
    bool ok50 = false;
    for (const auto& comp : r50.components) {
        if (comp.family == "FirstType_1a_M") {
            ok50 = comp.dimension == 32 && r50.rho_m == 12 &&
                   comp.regularity == Regularity::Superabundant;
        }
    }
    c.check(ok50, "(20,3,50) fixed-determinant record wrong");
}

void criterion8(Criterion& c) {
    for (std::int64_t g = 4; g <= 30; ++g) {
        for (int nu = 3; nu <= static_cast<int>(g); ++nu) {
            if (!gonality_hypothesis_ok(g, nu)) continue;
            const auto a = atlas(g, nu);
            std::int64_t expect = 2 * g - 2;
            bool ok = a.d_min == 2 * g - 2 && a.d_max == 4 * g - 4;
            for (const auto& region : a.regions) {
                if (region.d_min != expect || region.d_max < region.d_min) ok = false;
                expect = region.d_max + 1;
            }
            if (expect != a.d_max + 1) ok = false;
            c.check(ok, "atlas does not partition at (g=" + std::to_string(g) +
                            ", nu=" + std::to_string(nu) + ")");
        }
    }
    const auto a = atlas(20, 3);
    bool band = false;
    for (const auto& region : a.regions) {
        if (region.d_min == 54 && region.d_max == 60) {
            band = !region.unknown_families.empty() &&
                   region.unknown_families.front() == "Regular";
        }
    }
    c.check(band, "(20,3) open regular band (53,60] missing its marker");
}

void criterion9(Criterion& c) {
    const auto rep = splitting_property_suite(10000, 2024);
    for (const auto& f : rep.failures) c.check(false, f);
    c.check(rep.cells >= 10000, "fewer than 10^4 randomized vectors");
}

}  // namespace

int main() {
    struct Entry {
        std::string name;
        void (*fn)(Criterion&);
        double budget_s;  // <= 0 means no budget
    };
    const std::vector<Entry> entries = {
        {"criterion 1: case-table fidelity on the g <= 30 grid + golden trigonal rows",
         criterion1, 5.0},
        {"criterion 2: brute-force oracle equals the closed form (nu<=6, r<=3, |d'|<=12)",
         criterion2, 60.0},
        {"criterion 3: dimension and section-count identities on the grid", criterion3,
         0.0},
        {"criterion 4: classifier annotations at the marked degrees", criterion4, 0.0},
        {"criterion 5: asserted-empty ranges", criterion5, 0.0},
        {"criterion 6: regularity guard sweep g <= 40", criterion6, 10.0},
        {"criterion 7: fixed-determinant records", criterion7, 0.0},
        {"criterion 8: atlas coverage and the open band", criterion8, 0.0},
        {"criterion 9: randomized splitting-type property suites", criterion9, 0.0},
    };
    for (const auto& e : entries) {
        Criterion c;
        c.name = e.name;
        c.timed(e.fn);
        if (e.budget_s > 0) c.budget(e.budget_s);
        c.report();
    }
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
