#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gonalbn/oracle.hpp"
#include "gonalbn/rank_one.hpp"
#include "gonalbn/verify.hpp"

using namespace gonalbn;

namespace {

SplittingVector sv(std::vector<std::int64_t> e) { return SplittingVector(std::move(e)); }

}  // namespace

TEST_CASE("window enumeration") {
    CHECK(enumerate_vectors({2, 0, -1, 1}) ==
          std::vector<SplittingVector>{sv({-1, 1}), sv({0, 0})});
    CHECK(enumerate_vectors({1, 5, 0, 10}) == std::vector<SplittingVector>{sv({5})});
    CHECK(enumerate_vectors({3, 0, 0, 0}) == std::vector<SplittingVector>{sv({0, 0, 0})});
    CHECK(enumerate_vectors({3, 10, 0, 2}).empty());   // infeasible sum
    CHECK(enumerate_vectors({2, 0, 3, 1}).empty());    // inverted window
}

TEST_CASE("enumeration is duplicate-free, sorted, complete") {
    for (int n = 1; n <= 5; ++n) {
        for (std::int64_t deg = -6; deg <= 6; deg += 3) {
            const EnumWindow w{n, deg, -4, 4};
            const auto all = enumerate_vectors(w);
            CHECK(static_cast<std::int64_t>(all.size()) == count_vectors(w));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const auto& v : all) {
                CHECK(v.degree() == deg);
                CHECK(v.length() == n);
            }
        }
    }
}

TEST_CASE("brute-force maximal sets match the worked examples") {
    const auto r1 = maximal_with_sections(10, 3, 7, 1, 3);
    CHECK(r1.clean());
    CHECK(r1.maximal ==
          std::vector<SplittingVector>{sv({-5, 0, 0}), sv({-3, -3, 1})});

    const auto r2 = maximal_with_sections(12, 4, 9, 2, 3);
    CHECK(r2.clean());
    // includes the maximal vector whose expected dimension is negative
    CHECK(r2.maximal == std::vector<SplittingVector>{sv({-6, 0, 0, 0}),
                                                     sv({-4, -3, 0, 1}),
                                                     sv({-3, -3, -2, 2})});
    for (const auto& v : r2.maximal) CHECK(v.h0() == 3);

    CHECK_THROWS_AS(maximal_with_sections(10, 3, 11, 1, 3), std::invalid_argument);
}

TEST_CASE("brute force equals the closed form cell by cell") {
    const auto sweep = oracle_equivalence_sweep(5, 2, 8, 3, false);
    for (const auto& f : sweep.failures) MESSAGE(f);
    CHECK(sweep.pass());
    CHECK(sweep.cells > 0);
}

TEST_CASE("grid cross-check passes and its notes are confined to gonality 3") {
    const auto report = crosscheck_tables(12, 4, 3, false);
    for (const auto& f : report.failures) {
        MESSAGE("(g=" << f.g << ", nu=" << f.nu << ", t=" << f.t << ", r=" << f.r
                      << ") " << f.what);
    }
    CHECK(report.pass());
    CHECK(report.cells > 0);
    CHECK(report.oracle_cells > 0);
    CHECK(!report.notes.empty());
    for (const auto& n : report.notes) CHECK(n.nu == 3);
}

TEST_CASE("small-genus trigonal rows cross-check") {
    const auto report = crosscheck_tables(8, 3, 3, false);
    CHECK(report.pass());
}

TEST_CASE("serial and parallel grid runs agree") {
    const auto serial = crosscheck_tables(10, 4, 3, false);
    const auto parallel = crosscheck_tables(10, 4, 3, true);
    CHECK(serial.cells == parallel.cells);
    CHECK(serial.oracle_cells == parallel.oracle_cells);
    REQUIRE(serial.failures.size() == parallel.failures.size());
    REQUIRE(serial.notes.size() == parallel.notes.size());
    for (std::size_t i = 0; i < serial.notes.size(); ++i) {
        CHECK(serial.notes[i].g == parallel.notes[i].g);
        CHECK(serial.notes[i].t == parallel.notes[i].t);
        CHECK(serial.notes[i].what == parallel.notes[i].what);
    }
}

TEST_CASE("oracle maximal vectors carry exactly r+1 sections") {
    for (int nu = 3; nu <= 5; ++nu) {
        for (int r = 1; r <= 2; ++r) {
            for (std::int64_t dp = -8; dp <= r - nu; ++dp) {
                const std::int64_t g = 40;
                const std::int64_t d = dp - 1 + g + nu;
                const auto res = maximal_with_sections(g, nu, d, r, 3);
                CHECK(res.clean());
                for (const auto& v : res.maximal) CHECK(v.h0() == r + 1);
            }
        }
    }
}
