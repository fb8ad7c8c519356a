#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "gonalbn/oracle.hpp"
#include "gonalbn/splitting.hpp"

using namespace gonalbn;

namespace {

SplittingVector sv(std::vector<std::int64_t> e) { return SplittingVector(std::move(e)); }

}  // namespace

TEST_CASE("construction sorts and rejects empty input") {
    CHECK(sv({1, -3, 0}).entries() == std::vector<std::int64_t>{-3, 0, 1});
    CHECK_THROWS_AS(sv({}), std::invalid_argument);
    CHECK(sv({5}).degree() == 5);
}

TEST_CASE("balanced") {
    CHECK(balanced(3, 0) == sv({0, 0, 0}));
    CHECK(balanced(2, 1) == sv({0, 1}));
    CHECK(balanced(3, -4) == sv({-2, -1, -1}));
    CHECK(balanced(1, 7) == sv({7}));
    CHECK(balanced(4, -1) == sv({-1, 0, 0, 0}));
    CHECK_THROWS_AS(balanced(0, 3), std::invalid_argument);
}

TEST_CASE("concat merges and re-sorts") {
    CHECK(concat(sv({-3, -3}), sv({1})) == sv({-3, -3, 1}));
    CHECK(concat(sv({-5}), sv({0, 0})) == sv({-5, 0, 0}));
    CHECK(concat(sv({2}), sv({-1})).degree() == 1);
}

TEST_CASE("section counts") {
    CHECK(sv({0, 0, 0}).h0() == 3);
    CHECK(sv({-3, -3, 1}).h0() == 2);
    CHECK(sv({-5, 0, 0}).h0() == 2);
    CHECK(sv({0, 0, 0}).h1() == 0);
    CHECK(sv({-3, -3, 1}).h1() == 4);
    CHECK(sv({-5, 0, 0}).h1() == 4);
}

TEST_CASE("magnitude") {
    CHECK(sv({0, 1}).magnitude() == 0);
    CHECK(sv({-2, 0, 0}).magnitude() == 2);
    CHECK(sv({-3, -3, 1}).magnitude() == 6);
    CHECK(balanced(5, -7).magnitude() == 0);
}

TEST_CASE("dominance order") {
    CHECK(dominates(sv({0, 0}), sv({-1, 1})));
    CHECK_FALSE(dominates(sv({-1, 1}), sv({0, 0})));
    // incomparable pair: partial sums cross
    CHECK_FALSE(dominates(sv({-5, 0, 0}), sv({-3, -3, 1})));
    CHECK_FALSE(dominates(sv({-3, -3, 1}), sv({-5, 0, 0})));
    CHECK_THROWS_AS(dominates(sv({0}), sv({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(dominates(sv({0, 0}), sv({1, 0})), std::invalid_argument);
}

TEST_CASE("cover moves") {
    CHECK(cover_moves_up(sv({0, 0})).empty());
    CHECK(cover_moves_up(sv({-1, 1})) == std::vector<SplittingVector>{sv({0, 0})});
    CHECK(cover_moves_up(sv({-5, 0, 0})) ==
          std::vector<SplittingVector>{sv({-4, -1, 0})});
}

TEST_CASE("euler characteristic identity on random vectors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<std::int64_t> entry(-20, 20);
    for (int it = 0; it < 2000; ++it) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(len(rng)));
        for (auto& x : e) x = entry(rng);
        SplittingVector v(std::move(e));
        CHECK(v.h0() - v.h1() == v.degree() + v.length());
    }
}

TEST_CASE("dominance is a partial order with balanced as unique maximum") {
    // Exhaustive on small windows: every vector is dominated by balanced,
    // and the order is reflexive, antisymmetric, transitive.
    for (int n = 2; n <= 4; ++n) {
        for (std::int64_t deg = -4; deg <= 4; ++deg) {
            const auto all = enumerate_vectors(EnumWindow{n, deg, -4, 4});
            const SplittingVector bal = balanced(n, deg);
            for (const auto& v : all) {
                CHECK(dominates(bal, v));
                CHECK(dominates(v, v));
                if (v != bal) CHECK_FALSE(dominates(v, bal));
            }
            std::mt19937_64 rng(static_cast<std::uint64_t>(n * 100 + deg + 50));
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            for (int it = 0; it < 200 && !all.empty(); ++it) {
                const auto& a = all[pick(rng)];
                const auto& b = all[pick(rng)];
                const auto& c = all[pick(rng)];
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("cover moves strictly dominate, are monotone, and reach balanced") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_int_distribution<std::int64_t> entry(-8, 8);
    for (int it = 0; it < 500; ++it) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(len(rng)));
        for (auto& x : e) x = entry(rng);
        SplittingVector v(std::move(e));
        const SplittingVector bal = balanced(v.length(), v.degree());
        SplittingVector cur = v;
        int guard = 0;
        while (true) {
            auto ups = cover_moves_up(cur);
            if (ups.empty()) break;
            for (const auto& up : ups) {
                CHECK(up != cur);
                CHECK(dominates(up, cur));
                CHECK(up.h0() <= cur.h0());
                CHECK(up.h1() <= cur.h1());
            }
            cur = ups.front();
            REQUIRE(++guard < 2000);
        }
        CHECK(cur == bal);
    }
}

TEST_CASE("h0 and h1 are monotone under dominance (window sample)") {
    const auto all = enumerate_vectors(EnumWindow{4, -3, -5, 5});
    for (std::size_t i = 0; i < all.size(); i += 7) {
        for (std::size_t j = 0; j < all.size(); j += 11) {
            if (dominates(all[i], all[j])) {
                CHECK(all[j].h0() >= all[i].h0());
                CHECK(all[j].h1() >= all[i].h1());
            }
        }
    }
}
