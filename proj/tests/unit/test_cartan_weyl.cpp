#include <doctest.h>

#include <set>

#include "dbsc/weyl.hpp"
#include "helpers.hpp"

using namespace dbsc;
using dbsc::testing::allWords;

namespace {

CartanData a1xa1() { return CartanData::fromMatrix({{2, 0}, {0, 2}}, {1, 1}, 0); }

// All elements of the Weyl group as (element, witnessing word), by BFS.
std::vector<std::pair<WeylElement, std::vector<int>>> enumerateGroup(const CartanData& cartan) {
    std::vector<std::pair<WeylElement, std::vector<int>>> out;
    std::set<std::string> seen;
    out.push_back({WeylElement::identity(cartan), {}});
    seen.insert(out[0].first.key());
    for (size_t head = 0; head < out.size(); ++head) {
        auto [w, word] = out[head];
        for (int i = 1; i <= cartan.rank; ++i) {
            WeylElement next = w.leftMultiplied(cartan, i);
            if (seen.insert(next.key()).second) {
                auto nextWord = word;
                nextWord.insert(nextWord.begin(), i);
                out.push_back({next, nextWord});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("named Cartan matrices") {
    CartanData a2 = CartanData::fromName("A2");
    CHECK(a2.cij(1, 2) == -1);
    CHECK(a2.cij(2, 1) == -1);
    CHECK(a2.D == std::vector<int>{1, 1});
    CHECK(a2.typeA);

    CartanData b2 = CartanData::fromName("B2");
    CHECK(b2.cij(1, 2) == -2);
    CHECK(b2.cij(2, 1) == -1);
    CHECK(b2.D == std::vector<int>{2, 1});
    CHECK_FALSE(b2.typeA);

    CartanData g2 = CartanData::fromName("G2");
    CHECK(g2.cij(1, 2) * g2.cij(2, 1) == 3);

    for (const char* name : {"A1", "A5", "A9", "B3", "B4", "C3", "D4", "F4"})
        CHECK_NOTHROW(CartanData::fromName(name));
    CHECK_THROWS_AS(CartanData::fromName("E8"), Error);
    CHECK_THROWS_AS(CartanData::fromName("A10"), Error);
}

TEST_CASE("braid exponents") {
    CHECK(braidExponent(CartanData::fromName("A2"), 1, 2) == 3);
    CHECK(braidExponent(a1xa1(), 1, 2) == 2);
    CHECK(braidExponent(CartanData::fromName("B2"), 1, 2) == 4);
    CHECK(braidExponent(CartanData::fromName("G2"), 1, 2) == 6);
    CHECK(braidExponent(CartanData::fromMatrix({{2, -4}, {-1, 2}}, {4, 1}, 0), 1, 2) ==
          kInfiniteBraidExponent);
    CHECK_THROWS_AS(braidExponent(CartanData::fromName("A2"), 1, 1), Error);
}

TEST_CASE("left multiplication basics") {
    CartanData a1 = CartanData::fromName("A1");
    WeylElement e = WeylElement::identity(a1);
    WeylElement s1 = e.leftMultiplied(a1, 1);
    CHECK_FALSE(s1.isIdentity());
    CHECK(s1.leftMultiplied(a1, 1) == e);

    CartanData a2 = CartanData::fromName("A2");
    WeylElement s2 = WeylElement::identity(a2).leftMultiplied(a2, 2);
    WeylElement s1s2 = s2.leftMultiplied(a2, 1);
    CHECK_FALSE(s1s2.isIdentity());
    CHECK(WeylElement::identity(a2).leftMultiplied(a2, 1).leftMultiplied(a2, 1) ==
          WeylElement::identity(a2));
}

TEST_CASE("length comparisons against brute-force tables") {
    CartanData a2 = CartanData::fromName("A2");
    WeylElement e = WeylElement::identity(a2);
    CHECK(e.lengthIncreasesLeft(a2, 1));
    CHECK_FALSE(e.leftMultiplied(a2, 1).lengthIncreasesLeft(a2, 1));
    // l(s1 s1 s2) = 1 < 2 = l(s1 s2)
    WeylElement s1s2 = e.leftMultiplied(a2, 2).leftMultiplied(a2, 1);
    CHECK_FALSE(s1s2.lengthIncreasesLeft(a2, 1));

    // Exhaustive: length from BFS word length must match the predicate.
    for (const char* name : {"A2", "B2", "G2"}) {
        CartanData cartan = CartanData::fromName(name);
        for (auto& [w, word] : enumerateGroup(cartan)) {
            for (int i = 1; i <= cartan.rank; ++i) {
                // recompute lengths by BFS distance
                auto lengthOf = [&](const WeylElement& x) {
                    for (auto& [y, yw] : enumerateGroup(cartan))
                        if (y == x) return yw.size();
                    FAIL("element not found");
                    return size_t{0};
                };
                CHECK(w.lengthIncreasesLeft(cartan, i) ==
                      (lengthOf(w.leftMultiplied(cartan, i)) > lengthOf(w)));
            }
        }
    }
}

TEST_CASE("involutions and braid relations in the group") {
    for (const char* name : {"A2", "A3", "B2", "B3", "G2", "C3", "D4"}) {
        CartanData cartan = CartanData::fromName(name);
        WeylElement e = WeylElement::identity(cartan);
        for (int i = 1; i <= cartan.rank; ++i)
            CHECK(e.leftMultiplied(cartan, i).leftMultiplied(cartan, i) == e);
        for (int i = 1; i <= cartan.rank; ++i)
            for (int j = i + 1; j <= cartan.rank; ++j) {
                int m = braidExponent(cartan, i, j);
                REQUIRE(m != kInfiniteBraidExponent);
                WeylElement lhs = e, rhs = e;
                for (int k = 0; k < m; ++k) {
                    lhs = lhs.leftMultiplied(cartan, k % 2 == 0 ? i : j);
                    rhs = rhs.leftMultiplied(cartan, k % 2 == 0 ? j : i);
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("permutation and matrix representations agree on descents") {
    // Force the matrix representation by perturbing typeA detection: build
    // the same Cartan matrix through fromMatrix and clear the flag.
    for (const char* name : {"A2", "A3"}) {
        CartanData perm = CartanData::fromName(name);
        CartanData mat = perm;
        mat.typeA = false;
        REQUIRE(perm.typeA);
        auto permAll = enumerateGroup(perm);
        auto matAll = enumerateGroup(mat);
        REQUIRE(permAll.size() == matAll.size());  // 6 and 24
        for (auto& [pw, word] : permAll) {
            WeylElement mw = WeylElement::identity(mat);
            for (size_t k = word.size(); k-- > 0;) mw = mw.leftMultiplied(mat, word[k]);
            for (int i = 1; i <= perm.rank; ++i) {
                CHECK(pw.lengthIncreasesLeft(perm, i) == mw.lengthIncreasesLeft(mat, i));
                CHECK(pw.lengthIncreasesRight(perm, i) == mw.lengthIncreasesRight(mat, i));
            }
        }
    }
}

TEST_CASE("longest element and Coxeter numbers") {
    struct Row {
        const char* name;
        size_t w0Length;
        int h;
    };
    for (Row row : {Row{"A1", 1, 2}, Row{"A2", 3, 3}, Row{"A3", 6, 4}, Row{"B2", 4, 4}, Row{"G2", 6, 6}}) {
        CartanData cartan = CartanData::fromName(row.name);
        LongestElement longest = longestElement(cartan);
        CHECK(longest.word.size() == row.w0Length);
        // w0 is the unique element with no left ascent.
        for (int i = 1; i <= cartan.rank; ++i) CHECK_FALSE(longest.element.lengthIncreasesLeft(cartan, i));
        // the returned word multiplies back to w0
        WeylElement check = WeylElement::identity(cartan);
        for (size_t k = longest.word.size(); k-- > 0;) check = check.leftMultiplied(cartan, longest.word[k]);
        CHECK(check == longest.element);
        CHECK(coxeterNumber(cartan) == row.h);
    }
    CHECK_THROWS_WITH_AS(longestElement(CartanData::fromMatrix({{2, -2}, {-2, 2}}, {1, 1}, 0), 50),
                         "non-finite type", Error);
}

TEST_CASE("corank extends levels only") {
    CartanData a3 = CartanData::fromName("A3");
    CartanData extended = CartanData::fromMatrix(a3.C, a3.D, 1);
    CHECK(extended.levels() == 4);
    CHECK(extended.rank == 3);
    CHECK(extended.levelMultiplier(4) == 1);
}
