#include <doctest.h>

#include "dbsc/coords.hpp"
#include "helpers.hpp"

using namespace dbsc;
using dbsc::testing::bottomTriangulation;
using dbsc::testing::cartanPtr;
using dbsc::testing::fullSeedOfBottomWord;
using dbsc::testing::Rng;

namespace {

Seed arrowSeed(int epsAB) {
    Seed s;
    s.vertices = {"1", "2"};
    s.frozen = {0, 0};
    s.d = {1, 1};
    s.eps = MatQ(2, 2);
    s.eps.at(0, 1) = epsAB;
    s.eps.at(1, 0) = -epsAB;
    return s;
}

CoordAssignment randomAssignment(const Seed& s, Rng& rng) {
    CoordAssignment out;
    for (const auto& v : s.vertices) out[v] = Rational(1 + rng.below(97), 1 + rng.below(97));
    return out;
}

}  // namespace

TEST_CASE("x mutation") {
    Seed isolated;
    isolated.vertices = {"c"};
    isolated.frozen = {0};
    isolated.d = {1};
    isolated.eps = MatQ(1, 1);
    CoordAssignment x{{"c", Rational(1)}};
    CHECK(xMutated(x, isolated, "c").at("c") == Rational(1));

    Seed s = arrowSeed(1);
    CoordAssignment v{{"1", Rational(2)}, {"2", Rational(3)}};
    CoordAssignment m = xMutated(v, s, "2");
    CHECK(m.at("2") == Rational(1, 3));
    CHECK(m.at("1") == Rational(3, 2));

    // involution at any vertex
    Seed s2 = mutated(s, "2");
    CHECK(xMutated(m, s2, "2") == v);

    CoordAssignment pole{{"1", Rational(2)}, {"2", Rational(-1)}};
    CHECK_THROWS_AS(xMutated(pole, s, "2"), Error);
}

TEST_CASE("a mutation") {
    Seed s = arrowSeed(1);
    CoordAssignment v{{"1", Rational(2)}, {"2", Rational(5)}};
    CoordAssignment m = aMutated(v, s, "1");
    // A'_1 = (1/A_1) * A_2^{[-eps_12]+} * (1 + A_2^{eps_12}) = (1 + 5)/2
    CHECK(m.at("1") == Rational(3));
    CHECK(m.at("2") == Rational(5));
    Seed s1 = mutated(s, "1");
    CHECK(aMutated(m, s1, "1") == v);
}

TEST_CASE("exchange identity on the compatible square") {
    // With the two-triangle trapezoid, A'_b A_b - A_a A_c = prod_j A_j^{-C_ji}.
    Rng rng(5);
    for (const char* name : {"A2", "B2", "G2"}) {
        auto cartan = cartanPtr(name);
        for (int level : {1, 2}) {
            int other = level == 1 ? 2 : 1;
            Triangulation t = buildTriangulation(makeBraid({level}, cartan), makeBraid({level}, cartan),
                                                 parsePattern("TB"));
            Seed seed = seedFromDiagram(makeStringDiagram(t, *cartan), *cartan);
            std::string b = StringId{level, 1}.str();
            std::string a = StringId{level, 0}.str(), c = StringId{level, 2}.str();
            std::string d = StringId{other, 0}.str();
            for (int trial = 0; trial < 25; ++trial) {
                CoordAssignment v = randomAssignment(seed, rng);
                CoordAssignment m = aMutated(v, seed, b);
                CHECK(m.at(b) * v.at(b) - v.at(a) * v.at(c) ==
                      v.at(d).pow(-cartan->cij(other, level)));
            }
        }
    }
}

TEST_CASE("p map") {
    auto a1 = cartanPtr("A1");
    Seed seed = fullSeedOfBottomWord({1, 1, 1, 1}, a1);
    CoordAssignment ones;
    for (const auto& v : seed.vertices) ones[v] = Rational(1);
    for (auto& [vertex, value] : pMap(ones, seed)) CHECK(value == Rational(1));

    // one unfrozen vertex with a single frozen neighbor of weight one
    Seed s;
    s.vertices = {"c", "b"};
    s.frozen = {0, 1};
    s.d = {1, 1};
    s.eps = MatQ(2, 2);
    s.eps.at(0, 1) = 1;
    s.eps.at(1, 0) = -1;
    CoordAssignment v{{"c", Rational(9)}, {"b", Rational(7, 3)}};
    CHECK(pMap(v, s).at("c") == Rational(7, 3));
}

TEST_CASE("p map intertwines the two mutations") {
    Rng rng(99);
    for (const char* name : {"A1", "A2", "B2"}) {
        auto cartan = cartanPtr(name);
        std::vector<int> word;
        for (int k = 0; k < 4; ++k) word.push_back(1 + rng.below(cartan->rank));
        Seed seed = fullSeedOfBottomWord(word, cartan);
        Seed uf = unfrozenPart(seed);
        for (int c = 0; c < seed.size(); ++c) {
            if (seed.frozen[c]) continue;
            const std::string& vertex = seed.vertices[c];
            for (int trial = 0; trial < 30; ++trial) {
                CoordAssignment a = randomAssignment(seed, rng);
                CoordAssignment left = xMutated(pMap(a, seed), uf, vertex);
                CoordAssignment right = pMap(aMutated(a, seed, vertex), mutated(seed, vertex));
                for (auto& [v, value] : right) CHECK(left.at(v) == value);
            }
        }
    }
}

TEST_CASE("closed braid-move formulas verify") {
    CHECK(verifyBraidMoveFormulas(LocalCase::A2, 30, 1).allMatch());
    CHECK(verifyBraidMoveFormulas(LocalCase::B2, 30, 2).allMatch());
    auto g2 = verifyBraidMoveFormulas(LocalCase::G2, 10, 3);
    CHECK(g2.allMatch());
    CHECK(g2.poleResamples == 0);
}

TEST_CASE("node swap formulas verify for each rank-two type and level") {
    for (const char* name : {"A2", "B2", "G2"}) {
        CartanData cartan = CartanData::fromName(name);
        CHECK(verifyNodeSwapFormulas(cartan, 1, 20, 4).allMatch());
        CHECK(verifyNodeSwapFormulas(cartan, 2, 20, 5).allMatch());
    }
}

TEST_CASE("reflection action on frozen variables") {
    auto a2 = cartanPtr("A2");
    Seed seed = fullSeedOfBottomWord({1, 2, 1}, a2);
    StringDiagram sd = makeStringDiagram(bottomTriangulation({1, 2, 1}, a2), *a2);

    CoordAssignment ones;
    for (const auto& v : seed.vertices) ones[v] = Rational(1);
    CHECK(reflectionFrozenAction(ones, sd, *a2, 1, ReflectionSide::Right) == ones);

    CoordAssignment x = ones;
    x["1:2"] = Rational(2);  // last frozen on level 1
    x["2:1"] = Rational(3);  // last frozen on level 2
    CoordAssignment acted = reflectionFrozenAction(x, sd, *a2, 1, ReflectionSide::Right);
    CHECK(acted.at("1:2") == Rational(1, 2));
    CHECK(acted.at("2:1") == Rational(6));  // C_12 = -1
    // unfrozen untouched
    CHECK(acted.at("1:1") == x.at("1:1"));

    // involution
    CHECK(reflectionFrozenAction(acted, sd, *a2, 1, ReflectionSide::Right) == x);

    // left side uses the leftmost strings
    CoordAssignment actedLeft = reflectionFrozenAction(x, sd, *a2, 2, ReflectionSide::Left);
    CHECK(actedLeft.at("2:0") == Rational(1));
    CHECK(actedLeft.at("1:0") == Rational(1));
}

TEST_CASE("mutating at different vertices moves the chart differently") {
    auto a2 = cartanPtr("A2");
    Seed seed = fullSeedOfBottomWord({1, 2, 1, 2}, a2);
    Rng rng(12);
    CoordAssignment x = randomAssignment(seed, rng);
    CHECK(xMutated(x, seed, "2:1") != xMutated(x, seed, "1:1"));
}

TEST_CASE("fractional exponents are rejected") {
    // half-entries are legal only between two frozen vertices; a hand-made
    // seed with one between mutable vertices must be refused
    Seed bad;
    bad.vertices = {"u", "v"};
    bad.frozen = {0, 0};
    bad.d = {1, 1};
    bad.eps = MatQ(2, 2);
    bad.eps.at(0, 1) = Rational(1, 2);
    bad.eps.at(1, 0) = Rational(-1, 2);
    CoordAssignment x{{"u", Rational(2)}, {"v", Rational(3)}};
    CHECK_THROWS_AS(xMutated(x, bad, "v"), Error);
}
