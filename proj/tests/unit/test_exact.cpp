#include <doctest.h>

#include "dbsc/matrix.hpp"
#include "dbsc/polynomial.hpp"
#include "helpers.hpp"

using namespace dbsc;
using dbsc::testing::Rng;

namespace {

Polynomial poly(std::vector<long long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(c));
}

Polynomial randomPoly(Rng& rng, int maxDegree) {
    std::vector<BigInt> c;
    int degree = rng.below(maxDegree + 1);
    for (int k = 0; k <= degree; ++k) c.push_back(rng.below(21) - 10);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("division by powers of q-1") {
    // (q-1)^2 / (q-1)^2
    auto r = dividePolyByQMinusOnePower(poly({1, -2, 1}), 2);
    CHECK(r.num() == poly({1}));
    CHECK(r.denPow() == 0);

    // the point-count polynomial of the three-letter example
    r = dividePolyByQMinusOnePower(poly({1, -2, 2, -2, 1}), 2);
    CHECK(r.num() == poly({1, 0, 1}));
    CHECK(r.denPow() == 0);

    // not divisible: value 1 at q = 1
    r = dividePolyByQMinusOnePower(poly({1, -1, 1}), 1);
    CHECK(r.num() == poly({1, -1, 1}));
    CHECK(r.denPow() == 1);
}

TEST_CASE("order at q = 1") {
    CHECK(poly({1, 0, 1}).orderAtOne() == 0);
    CHECK(poly({1, -2, 1}).orderAtOne() == 2);
    CHECK(poly({0, 0, -1, 1}).orderAtOne() == 1);  // q^3 - q^2 = q^2 (q - 1)
    CHECK_THROWS_AS(Polynomial().orderAtOne(), Error);
}

TEST_CASE("normalization round-trips") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = randomPoly(rng, 8);
        long long k = rng.below(4);
        auto r = dividePolyByQMinusOnePower(p, k);
        CHECK(r.num() * Polynomial::qMinusOnePow(k - r.denPow()) == p);
        if (r.denPow() > 0) CHECK_FALSE(r.num().divisibleByQMinusOne());
    }
}

TEST_CASE("order is additive in q-1 factors") {
    Rng rng(42);
    int done = 0;
    while (done < 100) {
        Polynomial p = randomPoly(rng, 6);
        if (p.isZero() || p.evalAtOne() == 0) continue;
        long long m = rng.below(4);
        CHECK((p * Polynomial::qMinusOnePow(m)).orderAtOne() == p.orderAtOne() + m);
        ++done;
    }
}

TEST_CASE("rational function equality is decidable on normal forms") {
    auto a = dividePolyByQMinusOnePower(poly({-1, 1}) * poly({1, 0, 1}), 1);
    auto b = RationalFunction(poly({1, 0, 1}), 0);
    CHECK(a == b);
    CHECK(RationalFunction(poly({1, -1, 1}), 1) != b);
}

TEST_CASE("matrix multiplication over rationals is exact and associative") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        auto sample = [&]() {
            MatQ m(5, 5);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) m.at(i, j) = Rational(rng.below(11) - 5, 1 + rng.below(2));
            return m;
        };
        MatQ a = sample(), b = sample(), c = sample();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("matrix inverse and determinant") {
    MatQ m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(m.det() == Rational(1));
    CHECK(m.inverse() * m == MatQ::identity(2));
    MatQ singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(0, 1) = 2;
    singular.at(1, 0) = 2;
    singular.at(1, 1) = 4;
    CHECK(singular.det() == Rational(0));
    CHECK_THROWS_AS(singular.inverse(), Error);
}

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}
