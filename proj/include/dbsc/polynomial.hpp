#pragma once

#include <string>
#include <vector>

#include "dbsc/rational.hpp"

namespace dbsc {

// Dense integer polynomial in the single variable q, coefficients ascending
// (coeffs()[k] multiplies q^k). The zero polynomial has an empty coefficient
// list; otherwise the top coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(BigInt v) { return Polynomial({std::move(v)}); }
    static Polynomial q() { return Polynomial({0, 1}); }
    // (q - 1)^k
    static Polynomial qMinusOnePow(long long k);

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    BigInt eval(const BigInt& x) const;
    BigInt evalAtOne() const { return eval(1); }

    // Exact synthetic division by (q - 1); empty when (q - 1) does not divide.
    bool divisibleByQMinusOne() const { return isZero() || evalAtOne() == 0; }
    Polynomial dividedByQMinusOne() const;

    // Multiplicity of the root q = 1. Errors on the zero polynomial.
    long long orderAtOne() const;

    // "1 - 2q + 2q^2" (ascending, explicit signs).
    std::string strAscending() const;
    // "2q^2 - 2q + 1" (descending).
    std::string strDescending() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static std::string renderTerm(const BigInt& coeff, size_t k, bool leading);

    std::vector<BigInt> c_;
};

// Quotient p / (q - 1)^k in normal form: (q - 1) does not divide the numerator
// while denPow > 0. The only denominators produced by the engines are powers
// of (q - 1); anything else is rejected at construction by the callers.
class RationalFunction {
public:
    RationalFunction() : denPow_(0) {}
    RationalFunction(Polynomial num, long long denPow);

    const Polynomial& num() const { return num_; }
    long long denPow() const { return denPow_; }
    bool isZero() const { return num_.isZero(); }

    // Order of vanishing at q = 1 (negative at a pole). Errors on zero.
    long long orderAtOne() const { return num_.orderAtOne() - denPow_; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.denPow_ == b.denPow_ && a.num_ == b.num_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    Polynomial num_;
    long long denPow_;
};

// p / (q - 1)^k with every (q - 1) factor that divides p cancelled exactly.
RationalFunction dividePolyByQMinusOnePower(const Polynomial& p, long long k);

}  // namespace dbsc
