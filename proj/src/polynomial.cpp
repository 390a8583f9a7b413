#include "dbsc/polynomial.hpp"

namespace dbsc {

Polynomial Polynomial::qMinusOnePow(long long k) {
    Polynomial acc = Polynomial::constant(1);
    Polynomial base({-1, 1});
    for (long long i = 0; i < k; ++i) acc *= base;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return Polynomial();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<BigInt> out = c_;
    for (auto& v : out) v = -v;
    return Polynomial(std::move(out));
}

BigInt Polynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::dividedByQMinusOne() const {
    require(divisibleByQMinusOne(), "polynomial is not divisible by (q - 1)");
    if (isZero()) return Polynomial();
    // Synthetic division at the root q = 1: h_{k-1} = a_k + h_k, descending.
    std::vector<BigInt> h(c_.size() - 1, BigInt(0));
    BigInt carry = 0;
    for (size_t k = c_.size(); k-- > 1;) {
        carry += c_[k];
        h[k - 1] = carry;
    }
    return Polynomial(std::move(h));
}

long long Polynomial::orderAtOne() const {
    require(!isZero(), "undefined order");
    long long ord = 0;
    Polynomial p = *this;
    while (p.evalAtOne() == 0) {
        p = p.dividedByQMinusOne();
        ++ord;
    }
    return ord;
}

std::string Polynomial::renderTerm(const BigInt& coeff, size_t k, bool leading) {
    BigInt a = coeff < 0 ? BigInt(-coeff) : coeff;
    std::string s;
    if (leading)
        s = coeff < 0 ? "-" : "";
    else
        s = coeff < 0 ? " - " : " + ";
    if (a != 1 || k == 0) s += a.str();
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
    return s;
}

std::string Polynomial::strAscending() const {
    if (isZero()) return "0";
    std::string s;
    bool leading = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        s += renderTerm(c_[k], k, leading);
        leading = false;
    }
    return s;
}

std::string Polynomial::strDescending() const {
    if (isZero()) return "0";
    std::string s;
    bool leading = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        s += renderTerm(c_[k], k, leading);
        leading = false;
    }
    return s;
}

RationalFunction::RationalFunction(Polynomial num, long long denPow) : num_(std::move(num)), denPow_(denPow) {
    require(denPow_ >= 0, "negative denominator power");
    if (num_.isZero()) {
        denPow_ = 0;
        return;
    }
    while (denPow_ > 0 && num_.divisibleByQMinusOne()) {
        num_ = num_.dividedByQMinusOne();
        --denPow_;
    }
}

std::string RationalFunction::str() const {
    if (denPow_ == 0) return num_.strDescending();
    std::string s = "(" + num_.strDescending() + ")/(q - 1)";
    if (denPow_ > 1) s += "^" + std::to_string(denPow_);
    return s;
}

RationalFunction dividePolyByQMinusOnePower(const Polynomial& p, long long k) {
    return RationalFunction(p, k);
}

}  // namespace dbsc
