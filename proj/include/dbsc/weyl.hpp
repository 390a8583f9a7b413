#pragma once

#include <string>
#include <vector>

#include "dbsc/cartan.hpp"

namespace dbsc {

// Weyl group element. Type A uses a permutation of {0..rank} (functional
// convention: perm[k] = w(k)); every other type acts on the root lattice in
// the basis of simple roots via an integer matrix kept alongside its inverse.
class WeylElement {
public:
    static WeylElement identity(const CartanData& cartan);

    WeylElement leftMultiplied(const CartanData& cartan, int i) const;   // s_i * w
    WeylElement rightMultiplied(const CartanData& cartan, int i) const;  // w * s_i

    // l(s_i w) > l(w), i.e. w^{-1}(alpha_i) is a positive root.
    bool lengthIncreasesLeft(const CartanData& cartan, int i) const;
    // l(w s_i) > l(w), i.e. w(alpha_i) is a positive root.
    bool lengthIncreasesRight(const CartanData& cartan, int i) const;

    bool isIdentity() const;
    bool usesPermutation() const { return permRep_; }

    // Canonical byte serialization of the payload; usable as a hash key.
    std::string key() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.permRep_ == b.permRep_ && a.perm_ == b.perm_ && a.mat_ == b.mat_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

private:
    bool permRep_ = false;
    // Permutation representation (type A): perm_ and its inverse.
    std::vector<int> perm_, invPerm_;
    // Matrix representation: row-major rank x rank, with inverse.
    std::vector<long long> mat_, matInv_;
    int rank_ = 0;

    long long m(const std::vector<long long>& a, int r, int c) const {
        return a[static_cast<size_t>(r) * rank_ + c];
    }
};

// Longest element of a finite Weyl group, found by greedy left ascent,
// together with one reduced word (letters multiply left to right).
// Errors with "non-finite type" when the iteration cap is exceeded.
struct LongestElement {
    WeylElement element;
    std::vector<int> word;
};
LongestElement longestElement(const CartanData& cartan, int iterationCap = 100000);

// Multiplicative order of the Coxeter element s_1 s_2 ... s_r.
int coxeterNumber(const CartanData& cartan, int iterationCap = 100000);

}  // namespace dbsc
