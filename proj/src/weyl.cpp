#include "dbsc/weyl.hpp"

namespace dbsc {

WeylElement WeylElement::identity(const CartanData& cartan) {
    WeylElement w;
    w.rank_ = cartan.rank;
    w.permRep_ = cartan.typeA;
    if (w.permRep_) {
        w.perm_.resize(cartan.rank + 1);
        for (int k = 0; k <= cartan.rank; ++k) w.perm_[k] = k;
        w.invPerm_ = w.perm_;
    } else {
        w.mat_.assign(static_cast<size_t>(cartan.rank) * cartan.rank, 0);
        for (int k = 0; k < cartan.rank; ++k) w.mat_[static_cast<size_t>(k) * cartan.rank + k] = 1;
        w.matInv_ = w.mat_;
    }
    return w;
}

WeylElement WeylElement::leftMultiplied(const CartanData& cartan, int i) const {
    require(i >= 1 && i <= rank_, "reflection index out of range");
    WeylElement w = *this;
    if (permRep_) {
        // (s_i w)(x) = s_i(w(x)): swap the values i-1 and i.
        std::swap(w.invPerm_[i - 1], w.invPerm_[i]);
        w.perm_[w.invPerm_[i - 1]] = i - 1;
        w.perm_[w.invPerm_[i]] = i;
        return w;
    }
    // Row i of S_i M is row_i(M) - sum_j C_ij row_j(M); other rows unchanged.
    int r = rank_;
    for (int c = 0; c < r; ++c) {
        long long acc = 0;
        for (int k = 0; k < r; ++k) acc += static_cast<long long>(cartan.cij(i, k + 1)) * m(mat_, k, c);
        w.mat_[static_cast<size_t>(i - 1) * r + c] = m(mat_, i - 1, c) - acc;
    }
    // (M^{-1} S_i): column c gains -C_ic * column i.
    for (int row = 0; row < r; ++row) {
        long long colI = m(matInv_, row, i - 1);
        for (int c = 0; c < r; ++c)
            w.matInv_[static_cast<size_t>(row) * r + c] =
                m(matInv_, row, c) - static_cast<long long>(cartan.cij(i, c + 1)) * colI;
    }
    return w;
}

WeylElement WeylElement::rightMultiplied(const CartanData& cartan, int i) const {
    require(i >= 1 && i <= rank_, "reflection index out of range");
    WeylElement w = *this;
    if (permRep_) {
        // (w s_i)(x) = w(s_i(x)): swap the positions i-1 and i.
        std::swap(w.perm_[i - 1], w.perm_[i]);
        w.invPerm_[w.perm_[i - 1]] = i - 1;
        w.invPerm_[w.perm_[i]] = i;
        return w;
    }
    int r = rank_;
    for (int row = 0; row < r; ++row) {
        long long colI = m(mat_, row, i - 1);
        for (int c = 0; c < r; ++c)
            w.mat_[static_cast<size_t>(row) * r + c] =
                m(mat_, row, c) - static_cast<long long>(cartan.cij(i, c + 1)) * colI;
    }
    for (int c = 0; c < r; ++c) {
        long long acc = 0;
        for (int k = 0; k < r; ++k) acc += static_cast<long long>(cartan.cij(i, k + 1)) * m(matInv_, k, c);
        w.matInv_[static_cast<size_t>(i - 1) * r + c] = m(matInv_, i - 1, c) - acc;
    }
    return w;
}

bool WeylElement::lengthIncreasesLeft(const CartanData& cartan, int i) const {
    require(i >= 1 && i <= rank_, "reflection index out of range");
    if (permRep_) return invPerm_[i - 1] < invPerm_[i];
    // Coordinates of w^{-1}(alpha_i) = column i of M^{-1}; sign-coherent.
    bool nonNeg = true, nonPos = true;
    for (int row = 0; row < rank_; ++row) {
        long long v = m(matInv_, row, i - 1);
        nonNeg &= v >= 0;
        nonPos &= v <= 0;
    }
    require(nonNeg || nonPos, "root coordinates are not sign-coherent");
    (void)cartan;
    return nonNeg;
}

bool WeylElement::lengthIncreasesRight(const CartanData& cartan, int i) const {
    require(i >= 1 && i <= rank_, "reflection index out of range");
    if (permRep_) return perm_[i - 1] < perm_[i];
    bool nonNeg = true, nonPos = true;
    for (int row = 0; row < rank_; ++row) {
        long long v = m(mat_, row, i - 1);
        nonNeg &= v >= 0;
        nonPos &= v <= 0;
    }
    require(nonNeg || nonPos, "root coordinates are not sign-coherent");
    (void)cartan;
    return nonNeg;
}

bool WeylElement::isIdentity() const {
    if (permRep_) {
        for (size_t k = 0; k < perm_.size(); ++k)
            if (perm_[k] != static_cast<int>(k)) return false;
        return true;
    }
    for (int r = 0; r < rank_; ++r)
        for (int c = 0; c < rank_; ++c)
            if (m(mat_, r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

std::string WeylElement::key() const {
    std::string s(permRep_ ? "P" : "M");
    if (permRep_) {
        for (int v : perm_) {
            s += ',';
            s += std::to_string(v);
        }
    } else {
        for (long long v : mat_) {
            s += ',';
            s += std::to_string(v);
        }
    }
    return s;
}

LongestElement longestElement(const CartanData& cartan, int iterationCap) {
    WeylElement w = WeylElement::identity(cartan);
    std::vector<int> applied;
    for (int step = 0; step < iterationCap; ++step) {
        int next = 0;
        for (int i = 1; i <= cartan.rank; ++i)
            if (w.lengthIncreasesLeft(cartan, i)) {
                next = i;
                break;
            }
        if (next == 0) {
            // w = s_{applied.back()} ... s_{applied.front()}; reverse for a word.
            std::vector<int> word(applied.rbegin(), applied.rend());
            return LongestElement{w, word};
        }
        w = w.leftMultiplied(cartan, next);
        applied.push_back(next);
    }
    fail("non-finite type");
}

int coxeterNumber(const CartanData& cartan, int iterationCap) {
    WeylElement w = WeylElement::identity(cartan);
    for (int order = 1; order <= iterationCap; ++order) {
        for (int i = cartan.rank; i >= 1; --i) w = w.leftMultiplied(cartan, i);
        if (w.isIdentity()) return order;
    }
    fail("non-finite type");
}

}  // namespace dbsc
