#include "dbsc/cartan.hpp"

#include <numeric>

namespace dbsc {

namespace {

bool detectTypeA(const CartanData& c) {
    for (int i = 1; i <= c.rank; ++i) {
        if (c.di(i) != 1) return false;
        for (int j = 1; j <= c.rank; ++j) {
            int expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            if (c.cij(i, j) != expect) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> simplyLacedFromEdges(int rank, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> C(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) C[i][i] = 2;
    for (auto [a, b] : edges) {
        C[a - 1][b - 1] = -1;
        C[b - 1][a - 1] = -1;
    }
    return C;
}

}  // namespace

void CartanData::validate() const {
    require(rank >= 1, "rank must be positive");
    require(corank >= 0, "corank must be non-negative");
    require(static_cast<int>(C.size()) == rank, "Cartan matrix has wrong row count");
    require(static_cast<int>(D.size()) == rank, "symmetrizer has wrong length");
    for (const auto& row : C) require(static_cast<int>(row.size()) == rank, "Cartan matrix is not square");
    int g = 0;
    for (int d : D) {
        require(d >= 1, "symmetrizer entries must be positive");
        g = std::gcd(g, d);
    }
    require(g == 1, "symmetrizer is not minimal (gcd != 1)");
    for (int i = 1; i <= rank; ++i) {
        require(cij(i, i) == 2, "diagonal Cartan entry must be 2");
        for (int j = 1; j <= rank; ++j) {
            if (i == j) continue;
            require(cij(i, j) <= 0, "off-diagonal Cartan entry must be <= 0");
            require((cij(i, j) == 0) == (cij(j, i) == 0), "Cartan zero pattern is not symmetric");
            // D^{-1} C symmetric: C_ij / D_i = C_ji / D_j.
            require(cij(i, j) * di(j) == cij(j, i) * di(i), "symmetrizer does not symmetrize C");
        }
    }
}

CartanData CartanData::fromMatrix(std::vector<std::vector<int>> C, std::vector<int> D, int corank) {
    CartanData out;
    out.rank = static_cast<int>(C.size());
    out.corank = corank;
    out.C = std::move(C);
    out.D = std::move(D);
    out.validate();
    out.typeA = detectTypeA(out);
    return out;
}

CartanData CartanData::fromName(const std::string& name) {
    auto bad = [&]() -> CartanData { fail("unknown Cartan type label: " + name); };
    if (name.size() != 2) return bad();
    char family = name[0];
    int n = name[1] - '0';
    switch (family) {
        case 'A': {
            if (n < 1 || n > 9) return bad();
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
            return fromMatrix(simplyLacedFromEdges(n, edges), std::vector<int>(n, 1), 0);
        }
        case 'B': {
            // Nodes 1..n-1 long, node n short; C(n-1,n) = -2, C(n,n-1) = -1.
            if (n < 2 || n > 4) return bad();
            std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i) C[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) {
                C[i][i + 1] = -1;
                C[i + 1][i] = -1;
            }
            C[n - 2][n - 1] = -2;
            std::vector<int> D(n, 2);
            D[n - 1] = 1;
            return fromMatrix(std::move(C), std::move(D), 0);
        }
        case 'C': {
            if (n != 3) return bad();
            std::vector<std::vector<int>> C = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
            return fromMatrix(std::move(C), {1, 1, 2}, 0);
        }
        case 'D': {
            if (n != 4) return bad();
            return fromMatrix(simplyLacedFromEdges(4, {{1, 2}, {2, 3}, {2, 4}}), {1, 1, 1, 1}, 0);
        }
        case 'G': {
            if (n != 2) return bad();
            return fromMatrix({{2, -3}, {-1, 2}}, {3, 1}, 0);
        }
        case 'F': {
            if (n != 4) return bad();
            std::vector<std::vector<int>> C = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            return fromMatrix(std::move(C), {2, 2, 1, 1}, 0);
        }
        default:
            return bad();
    }
}

int braidExponent(const CartanData& cartan, int i, int j) {
    require(i != j, "braid exponent requires i != j");
    require(i >= 1 && i <= cartan.rank && j >= 1 && j <= cartan.rank, "index out of range");
    int p = cartan.cij(i, j) * cartan.cij(j, i);
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return kInfiniteBraidExponent;
    }
}

}  // namespace dbsc
