#include "dbsc/seed.hpp"

#include <numeric>

namespace dbsc {

namespace {

Rational positivePart(const Rational& x) { return x.sign() > 0 ? x : Rational(0); }

}  // namespace

MutationScript composeScripts(const MutationScript& first, const MutationScript& next) {
    require(first.relabelIsIdentity(), "cannot compose after a non-identity relabeling");
    MutationScript out;
    out.steps = first.steps;
    out.steps.insert(out.steps.end(), next.steps.begin(), next.steps.end());
    out.relabel = next.relabel;
    return out;
}

int Seed::indexOf(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vertices[i] == name) return i;
    fail("unknown vertex: " + name);
}

void Seed::validate() const {
    int n = size();
    require(static_cast<int>(frozen.size()) == n && static_cast<int>(d.size()) == n, "seed field sizes disagree");
    require(eps.rows() == n && eps.cols() == n, "exchange matrix shape mismatch");
    for (int a = 0; a < n; ++a) {
        require(d[a] >= 1, "multipliers must be positive");
        for (int b = 0; b < n; ++b) {
            // eps_ab / d_b skew-symmetric.
            require(eps.at(a, b) * Rational(1, d[b]) == -(eps.at(b, a) * Rational(1, d[a])),
                    "exchange matrix is not skew-symmetrizable");
            if (!(frozen[a] && frozen[b]))
                require(eps.at(a, b).isInteger(), "non-integral entry outside the frozen block");
        }
    }
}

Seed mutated(const Seed& s, const std::string& cName) {
    int c = s.indexOf(cName);
    require(!s.frozen[c], "cannot mutate a frozen vertex: " + cName);
    Seed out = s;
    int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == c || b == c) {
                out.eps.at(a, b) = -s.eps.at(a, b);
            } else {
                out.eps.at(a, b) = s.eps.at(a, b) + positivePart(s.eps.at(a, c)) * positivePart(s.eps.at(c, b)) -
                                   positivePart(-s.eps.at(a, c)) * positivePart(-s.eps.at(c, b));
            }
        }
    return out;
}

Seed applyScript(const Seed& s, const MutationScript& script) {
    Seed cur = s;
    for (const auto& step : script.steps) cur = mutated(cur, step);
    if (!script.relabel.empty() && !script.relabelIsIdentity()) {
        Seed renamed = cur;
        for (auto& name : renamed.vertices) {
            auto it = script.relabel.find(name);
            if (it != script.relabel.end()) name = it->second;
        }
        cur = renamed;
    }
    return cur;
}

Seed unfrozenPart(const Seed& s) {
    std::vector<int> keep;
    for (int i = 0; i < s.size(); ++i)
        if (!s.frozen[i]) keep.push_back(i);
    Seed out;
    out.eps = MatQ(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    long long g = 0;
    for (int i : keep) g = std::gcd(g, s.d[i]);
    if (g == 0) g = 1;
    for (size_t a = 0; a < keep.size(); ++a) {
        out.vertices.push_back(s.vertices[keep[a]]);
        out.frozen.push_back(0);
        out.d.push_back(s.d[keep[a]] / g);
        for (size_t b = 0; b < keep.size(); ++b) out.eps.at(static_cast<int>(a), static_cast<int>(b)) = s.eps.at(keep[a], keep[b]);
    }
    return out;
}

Seed langlandsDual(const Seed& s) {
    long long l = 1;
    for (long long v : s.d) l = std::lcm(l, v);
    Seed out = s;
    for (int i = 0; i < s.size(); ++i) out.d[i] = l / s.d[i];
    out.eps = -s.eps.transpose();
    return out;
}

bool seedIsomorphic(const Seed& s1, const Seed& s2, const std::map<std::string, std::string>& sigma) {
    if (s1.size() != s2.size()) return false;
    std::vector<int> image(s1.size());
    std::vector<char> hit(s2.size(), 0);
    for (int a = 0; a < s1.size(); ++a) {
        auto it = sigma.find(s1.vertices[a]);
        if (it == sigma.end()) return false;
        int b;
        try {
            b = s2.indexOf(it->second);
        } catch (const Error&) {
            return false;
        }
        if (hit[b]) return false;
        hit[b] = 1;
        image[a] = b;
        if (s1.frozen[a] != s2.frozen[b] || s1.d[a] != s2.d[b]) return false;
    }
    for (int a = 0; a < s1.size(); ++a)
        for (int b = 0; b < s1.size(); ++b)
            if (s1.eps.at(a, b) != s2.eps.at(image[a], image[b])) return false;
    return true;
}

FramedSeed::FramedSeed(const Seed& base) : base0_(base), n_(base.size()) {
    for (char f : base.frozen) require(!f, "only all-unfrozen seeds are framed");
    s_.vertices = base.vertices;
    for (const auto& v : base.vertices) s_.vertices.push_back(v + "'");
    s_.frozen.assign(n_, 0);
    s_.frozen.insert(s_.frozen.end(), n_, 1);
    s_.d = base.d;
    s_.d.insert(s_.d.end(), base.d.begin(), base.d.end());
    s_.eps = MatQ(2 * n_, 2 * n_);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) s_.eps.at(a, b) = base.eps.at(a, b);
        s_.eps.at(a, n_ + a) = 1;
        s_.eps.at(n_ + a, a) = -1;
    }
}

void FramedSeed::mutate(const std::string& vertexName) {
    int c = -1;
    for (int i = 0; i < n_; ++i)
        if (s_.vertices[i] == vertexName) {
            c = i;
            break;
        }
    require(c >= 0, "unknown unfrozen vertex: " + vertexName);
    s_ = mutated(s_, s_.vertices[c]);
    assertRowSignCoherence();
}

void FramedSeed::applySteps(const std::vector<std::string>& steps) {
    for (const auto& v : steps) mutate(v);
}

void FramedSeed::relabel(const std::map<std::string, std::string>& sigma) {
    std::vector<int> dest(n_);
    std::vector<char> hit(n_, 0);
    for (int i = 0; i < n_; ++i) {
        auto it = sigma.find(s_.vertices[i]);
        const std::string& target = it == sigma.end() ? s_.vertices[i] : it->second;
        int j = -1;
        for (int k = 0; k < n_; ++k)
            if (s_.vertices[k] == target) {
                j = k;
                break;
            }
        require(j >= 0, "relabeling targets an unknown vertex: " + target);
        require(!hit[j], "relabeling is not a bijection");
        require(s_.d[i] == s_.d[j], "relabeling does not preserve multipliers");
        hit[j] = 1;
        dest[i] = j;
    }
    MatQ eps(2 * n_, 2 * n_);
    auto slot = [&](int i) { return i < n_ ? dest[i] : i; };
    for (int a = 0; a < 2 * n_; ++a)
        for (int b = 0; b < 2 * n_; ++b) eps.at(slot(a), slot(b)) = s_.eps.at(a, b);
    s_.eps = std::move(eps);
}

MatQ FramedSeed::baseEps() const {
    MatQ out(n_, n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) out.at(a, b) = s_.eps.at(a, b);
    return out;
}

MatQ FramedSeed::cMatrix() const {
    MatQ out(n_, n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            out.at(a, b) = s_.eps.at(a, n_ + b);
            require(out.at(a, b).isInteger(), "c-matrix entry is not integral");
        }
    return out;
}

VertexColor FramedSeed::color(const std::string& vertexName) const {
    int a = -1;
    for (int i = 0; i < n_; ++i)
        if (s_.vertices[i] == vertexName) {
            a = i;
            break;
        }
    require(a >= 0, "unknown unfrozen vertex: " + vertexName);
    for (int b = 0; b < n_; ++b)
        if (s_.eps.at(a, n_ + b).sign() < 0) return VertexColor::Red;
    return VertexColor::Green;
}

bool FramedSeed::allRed() const {
    for (int a = 0; a < n_; ++a)
        if (color(s_.vertices[a]) != VertexColor::Red) return false;
    return true;
}

bool FramedSeed::allGreen() const {
    for (int a = 0; a < n_; ++a)
        if (color(s_.vertices[a]) != VertexColor::Green) return false;
    return true;
}

void FramedSeed::assertRowSignCoherence() const {
    for (int a = 0; a < n_; ++a) {
        bool nonNeg = true, nonPos = true;
        for (int b = 0; b < n_; ++b) {
            int sign = s_.eps.at(a, n_ + b).sign();
            nonNeg &= sign >= 0;
            nonPos &= sign <= 0;
        }
        require(nonNeg || nonPos, "c-matrix row lost sign coherence");
    }
}

MatQ cMatrixOfScript(const Seed& base, const MutationScript& script) {
    FramedSeed f(base);
    f.applySteps(script.steps);
    if (!script.relabel.empty()) f.relabel(script.relabel);
    return f.cMatrix();
}

MatQ gMatrixOfScript(const Seed& base, const MutationScript& script) {
    MatQ cDual = cMatrixOfScript(langlandsDual(base), script);
    Rational det = cDual.det();
    require(det == Rational(1) || det == Rational(-1), "c-matrix is not unimodular");
    MatQ g = cDual.transpose().inverse();
    require(g.isIntegral(), "g-matrix is not integral");
    return g;
}

}  // namespace dbsc
