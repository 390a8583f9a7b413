#include "dbsc/coords.hpp"

#include <random>

namespace dbsc {

namespace {

long long integralExponent(const Rational& e) {
    require(e.isInteger(), "fractional exponent encountered");
    return static_cast<long long>(e.asInteger());
}

}  // namespace

CoordAssignment xMutated(const CoordAssignment& x, const Seed& s, const std::string& cName) {
    int c = s.indexOf(cName);
    require(!s.frozen[c], "cannot mutate a frozen vertex: " + cName);
    const Rational& xc = x.at(cName);
    require(xc != Rational(-1), "pole: X = -1 at the mutation vertex");
    require(!xc.isZero(), "coordinate values must be nonzero");
    CoordAssignment out;
    for (int a = 0; a < s.size(); ++a) {
        const std::string& name = s.vertices[a];
        if (a == c) {
            out[name] = xc.pow(-1);
        } else {
            long long e = integralExponent(s.eps.at(a, c));
            Rational v = x.at(name);
            if (e > 0) v *= xc.pow(e);
            out[name] = v * (Rational(1) + xc).pow(-e);
        }
    }
    return out;
}

CoordAssignment aMutated(const CoordAssignment& a, const Seed& s, const std::string& cName) {
    int c = s.indexOf(cName);
    require(!s.frozen[c], "cannot mutate a frozen vertex: " + cName);
    Rational monomial(1), exchange(1);
    for (int b = 0; b < s.size(); ++b) {
        if (b == c) continue;
        long long e = integralExponent(s.eps.at(c, b));
        const Rational& ab = a.at(s.vertices[b]);
        require(!ab.isZero(), "coordinate values must be nonzero");
        if (e < 0) monomial *= ab.pow(-e);
        exchange *= ab.pow(e);
    }
    Rational binomial = Rational(1) + exchange;
    require(!binomial.isZero(), "zero denominator: the exchange binomial vanishes");
    CoordAssignment out = a;
    out[cName] = a.at(cName).pow(-1) * monomial * binomial;
    return out;
}

CoordAssignment pMap(const CoordAssignment& a, const Seed& s) {
    CoordAssignment out;
    for (int c = 0; c < s.size(); ++c) {
        if (s.frozen[c]) continue;
        Rational v(1);
        for (int b = 0; b < s.size(); ++b) {
            long long e = integralExponent(s.eps.at(c, b));
            if (e != 0) v *= a.at(s.vertices[b]).pow(e);
        }
        out[s.vertices[c]] = v;
    }
    return out;
}

CoordAssignment reflectionFrozenAction(const CoordAssignment& x, const StringDiagram& sd,
                                       const CartanData& cartan, int level, ReflectionSide side) {
    require(level >= 1 && level <= cartan.rank, "reflection level out of range");
    auto boundary = [&](int lv) {
        return StringId{lv, side == ReflectionSide::Right ? sd.nodeCount(lv) : 0}.str();
    };
    const std::string anchor = boundary(level);
    require(x.count(anchor) != 0, "missing boundary vertex: " + anchor);
    const Rational& xi = x.at(anchor);
    CoordAssignment out = x;
    out[anchor] = xi.pow(-1);
    for (int j = 1; j <= cartan.rank; ++j) {
        if (j == level || cartan.cij(level, j) == 0) continue;
        const std::string other = boundary(j);
        require(x.count(other) != 0, "missing boundary vertex: " + other);
        out[other] = x.at(other) * xi.pow(-cartan.cij(level, j));
    }
    return out;
}

namespace {

struct LocalSetup {
    CartanData cartan;
    Seed seed;                 // full diagram seed, frozen strings included
    MutationScript script;     // the braid move's mutation sequence
    std::map<char, std::string> label;  // picture label -> vertex id
};

LocalSetup localSetup(LocalCase localCase) {
    LocalSetup ls;
    std::vector<int> word;
    switch (localCase) {
        case LocalCase::A2:
            ls.cartan = CartanData::fromName("A2");
            word = {1, 2, 1};
            ls.label = {{'a', "1:0"}, {'b', "1:1"}, {'c', "1:2"}, {'d', "2:0"}, {'e', "2:1"}};
            break;
        case LocalCase::B2:
            ls.cartan = CartanData::fromName("B2");
            word = {1, 2, 1, 2};
            ls.label = {{'c', "1:0"}, {'a', "1:1"}, {'d', "1:2"}, {'e', "2:0"}, {'b', "2:1"}, {'f', "2:2"}};
            break;
        case LocalCase::G2:
            ls.cartan = CartanData::fromName("G2");
            word = {1, 2, 1, 2, 1, 2};
            ls.label = {{'e', "1:0"}, {'a', "1:1"}, {'b', "1:2"}, {'f', "1:3"},
                        {'g', "2:0"}, {'c', "2:1"}, {'d', "2:2"}, {'h', "2:3"}};
            break;
    }
    auto cartan = std::make_shared<const CartanData>(ls.cartan);
    Triangulation t = buildTriangulation(BraidWord{{}, cartan}, makeBraid(word, cartan),
                                         std::vector<TriSide>(word.size(), TriSide::Bottom));
    ls.seed = seedFromDiagram(makeStringDiagram(t, *cartan), *cartan);
    ls.script = braidMoveOnBase(t, BaseSide::Bottom, 0).script;
    return ls;
}

// One monomial coef * Xa^e0 Xb^e1 Xc^e2 Xd^e3 of a fixed F-polynomial.
struct FTerm {
    long long coef;
    int e[4];
};

Rational evalF(const std::vector<FTerm>& terms, const Rational vals[4]) {
    Rational acc(0);
    for (const FTerm& t : terms) {
        Rational m(t.coef);
        for (int k = 0; k < 4; ++k)
            if (t.e[k]) m *= vals[k].pow(t.e[k]);
        acc += m;
    }
    return acc;
}

// F-polynomials of the length-four move, in X_a, X_b.
const std::vector<FTerm> kB2Fa = {{1, {0, 0, 0, 0}}, {1, {0, 1, 0, 0}}, {1, {1, 1, 0, 0}}};
const std::vector<FTerm> kB2Fb = {{1, {0, 0, 0, 0}}, {1, {0, 1, 0, 0}}, {2, {1, 1, 0, 0}}, {1, {2, 1, 0, 0}}};

// F-polynomials of the length-six move, in X_a, X_b, X_c, X_d.
const std::vector<FTerm> kG2Fa = {
    {1, {0, 0, 0, 0}}, {1, {0, 0, 0, 1}}, {3, {0, 1, 0, 1}}, {3, {0, 2, 0, 1}},
    {3, {0, 2, 1, 1}}, {1, {0, 3, 0, 1}}, {2, {0, 3, 1, 1}}, {1, {0, 3, 2, 1}},
    {2, {1, 2, 1, 1}}, {2, {1, 3, 1, 1}}, {2, {1, 3, 2, 1}}, {1, {2, 3, 2, 1}}};
const std::vector<FTerm> kG2Fb = {
    {1, {0, 0, 0, 0}}, {1, {0, 0, 0, 1}}, {2, {0, 1, 0, 1}},
    {1, {0, 2, 0, 1}}, {1, {0, 2, 1, 1}}, {1, {1, 2, 1, 1}}};
const std::vector<FTerm> kG2Fc = {
    {1, {0, 0, 0, 0}}, {1, {0, 0, 0, 1}}, {3, {0, 1, 0, 1}}, {3, {0, 2, 0, 1}},
    {3, {0, 2, 1, 1}}, {1, {0, 3, 0, 1}}, {2, {0, 3, 1, 1}}, {1, {0, 3, 2, 1}},
    {3, {1, 2, 1, 1}}, {3, {1, 3, 1, 1}}, {3, {1, 3, 2, 1}}, {3, {2, 3, 2, 1}},
    {1, {3, 3, 2, 1}}};
const std::vector<FTerm> kG2Fd = {
    {1, {0, 0, 0, 0}},  {2, {0, 0, 0, 1}},  {1, {0, 0, 0, 2}},  {6, {0, 1, 0, 1}},
    {6, {0, 1, 0, 2}},  {6, {0, 2, 0, 1}},  {15, {0, 2, 0, 2}}, {3, {0, 2, 1, 1}},
    {3, {0, 2, 1, 2}},  {2, {0, 3, 0, 1}},  {20, {0, 3, 0, 2}}, {2, {0, 3, 1, 1}},
    {12, {0, 3, 1, 2}}, {15, {0, 4, 0, 2}}, {18, {0, 4, 1, 2}}, {3, {0, 4, 2, 2}},
    {6, {0, 5, 0, 2}},  {12, {0, 5, 1, 2}}, {6, {0, 5, 2, 2}},  {1, {0, 6, 0, 2}},
    {3, {0, 6, 1, 2}},  {3, {0, 6, 2, 2}},  {1, {0, 6, 3, 2}},  {3, {1, 2, 1, 1}},
    {3, {1, 2, 1, 2}},  {3, {1, 3, 1, 1}},  {12, {1, 3, 1, 2}}, {18, {1, 4, 1, 2}},
    {6, {1, 4, 2, 2}},  {12, {1, 5, 1, 2}}, {12, {1, 5, 2, 2}}, {3, {1, 6, 1, 2}},
    {6, {1, 6, 2, 2}},  {3, {1, 6, 3, 2}},  {3, {2, 4, 2, 2}},  {6, {2, 5, 2, 2}},
    {3, {2, 6, 2, 2}},  {3, {2, 6, 3, 2}},  {1, {3, 6, 3, 2}}};

using Formula = std::map<char, Rational>;

Formula closedXFormulas(LocalCase localCase, const std::map<char, Rational>& v) {
    Formula out;
    auto at = [&](char c) { return v.at(c); };
    Rational one(1);
    switch (localCase) {
        case LocalCase::A2: {
            Rational grow = one + at('b');
            out['a'] = at('a') * grow;
            out['b'] = at('b').pow(-1);
            out['c'] = at('c') * at('b') / grow;
            out['d'] = at('d') * at('b') / grow;
            out['e'] = at('e') * grow;
            break;
        }
        case LocalCase::B2: {
            Rational xs[4] = {at('a'), at('b'), Rational(0), Rational(0)};
            Rational fa = evalF(kB2Fa, xs), fb = evalF(kB2Fb, xs);
            out['a'] = at('a') / fb;
            out['b'] = fa.pow(2) / (at('a').pow(2) * at('b'));
            out['c'] = at('c') * fb / fa;
            out['d'] = at('d') * fa;
            out['e'] = at('e') * at('a').pow(2) * at('b') / fb;
            out['f'] = at('f') * at('b') * fb / fa.pow(2);
            break;
        }
        case LocalCase::G2: {
            Rational xs[4] = {at('a'), at('b'), at('c'), at('d')};
            Rational fa = evalF(kG2Fa, xs), fb = evalF(kG2Fb, xs);
            Rational fc = evalF(kG2Fc, xs), fd = evalF(kG2Fd, xs);
            Rational core = at('a').pow(3) * at('b').pow(3) * at('c').pow(2) * at('d');
            out['a'] = at('a') * fd / (fb * fc);
            out['b'] = at('b') * fa / fd;
            out['c'] = fa.pow(3) / (core * fd);
            out['d'] = at('c') * fb.pow(3) * fc / fa.pow(3);
            out['e'] = at('e') * fc / fa;
            out['f'] = at('f') * fb;
            out['g'] = core * at('g') / fc;
            out['h'] = at('d') * at('h') * fd / fb.pow(3);
            break;
        }
    }
    return out;
}

Formula closedAFormulas(LocalCase localCase, const std::map<char, Rational>& v,
                        const std::map<char, Rational>& px) {
    Formula out;
    auto at = [&](char c) { return v.at(c); };
    switch (localCase) {
        case LocalCase::A2:
            out['b'] = (at('a') * at('e') + at('c') * at('d')) / at('b');
            break;
        case LocalCase::B2: {
            Rational xs[4] = {px.at('a'), px.at('b'), Rational(0), Rational(0)};
            out['a'] = at('a') * at('f') / at('b') * evalF(kB2Fa, xs);
            out['b'] = at('e') * at('f') / at('b') * evalF(kB2Fb, xs);
            break;
        }
        case LocalCase::G2: {
            Rational xs[4] = {px.at('a'), px.at('b'), px.at('c'), px.at('d')};
            out['a'] = at('a') * at('h') / at('d') * evalF(kG2Fa, xs);
            out['b'] = at('b') * at('h') / at('d') * evalF(kG2Fb, xs);
            out['c'] = at('g') * at('h') / at('d') * evalF(kG2Fc, xs);
            out['d'] = at('c') * at('h').pow(2) / at('d').pow(2) * evalF(kG2Fd, xs);
            break;
        }
    }
    return out;
}

class CoordSampler {
public:
    explicit CoordSampler(unsigned long long seed) : gen_(seed) {}

    // Positive rationals with numerator and denominator uniform in [1, 97];
    // positivity keeps every mutation away from its poles.
    Rational next() {
        long long num = 1 + static_cast<long long>(gen_() % 97);
        long long den = 1 + static_cast<long long>(gen_() % 97);
        return Rational(num, den);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace

VerifyReport verifyBraidMoveFormulas(LocalCase localCase, int trials, unsigned long long rngSeed) {
    LocalSetup ls = localSetup(localCase);
    CoordSampler sampler(rngSeed);
    VerifyReport report;
    report.trials = trials;
    for (auto& [label, vertex] : ls.label) {
        report.xMismatches[std::string(1, label)] = 0;
        report.aMismatches[std::string(1, label)] = 0;
    }

    for (int trial = 0; trial < trials; ++trial) {
        std::map<char, Rational> xv, av;
        CoordAssignment x, a;
        for (auto& [label, vertex] : ls.label) {
            xv[label] = sampler.next();
            av[label] = sampler.next();
            x[vertex] = xv[label];
            a[vertex] = av[label];
        }
        // X substitution values for the F-polynomials on the A side.
        CoordAssignment p = pMap(a, ls.seed);
        std::map<char, Rational> px;
        for (auto& [label, vertex] : ls.label)
            if (p.count(vertex)) px[label] = p.at(vertex);

        CoordAssignment xEnd = x, aEnd = a;
        Seed cur = ls.seed;
        for (const auto& step : ls.script.steps) {
            xEnd = xMutated(xEnd, cur, step);
            aEnd = aMutated(aEnd, cur, step);
            cur = mutated(cur, step);
        }

        Formula xExpect = closedXFormulas(localCase, xv);
        for (auto& [label, value] : xExpect)
            if (xEnd.at(ls.label.at(label)) != value) ++report.xMismatches[std::string(1, label)];
        Formula aExpect = closedAFormulas(localCase, av, px);
        for (auto& [label, vertex] : ls.label) {
            Rational expect = aExpect.count(label) ? aExpect.at(label) : av.at(label);
            if (aEnd.at(vertex) != expect) ++report.aMismatches[std::string(1, label)];
        }
    }
    return report;
}

VerifyReport verifyNodeSwapFormulas(const CartanData& cartan, int level, int trials,
                                    unsigned long long rngSeed) {
    require(cartan.rank == 2, "node-swap case is set up for rank-2 Cartan data");
    int other = level == 1 ? 2 : 1;
    auto shared = std::make_shared<const CartanData>(cartan);
    // Both bases carry the same single letter; the T then B pattern puts the
    // -i node left of the +i node as in the swap picture.
    Triangulation t = buildTriangulation(makeBraid({level}, shared), makeBraid({level}, shared),
                                         parsePattern("TB"));
    Seed seed = seedFromDiagram(makeStringDiagram(t, cartan), cartan);
    std::map<char, std::string> label = {{'a', StringId{level, 0}.str()},
                                         {'b', StringId{level, 1}.str()},
                                         {'c', StringId{level, 2}.str()},
                                         {'d', StringId{other, 0}.str()}};
    CoordSampler sampler(rngSeed);
    VerifyReport report;
    report.trials = trials;
    for (auto& [l, vertex] : label) report.xMismatches[std::string(1, l)] = 0;

    int cij = cartan.cij(level, other);
    for (int trial = 0; trial < trials; ++trial) {
        std::map<char, Rational> xv;
        CoordAssignment x;
        for (auto& [l, vertex] : label) {
            xv[l] = sampler.next();
            x[vertex] = xv[l];
        }
        CoordAssignment xEnd = xMutated(x, seed, label.at('b'));
        Rational grow = Rational(1) + xv['b'];
        Formula expect;
        expect['a'] = xv['a'] * xv['b'] / grow;
        expect['b'] = xv['b'].pow(-1);
        expect['c'] = xv['c'] * xv['b'] / grow;
        expect['d'] = xv['d'] * grow.pow(-cij);
        for (auto& [l, value] : expect)
            if (xEnd.at(label.at(l)) != value) ++report.xMismatches[std::string(1, l)];
    }
    return report;
}

}  // namespace dbsc
