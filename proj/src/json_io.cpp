#include "dbsc/json_io.hpp"

namespace dbsc {

Json toJson(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
    return Json{{"coeffs", std::move(coeffs)}};
}

Polynomial polynomialFromJson(const Json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return Polynomial(std::move(coeffs));
}

Json toJson(const RationalFunction& f) {
    return Json{{"num", toJson(f.num())}, {"den_pow", f.denPow()}};
}

RationalFunction rationalFunctionFromJson(const Json& j) {
    return RationalFunction(polynomialFromJson(j.at("num")), j.at("den_pow").get<long long>());
}

Json toJson(const Seed& s) {
    Json vertices = Json::array(), frozen = Json::array(), d = Json::array();
    for (int i = 0; i < s.size(); ++i) {
        vertices.push_back(s.vertices[i]);
        if (s.frozen[i]) frozen.push_back(s.vertices[i]);
        d.push_back(s.d[i]);
    }
    Json eps = Json::array();
    for (int a = 0; a < s.size(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < s.size(); ++b) row.push_back(s.eps.at(a, b).str());
        eps.push_back(std::move(row));
    }
    return Json{{"vertices", std::move(vertices)},
                {"frozen", std::move(frozen)},
                {"epsilon", std::move(eps)},
                {"d", std::move(d)}};
}

Seed seedFromJson(const Json& j) {
    Seed s;
    for (const auto& v : j.at("vertices")) s.vertices.push_back(v.get<std::string>());
    std::vector<std::string> frozenNames;
    for (const auto& v : j.at("frozen")) frozenNames.push_back(v.get<std::string>());
    for (const auto& name : s.vertices)
        s.frozen.push_back(std::find(frozenNames.begin(), frozenNames.end(), name) != frozenNames.end() ? 1 : 0);
    for (const auto& v : j.at("d")) s.d.push_back(v.get<long long>());
    const auto& eps = j.at("epsilon");
    s.eps = MatQ(s.size(), s.size());
    require(static_cast<int>(eps.size()) == s.size(), "epsilon has wrong row count");
    for (int a = 0; a < s.size(); ++a) {
        require(static_cast<int>(eps[a].size()) == s.size(), "epsilon has wrong column count");
        for (int b = 0; b < s.size(); ++b) s.eps.at(a, b) = Rational::parse(eps[a][b].get<std::string>());
    }
    s.validate();
    return s;
}

Json toJson(const Triangulation& t) {
    return Json{{"top", t.top.letters}, {"bottom", t.bottom.letters}, {"pattern", patternString(t.pattern)}};
}

Json toJson(const CountResult& r) {
    return Json{{"f", toJson(r.f)},
                {"g", toJson(r.g)},
                {"components_conjectural", componentLowerBound(r.g)}};
}

Json dtScriptToJson(const DtScript& ds) {
    Json sigma = Json::object();
    for (const auto& [from, to] : ds.script.relabel) sigma[from] = to;
    return Json{{"script", ds.script.steps}, {"sigma", std::move(sigma)}};
}

Json cartanToJson(const CartanData& c) {
    return Json{{"C", c.C}, {"D", c.D}, {"corank", c.corank}};
}

CartanData cartanFromJson(const Json& j) {
    std::vector<std::vector<int>> C = j.at("C").get<std::vector<std::vector<int>>>();
    std::vector<int> D = j.at("D").get<std::vector<int>>();
    int corank = j.contains("corank") ? j.at("corank").get<int>() : 0;
    return CartanData::fromMatrix(std::move(C), std::move(D), corank);
}

Json assignmentToJson(const CoordAssignment& a) {
    Json out = Json::object();
    for (const auto& [vertex, value] : a) out[vertex] = value.str();
    return out;
}

CoordAssignment assignmentFromJson(const Json& j) {
    CoordAssignment out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = Rational::parse(it.value().get<std::string>());
    return out;
}

}  // namespace dbsc
