#include "metakzb/json_io.hpp"

#include <stdexcept>
#include <string>

namespace metakzb {

namespace {

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace

Json sym_to_json(const SymCoeff& c) {
    Json terms = Json::array();
    for (const auto& [m, r] : c.terms) {
        Json t;
        t["rat"] = rat_to_string(r);
        if (m.tau_exp != 0) t["tau"] = m.tau_exp;
        if (m.twopii_exp != 0) t["twopii"] = m.twopii_exp;
        if (!m.zeta_exps.empty()) {
            Json z = Json::object();
            for (const auto& [n, e] : m.zeta_exps) z[std::to_string(n)] = e;
            t["zeta"] = z;
        }
        if (!m.ei_exps.empty()) {
            Json z = Json::object();
            for (const auto& [key, e] : m.ei_exps)
                z[std::to_string(key.first) + "," + std::to_string(key.second)] = e;
            t["ei"] = z;
        }
        terms.push_back(std::move(t));
    }
    return Json{{"terms", std::move(terms)}};
}

SymCoeff sym_from_json(const Json& j) {
    SymCoeff c;
    for (const auto& t : j.at("terms")) {
        SymMonomial m;
        m.tau_exp = t.value("tau", 0);
        m.twopii_exp = t.value("twopii", 0);
        if (t.contains("zeta"))
            for (const auto& [k, v] : t["zeta"].items())
                m.zeta_exps[std::stoi(k)] = v.get<int>();
        if (t.contains("ei"))
            for (const auto& [k, v] : t["ei"].items()) {
                auto comma = k.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("bad ei key: " + k);
                m.ei_exps[{std::stoi(k.substr(0, comma)),
                           std::stoi(k.substr(comma + 1))}] = v.get<int>();
            }
        c.add_term(m, rat_from_string(t.at("rat").get<std::string>()));
    }
    return c;
}

Json bipoly_to_json(const BiPoly& p) {
    Json arr = Json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back(
            Json{{"u", k.first}, {"v", k.second}, {"coeff", sym_to_json(c)}});
    return arr;
}

BiPoly bipoly_from_json(const Json& j) {
    BiPoly p;
    for (const auto& t : j)
        p.add(t.at("u").get<int>(), t.at("v").get<int>(),
              sym_from_json(t.at("coeff")));
    return p;
}

Json metab_to_json(const MetabElem& e, bool internal) {
    Json j;
    j["convention"] = internal ? "ubar" : "U";
    j["trunc"] = e.trunc;
    j["alpha"] = sym_to_json(e.alpha);
    j["beta"] = sym_to_json(e.beta);
    j["depth1"] =
        bipoly_to_json(internal ? e.depth1 : u_convention(e.depth1, false));
    return j;
}

MetabElem metab_from_json(const Json& j) {
    MetabElem e(j.at("trunc").get<int>());
    e.alpha = sym_from_json(j.at("alpha"));
    e.beta = sym_from_json(j.at("beta"));
    BiPoly p = bipoly_from_json(j.at("depth1"));
    std::string conv = j.value("convention", "ubar");
    if (conv == "U")
        p = u_convention(p, true);
    else if (conv != "ubar")
        throw std::invalid_argument("unknown convention: " + conv);
    for (const auto& [k, c] : p.terms()) e.add_depth1(k.first, k.second, c);
    return e;
}

Json series_to_json(const NcSeries& s) {
    Json j;
    j["trunc"] = s.trunc();
    Json words = Json::object();
    for (int w = 0; w <= s.trunc(); ++w)
        for (const auto& [word, c] : s.weight(w))
            words[w == 0 ? "1" : word_to_string(word, w)] = sym_to_json(c);
    j["words"] = std::move(words);
    return j;
}

}  // namespace metakzb
