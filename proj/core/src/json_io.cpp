#include "quot/json_io.hpp"

namespace quot {

using nlohmann::json;

nlohmann::json series_to_json(const Series<Rat>& s) {
    json coeffs = json::array();
    for (long n = s.valuation(); n < s.trunc(); ++n)
        coeffs.push_back(rat_str(s.coeff(n)));
    return json{{"var", s.var()},
                {"valuation", s.valuation()},
                {"trunc", s.trunc()},
                {"coeffs", coeffs}};
}

Series<Rat> series_from_json(const nlohmann::json& j) {
    long val = j.at("valuation").get<long>();
    long trunc = j.at("trunc").get<long>();
    std::string var = j.value("var", "q");
    const json& coeffs = j.at("coeffs");
    if (static_cast<long>(coeffs.size()) != trunc - val)
        throw Error("series JSON: coeffs length does not match the window");
    Series<Rat> s = Series<Rat>::zeroes(val, trunc, Rat(0), var);
    for (long n = val; n < trunc; ++n)
        s.set(n, rat_parse(coeffs[static_cast<std::size_t>(n - val)].get<std::string>()));
    return s;
}

namespace {

json jet_to_json(const Jet& x) {
    json terms = json::array();
    for (const auto& [exps, v] : x.terms())
        terms.push_back(json{{"exponents", exps}, {"value", rat_str(v)}});
    return terms;
}

Jet jet_from_json(const json& j, const JetCtx& ctx) {
    Jet out = ctx ? Jet(ctx, Rat(0)) : Jet(Rat(0));
    for (const json& term : j) {
        std::vector<int> exps = term.at("exponents").get<std::vector<int>>();
        Rat v = rat_parse(term.at("value").get<std::string>());
        Jet mono = ctx ? Jet(ctx, v) : Jet(v);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0 && !ctx)
                throw Error("jet JSON: nonzero exponents require jetvars/jetcaps");
            for (int k = 0; k < exps[i]; ++k)
                mono = mono * Jet::variable(ctx, i);
        }
        out += mono;
    }
    return out;
}

} // namespace

nlohmann::json series_to_json(const Series<Jet>& s) {
    json coeffs = json::array();
    for (long n = s.valuation(); n < s.trunc(); ++n)
        coeffs.push_back(jet_to_json(s.coeff(n)));
    json out{{"var", s.var()},
             {"valuation", s.valuation()},
             {"trunc", s.trunc()},
             {"coeffs", coeffs}};
    const JetCtx& ctx = s.proto().ctx();
    if (ctx) {
        out["jetvars"] = ctx->vars;
        out["jetcaps"] = ctx->caps;
    }
    return out;
}

Series<Jet> jet_series_from_json(const nlohmann::json& j) {
    long val = j.at("valuation").get<long>();
    long trunc = j.at("trunc").get<long>();
    std::string var = j.value("var", "q");
    JetCtx ctx;
    if (j.contains("jetvars"))
        ctx = make_jet_context(j.at("jetvars").get<std::vector<std::string>>(),
                               j.at("jetcaps").get<std::vector<int>>());
    const json& coeffs = j.at("coeffs");
    if (static_cast<long>(coeffs.size()) != trunc - val)
        throw Error("series JSON: coeffs length does not match the window");
    Jet proto = ctx ? Jet(ctx, Rat(0)) : Jet(Rat(0));
    Series<Jet> s = Series<Jet>::zeroes(val, trunc, proto, var);
    for (long n = val; n < trunc; ++n)
        s.set(n, jet_from_json(coeffs[static_cast<std::size_t>(n - val)], ctx));
    return s;
}

nlohmann::json fit_to_json(const FitResult& res) {
    if (!res.found)
        return json{{"noFit", true}, {"bounds", {res.boundsNum, res.boundsDen}}};
    json num = json::array(), den = json::array();
    for (const Rat& c : res.fn.num)
        num.push_back(rat_str(c));
    for (const Rat& c : res.fn.den)
        den.push_back(rat_str(c));
    return json{{"num", num},
                {"den", den},
                {"shift", res.fn.shift},
                {"poleAtOne", pole_order_at_one(res.fn)},
                {"allPolesAtOne", all_poles_at_one(res.fn)}};
}

} // namespace quot
