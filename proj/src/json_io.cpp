#include "algser/json_io.hpp"

#include "algser/errors.hpp"

namespace algser {

using nlohmann::json;

json series_to_json(const TruncSeries& s) {
    json j;
    j["vars"] = s.vars().names();
    j["truncation"] = s.bound();
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json term;
        term["exp"] = e;
        term["num"] = c.num_string();
        term["den"] = c.den_string();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("truncation") || !j.contains("terms"))
        throw UsageError("series JSON needs 'vars', 'truncation', and 'terms'");
    VarSet vars{j.at("vars").get<std::vector<std::string>>()};
    const int bound = j.at("truncation").get<int>();
    TruncSeries s(vars, bound);
    for (const auto& term : j.at("terms")) {
        const Exponents e = term.at("exp").get<Exponents>();
        if (e.size() != vars.size()) throw UsageError("series JSON exponent length mismatch");
        for (int v : e)
            if (v < 0) throw UsageError("series JSON with negative exponent");
        if (total_degree(e) > bound)
            throw UsageError("series JSON term above the truncation bound");
        const std::string num = term.at("num").get<std::string>();
        const std::string den = term.at("den").get<std::string>();
        const Rational c = Rational::from_strings(num, den);
        if (c.is_zero()) throw UsageError("series JSON stores a zero coefficient");
        if (c.num_string() != num || c.den_string() != den)
            throw UsageError("series JSON coefficient " + num + "/" + den +
                             " is not in lowest terms with positive denominator");
        if (!s.terms().empty() && !GrlexLess{}(s.terms().rbegin()->first, e))
            throw UsageError("series JSON terms are not in graded-lexicographic order");
        s.add_term(e, c);
    }
    return s;
}

}  // namespace algser
