#include "schurq/poly_json.hpp"

namespace schurq {

nlohmann::json to_json_value(const BivarPoly &a) {
    auto out = nlohmann::json::array();
    for (const auto &t : a.terms())
        out.push_back({t.mono.xdeg, t.mono.qdeg, t.coeff.get_str()});
    return out;
}

BivarPoly from_json_value(const nlohmann::json &j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Term> terms;
    terms.reserve(j.size());
    for (const auto &triple : j) {
        if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_unsigned() ||
            !triple[1].is_number_unsigned() || !triple[2].is_string())
            throw std::invalid_argument("polynomial term must be [xdeg, qdeg, \"coeff\"]");
        Coefficient c;
        if (c.set_str(triple[2].get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad coefficient: " + triple[2].get<std::string>());
        terms.push_back({{triple[0].get<Exponent>(), triple[1].get<Exponent>()}, std::move(c)});
    }
    return BivarPoly::from_terms(std::move(terms));
}

std::string to_json_string(const BivarPoly &a) {
    return to_json_value(a).dump();
}

BivarPoly from_json_string(const std::string &s) {
    try {
        return from_json_value(nlohmann::json::parse(s));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
}

} // namespace schurq
