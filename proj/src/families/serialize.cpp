#include "rzs/families/serialize.hpp"

#include <stdexcept>

namespace rzs::families {

Json to_json(const SeriesSpec& s) {
    Json den = Json::array();
    for (const auto& f : s.denominator) den.push_back(Json::array({f.a, f.b}));
    Json j;
    j["numerator"] = numerator_name(s.numerator);
    j["start_index"] = s.start_index;
    j["denominator"] = den;
    j["ratio"] = s.ratio.to_string();
    j["leading_coefficient"] = s.leading_coefficient.to_string();
    return j;
}

SeriesSpec series_from_json(const Json& j) {
    try {
        SeriesSpec s;
        s.numerator = numerator_from_name(j.at("numerator").get<std::string>());
        s.start_index = j.at("start_index").get<long>();
        for (const auto& f : j.at("denominator")) s.denominator.push_back({f.at(0).get<long>(), f.at(1).get<long>()});
        s.ratio = BigRational::parse(j.at("ratio").get<std::string>());
        s.leading_coefficient = BigRational::parse(j.at("leading_coefficient").get<std::string>());
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

Json to_json(const IdentityInstance& inst) {
    Json j;
    j["family"] = family_name(inst.family);
    j["m"] = inst.m ? Json(*inst.m) : Json(nullptr);
    j["p"] = inst.p;
    j["z"] = inst.z.to_string();
    j["reading"] = reading_name(inst.reading);
    j["form"] = inst.form;
    j["lhs"] = to_json(inst.lhs);
    j["rhs"] = closedform::to_json(inst.rhs);
    return j;
}

IdentityInstance instance_from_json(const Json& j) {
    try {
        IdentityInstance inst;
        inst.family = family_from_name(j.at("family").get<std::string>());
        if (!j.at("m").is_null()) inst.m = j.at("m").get<int>();
        inst.p = j.at("p").get<int>();
        inst.z = BigRational::parse(j.at("z").get<std::string>());
        inst.reading = reading_from_name(j.at("reading").get<std::string>());
        inst.form = j.value("form", std::string());
        inst.lhs = series_from_json(j.at("lhs"));
        inst.rhs = closedform::closed_form_from_json(j.at("rhs"));
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
    }
}

}  // namespace rzs::families
