#include "bimax/records.hpp"

#include <json.hpp>

namespace bimax {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json degrees_json(const DegreeSequence& ds) {
    return ordered_json{{"x", ds.x}, {"y", ds.y}};
}

ordered_json construction_json(const QuasiCompleteSpec& spec, int iso_class) {
    ordered_json j;
    j["k"] = spec.k;
    j["q"] = spec.q;
    j["r"] = spec.r;
    j["degree_sequence"] = degrees_json(quasi_complete_degrees(spec));
    j["iso_class"] = iso_class;
    return j;
}

ordered_json classification_json(const ExtremalClassification& c) {
    ordered_json j;
    j["n"] = c.n;
    j["m"] = c.m;
    j["regime"] = regime_name(c.regime);
    if (c.optimal_k) j["k0"] = *c.optimal_k;
    if (c.boundary) {
        j["boundary"] = ordered_json{{"lhs", c.boundary->lhs},
                                     {"rhs", c.boundary->rhs},
                                     {"relation", std::string(1, c.boundary->relation)}};
    }
    j["max_sigma2"] = c.max_sigma2;
    j["constructions"] = ordered_json::array();
    for (std::size_t i = 0; i < c.constructions.size(); ++i)
        j["constructions"].push_back(construction_json(c.constructions[i], c.iso_class_of[i]));
    j["iso_classes"] = c.iso_classes;
    return j;
}

std::string degrees_text(const std::vector<int>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

}  // namespace

std::string classification_to_json(const ExtremalClassification& c) {
    return classification_json(c).dump(2) + "\n";
}

std::string classification_to_text(const ExtremalClassification& c) {
    std::string out = "n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) +
                      " regime=" + regime_name(c.regime);
    if (c.optimal_k) out += " k0=" + std::to_string(*c.optimal_k);
    out += " max_sigma2=" + std::to_string(c.max_sigma2) + "\n";
    if (c.boundary) {
        out += "boundary: m=" + std::to_string(c.boundary->lhs) +
               " (n-k0)*(k0-1)=" + std::to_string(c.boundary->rhs) + " relation=" +
               std::string(1, c.boundary->relation) + "\n";
    }
    out += "constructions (" + std::to_string(c.constructions.size()) + " listed, " +
           std::to_string(c.iso_classes) + " isomorphism class" +
           (c.iso_classes == 1 ? "" : "es") + "):\n";
    for (std::size_t i = 0; i < c.constructions.size(); ++i) {
        const QuasiCompleteSpec& s = c.constructions[i];
        DegreeSequence ds = quasi_complete_degrees(s);
        out += "  k=" + std::to_string(s.k) + " q=" + std::to_string(s.q) +
               " r=" + std::to_string(s.r) + " class=" + std::to_string(c.iso_class_of[i]) +
               " degX=" + degrees_text(ds.x) + " degY=" + degrees_text(ds.y) + "\n";
    }
    return out;
}

std::string report_to_json(const OracleReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    if (r.regime) j["regime"] = regime_name(*r.regime);
    j["brute_max"] = r.brute_max;
    if (r.engine_max) j["max_sigma2"] = *r.engine_max;
    j["maximizer_classes"] = ordered_json::array();
    for (const MaximizerClass& c : r.maximizer_classes) {
        DegreeSequence ds = degree_sequence(c.representative);
        j["maximizer_classes"].push_back(ordered_json{
            {"k", c.representative.x_size()}, {"degree_sequence", degrees_json(ds)}});
    }
    j["engine_classes"] = r.engine_classes.size();
    j["enumeration_count"] = r.enumeration_count;
    if (r.representative_overflow) j["representative_overflow"] = true;
    if (r.verdict) j["verdict"] = verdict_name(*r.verdict);
    return j.dump(2) + "\n";
}

std::string report_line(const OracleReport& r) {
    std::string regime = r.regime ? regime_name(*r.regime) : "?";
    std::string engine = r.engine_max ? std::to_string(*r.engine_max) : "?";
    std::string verdict = r.verdict ? verdict_name(*r.verdict) : "?";
    return std::to_string(r.n) + " " + std::to_string(r.m) + " " + regime + " " +
           std::to_string(r.brute_max) + " " + engine + " " +
           std::to_string(r.maximizer_classes.size()) + " " + verdict;
}

}  // namespace bimax
