#include "macmahon/json_io.hpp"

#include <stdexcept>

namespace macmahon::io {

json series_to_json(const QSeries& s) {
    json coeffs = json::array();
    for (int n = 0; n <= s.truncation(); ++n) coeffs.push_back(s.coeff(n).str());
    return json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const json& j) {
    const int trunc = j.at("truncation").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return QSeries(trunc, std::move(coeffs));
}

json lincomb_to_json(const LinComb& l) {
    json out = json::array();
    for (const auto& [w, c] : l.terms()) {
        json v = json::array();
        for (int x : w) v.push_back(x);
        out.push_back(json{{"vector", std::move(v)}, {"coeff", c.str()}});
    }
    return out;
}

LinComb lincomb_from_json(const json& j) {
    LinComb l;
    for (const auto& term : j) {
        Vec w;
        for (const auto& x : term.at("vector")) w.push_back(x.get<int>());
        l.add(w, Rational::parse(term.at("coeff").get<std::string>()));
    }
    return l;
}

json representation_to_json(const Representation& rep) {
    json out = json::object();
    for (const auto& [e, c] : rep.coefficients) out[e.label()] = c.str();
    return out;
}

json detector_to_json(const PolyDetector& det) {
    json polys = json::array();
    for (const auto& p : det.polys) {
        json q = json::array();
        for (const auto& c : p) q.push_back(c.get_str());
        polys.push_back(std::move(q));
    }
    json out{{"kind", "poly"}, {"polys", std::move(polys)}};
    if (!det.origin.empty()) out["origin"] = det.origin;
    return out;
}

json detector_to_json(const ConstDetector& det) {
    json terms = json::array();
    for (const auto& [w, c] : det.terms) {
        json v = json::array();
        for (int x : w) v.push_back(x);
        terms.push_back(json{{"vector", std::move(v)}, {"coeff", c.get_str()}});
    }
    json out{{"kind", "const"}, {"terms", std::move(terms)}};
    out["weight_bound"] = det.requested_weight;
    out["max_weight"] = det.max_weight;
    if (det.exceeds_requested_weight) out["exceeds_weight_bound"] = true;
    if (!det.origin.empty()) out["origin"] = det.origin;
    return out;
}

PolyDetector poly_detector_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "poly")
        throw std::invalid_argument("detector kind is not 'poly'");
    PolyDetector det;
    for (const auto& p : j.at("polys")) {
        std::vector<Int> q;
        for (const auto& c : p)
            q.push_back(c.is_string() ? Int(c.get<std::string>())
                                      : Int(std::to_string(c.get<long long>())));
        det.polys.push_back(std::move(q));
    }
    if (j.contains("origin")) det.origin = j["origin"].get<std::string>();
    return det;
}

ConstDetector const_detector_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "const")
        throw std::invalid_argument("detector kind is not 'const'");
    ConstDetector det;
    for (const auto& term : j.at("terms")) {
        Vec w;
        for (const auto& x : term.at("vector")) w.push_back(x.get<int>());
        const auto& c = term.at("coeff");
        det.terms.emplace(w, c.is_string() ? Int(c.get<std::string>())
                                           : Int(std::to_string(c.get<long long>())));
        det.max_weight = std::max(det.max_weight, weight(w));
    }
    if (j.contains("weight_bound")) det.requested_weight = j["weight_bound"].get<int>();
    if (j.contains("origin")) det.origin = j["origin"].get<std::string>();
    return det;
}

json certificate_to_json(const Certificate& cert) {
    json values = json::array();
    for (const auto& [n, v] : cert.composite_values) values.push_back(json::array({n, v.get_str()}));
    return json{{"detector", cert.label},
                {"range", cert.range},
                {"verified", cert.verified},
                {"witness", cert.witness},
                {"composite_values", std::move(values)},
                {"prime_table_fnv1a", cert.prime_table_hash}};
}

} // namespace macmahon::io
