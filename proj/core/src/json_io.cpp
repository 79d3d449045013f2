#include "qpc/json_io.hpp"

#include "qpc/error.hpp"

namespace qpc {

using nlohmann::json;

json to_json(const PolyN& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_str(c));
    return coeffs;
}

PolyN poly_from_json(const json& j) {
    if (!j.is_array()) throw argument_error("polynomial JSON must be an array");
    std::vector<BigRational> coeffs;
    for (const auto& e : j) coeffs.push_back(parse_rational(e.get<std::string>()));
    return PolyN(std::move(coeffs));
}

json to_json(const RatFuncN& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFuncN ratfunc_from_json(const json& j) {
    return RatFuncN(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const PartitionVector& v) {
    json terms = json::array();
    for (const auto& [p, c] : v.terms())
        terms.push_back(json{{"partition", p.str()}, {"coeff", to_json(c)}});
    return json{{"k", v.k()}, {"terms", terms}};
}

PartitionVector partition_vector_from_json(const json& j) {
    PartitionVector v(j.at("k").get<int>());
    for (const auto& t : j.at("terms")) {
        SetPartition p = SetPartition::parse(t.at("partition").get<std::string>());
        v.add_term(p, ratfunc_from_json(t.at("coeff")));
    }
    return v;
}

json to_json(const GenerationCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps)
        steps.push_back(json{{"op", s.op}, {"args", s.args}, {"after", to_json(s.after)}});
    return json{
        {"steps", steps},
        {"conclusion", cert.conclusion == GenerationCertificate::Conclusion::ReachesBasicCrossing
                           ? "reaches-basic-crossing"
                           : "inconclusive"},
        {"final_coefficient", to_json(cert.final_coefficient)},
        {"vanishing", to_json(cert.vanishing)},
        {"oracle_n0", cert.oracle_n0},
        {"dense_checked", cert.dense_checked},
    };
}

GenerationCertificate certificate_from_json(const json& j) {
    GenerationCertificate cert;
    for (const auto& s : j.at("steps")) {
        CertStep step;
        step.op = s.at("op").get<std::string>();
        step.args = s.at("args").get<std::vector<int>>();
        step.after = partition_vector_from_json(s.at("after"));
        cert.steps.push_back(std::move(step));
    }
    cert.conclusion = j.at("conclusion").get<std::string>() == "reaches-basic-crossing"
                          ? GenerationCertificate::Conclusion::ReachesBasicCrossing
                          : GenerationCertificate::Conclusion::Inconclusive;
    cert.final_coefficient = ratfunc_from_json(j.at("final_coefficient"));
    cert.vanishing = poly_from_json(j.at("vanishing"));
    cert.oracle_n0 = j.at("oracle_n0").get<int>();
    cert.dense_checked = j.at("dense_checked").get<bool>();
    return cert;
}

}  // namespace qpc
