#include "qgb/json_io.hpp"

#include <sstream>

namespace qgb {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

Json mono_to_json(const LaurentMonomial& m, const ParamSet& params) {
    Json out = Json::array();
    for (const auto& [p, e] : m.entries()) out.push_back({params.name(p), e});
    return out;
}

LaurentMonomial mono_from_json(const Json& j, ParamSet& params) {
    std::vector<LaurentMonomial::Entry> entries;
    for (const auto& pair : j)
        entries.emplace_back(params.id_of(pair.at(0).get<std::string>()),
                             pair.at(1).get<std::int64_t>());
    return LaurentMonomial::from_entries(std::move(entries));
}

Json word_to_json(const Word& w) {
    return Json(w.letters);
}

Word word_from_json(const Json& j) {
    return Word(j.get<std::vector<Letter>>());
}

Json relation_to_json(const BinomialRelation& rel, const ParamSet& params) {
    return Json{{"lead", word_to_json(rel.lead)},
                {"coeff", mono_to_json(rel.coeff, params)},
                {"tail", word_to_json(rel.tail)}};
}

BinomialRelation relation_from_json(const Json& j, ParamSet& params) {
    return {word_from_json(j.at("lead")), mono_from_json(j.at("coeff"), params),
            word_from_json(j.at("tail"))};
}

Json presentation_to_json(const Presentation& p, const ParamSet& params) {
    Json rels = Json::array();
    for (const auto& rel : p.relations) rels.push_back(relation_to_json(rel, params));
    Json monos = Json::array();
    for (const auto& w : p.monomial_relations) monos.push_back(word_to_json(w));
    return Json{{"provenance", provenance_name(p.provenance)},
                {"generators", p.generator_labels},
                {"relations", rels},
                {"monomial_relations", monos}};
}

Presentation presentation_from_json(const Json& j, ParamSet& params) {
    Presentation p;
    p.provenance = provenance_from_name(j.at("provenance").get<std::string>());
    p.generator_labels = j.at("generators").get<std::vector<std::string>>();
    for (const auto& rel : j.at("relations")) p.relations.push_back(relation_from_json(rel, params));
    for (const auto& w : j.at("monomial_relations")) p.monomial_relations.push_back(word_from_json(w));
    return p;
}

Json matrix_to_json(const DeformationMatrix& m, const ParamSet& params) {
    Json rows = Json::array();
    for (int i = 0; i < m.n_plus_1(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n_plus_1(); ++j) row.push_back(mono_to_json(m.at(i, j), params));
        rows.push_back(std::move(row));
    }
    return Json{{"size", m.n_plus_1()}, {"entries", rows}};
}

DeformationMatrix matrix_from_json(const Json& j, ParamSet& params) {
    const int size = j.at("size").get<int>();
    std::vector<LaurentMonomial> entries;
    for (const auto& row : j.at("entries"))
        for (const auto& cell : row) entries.push_back(mono_from_json(cell, params));
    return DeformationMatrix::from_entries(size, std::move(entries));
}

Json report_to_json(const CertificationReport& r) {
    return Json{{"system_id", r.system_id},
                {"setting", setting_name(r.setting)},
                {"n_overlaps", r.n_overlaps},
                {"n_solvable", r.n_solvable},
                {"normal3_count", r.normal3_count},
                {"expected_dim3", r.expected_dim3},
                {"pass", r.pass}};
}

Json relation_to_json_assigned(const BinomialRelation& rel, const ParamSet& params,
                               const ParamAssignment& assign) {
    return Json{{"lead", word_to_json(rel.lead)},
                {"coeff", rational_str(rel.coeff.eval(assign, params))},
                {"tail", word_to_json(rel.tail)}};
}

Json presentation_to_json_assigned(const Presentation& p, const ParamSet& params,
                                   const ParamAssignment& assign) {
    Json rels = Json::array();
    for (const auto& rel : p.relations) rels.push_back(relation_to_json_assigned(rel, params, assign));
    Json monos = Json::array();
    for (const auto& w : p.monomial_relations) monos.push_back(word_to_json(w));
    return Json{{"provenance", provenance_name(p.provenance)},
                {"generators", p.generator_labels},
                {"relations", rels},
                {"monomial_relations", monos}};
}

Json matrix_to_json_assigned(const DeformationMatrix& m, const ParamSet& params,
                             const ParamAssignment& assign) {
    Json rows = Json::array();
    for (int i = 0; i < m.n_plus_1(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n_plus_1(); ++j)
            row.push_back(rational_str(m.at(i, j).eval(assign, params)));
        rows.push_back(std::move(row));
    }
    return Json{{"size", m.n_plus_1()}, {"entries", rows}};
}

}  // namespace qgb
