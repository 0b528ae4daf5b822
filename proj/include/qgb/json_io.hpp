#ifndef QGB_JSON_IO_HPP
#define QGB_JSON_IO_HPP

#include <json.hpp>

#include "qgb/gbcheck.hpp"
#include "qgb/qspace.hpp"

namespace qgb {

using Json = nlohmann::json;

/// Sorted array of [param_name, exponent] pairs: [["q10",2],["q21",-1]].
Json mono_to_json(const LaurentMonomial& m, const ParamSet& params);
LaurentMonomial mono_from_json(const Json& j, ParamSet& params);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

/// {"lead":[1,0],"coeff":[["q10",1]],"tail":[0,1]}
Json relation_to_json(const BinomialRelation& rel, const ParamSet& params);
BinomialRelation relation_from_json(const Json& j, ParamSet& params);

Json presentation_to_json(const Presentation& p, const ParamSet& params);
Presentation presentation_from_json(const Json& j, ParamSet& params);

Json matrix_to_json(const DeformationMatrix& m, const ParamSet& params);
DeformationMatrix matrix_from_json(const Json& j, ParamSet& params);

Json report_to_json(const CertificationReport& r);

/// Variants with every coefficient evaluated to an exact rational, encoded
/// as a decimal string ("4", "5/2").
Json relation_to_json_assigned(const BinomialRelation& rel, const ParamSet& params,
                               const ParamAssignment& assign);
Json presentation_to_json_assigned(const Presentation& p, const ParamSet& params,
                                   const ParamAssignment& assign);
Json matrix_to_json_assigned(const DeformationMatrix& m, const ParamSet& params,
                             const ParamAssignment& assign);

}  // namespace qgb

#endif
