#ifndef KCANON_JSON_IO_HPP
#define KCANON_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kcanon/canonical.hpp"
#include "kcanon/gamma.hpp"
#include "kcanon/kclass.hpp"
#include "kcanon/verify.hpp"

namespace kcanon {

using json = nlohmann::ordered_json;

// {"-1": 1, "1": -1} with keys ascending by exponent. Coefficients that do
// not fit a 64-bit integer are emitted as decimal strings; the reader accepts
// both forms.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// {"basis": "e"|"AJ"|"V", "terms": [{"weight": [..], "coeff": {..}}, ..]}
// with terms sorted lexicographically by weight coordinates.
json coords_to_json(const std::string& basis, const std::map<Weight, LaurentPoly>& coords);
json kclass_to_json(const KClass& x);
KClass kclass_from_json(const RootSystem& rs, const Straightener& str, const json& j);

json graded_character_to_json(const GradedCharacter& gc);

json bmatrix_to_json(const BMatrix& m);
std::string bmatrix_to_tsv(const BMatrix& m);

json report_to_json(const VerificationReport& r);
std::string report_to_tsv(const VerificationReport& r);

} // namespace kcanon

#endif
