#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bicext/classifier.hpp"
#include "bicext/endomorphism.hpp"
#include "bicext/errors.hpp"
#include "bicext/window.hpp"

namespace bicext {

// Text forms:
//   element  "(i,j,a)" for (i, j, [a)), or "zero"
//   family   "0,1,2", with an optional trailing ",empty"
//   spec     "alpha_bracket:k", "alpha:k,p", "beta:k,p", "scale:k", "identity",
//            "identity:<family>", or
//            "table(family=0,1,2;plus=(k,0,0);minus=(0,k,0);e0=(0,0,0);e1=...;e2=...)"
// JSON forms:
//   element  {"i": int, "j": int, "set": int} or "zero"
//   family   {"bounds": [int, ...], "empty": bool}
//   spec     {"kind": "alpha_bracket"|"alpha"|"beta"|"scale"|"table", "k": int, "p": int,
//             "family": family, "images": {"plus": elem, "minus": elem, "e": {"<a>": elem}}}
//            with "p" only for alpha/beta and "family"/"images" only for tables.
// parse_family and parse_spec also accept the JSON form when the text starts
// with '{'.

class ParseError : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

Element parse_element(std::string_view text);
OmegaClosedFamily parse_family(std::string_view text);
EndoSpec parse_spec(std::string_view text);

nlohmann::json to_json(const Element& x);
nlohmann::json to_json(const OmegaClosedFamily& fam);
nlohmann::json to_json(const EndoSpec& e);
nlohmann::json to_json(const WindowCheck& check);
nlohmann::json to_json(const OracleResult& result);
/// Field names: family, bounds, candidates, prunedCounts, rejectedCounts,
/// pruning, elapsed_ms. elapsed_ms is left out when `with_timing` is false,
/// which makes reports of equal searches byte-identical.
nlohmann::json to_json(const ClassificationReport& report, bool with_timing = true);

Element element_from_json(const nlohmann::json& j);
OmegaClosedFamily family_from_json(const nlohmann::json& j);
EndoSpec spec_from_json(const nlohmann::json& j);

} // namespace bicext
