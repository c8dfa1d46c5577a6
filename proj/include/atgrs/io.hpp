#pragma once

#include <string>

#include <json.hpp>

#include "atgrs/tgrs.hpp"

namespace atgrs {

using json = nlohmann::json;

/// {"p": int, "m": int, "modulus": [int...]} -> field context.
Field parse_field(const json& j);
json field_to_json(const FieldCtx& f);

/// Code spec document:
/// {"field": {...}, "n": int, "k": int, "alpha": [int...],
///  "v": [int...] (optional, default all ones),
///  "eta": [[int...]...] with k rows of n-k entries}
CodeSpec parse_code_spec(const json& j);
json code_spec_to_json(const CodeSpec& spec);

json report_to_json(const MdsReport& r);
std::string report_to_text(const MdsReport& r);

/// Matrix text format: "rows cols" on the first line, then one line per row
/// of space-separated canonical element integers.
std::string mat_to_text(const Mat& m);
json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldCtx& f, const json& j);

/// Polynomial text format: space-separated coefficients, ascending degree.
std::string poly_to_text(const Poly& p);
Poly poly_from_text(const FieldCtx& f, const std::string& text);

std::vector<Elt> parse_elt_list(const FieldCtx& f, const json& j, const std::string& name);

}  // namespace atgrs
