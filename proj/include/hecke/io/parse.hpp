#pragma once

#include <string_view>
#include <vector>

#include "hecke/arith/mat2.hpp"
#include "json.hpp"

namespace hecke {

/// JSON where rationals may be written bare ("1/2") as well as quoted or as integers.
/// Throws ParseError.
nlohmann::json parse_lenient_json(std::string_view text);

/// Rational from a JSON string "n/d" or integer.  Throws ParseError.
Rat rat_from_json(const nlohmann::json& j);
/// [x, y].
Vec2 vec_from_json(const nlohmann::json& j);
/// [[a, b], [c, d]].
Mat2 mat_from_json(const nlohmann::json& j);

/// "[[1,1/2],[0,1]]" with bare rationals.
Mat2 parse_matrix(std::string_view text);
Vec2 parse_vector(std::string_view text);
/// "[[[2,0],[0,1]], [[4,0],[0,1]]]".
std::vector<Mat2> parse_matrix_list(std::string_view text);

nlohmann::json to_json(const Rat& x);
nlohmann::json to_json(const Vec2& v);
nlohmann::json to_json(const Mat2& m);

}  // namespace hecke
