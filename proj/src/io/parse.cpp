#include "hecke/io/parse.hpp"

#include <regex>
#include <string>

#include "hecke/error.hpp"

namespace hecke {

using nlohmann::json;

json parse_lenient_json(std::string_view text) {
  const std::string raw(text);
  json out = json::parse(raw, nullptr, false);
  if (!out.is_discarded()) return out;
  // Quote bare fractions and retry.
  static const std::regex fraction(R"((^|[\[,:\s])(-?\d+\s*/\s*-?\d+)(?=[\],}\s]|$))");
  const std::string quoted = std::regex_replace(raw, fraction, "$1\"$2\"");
  out = json::parse(quoted, nullptr, false);
  if (out.is_discarded()) throw ParseError("malformed input: " + raw);
  return out;
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational, got " + j.dump());
}

Vec2 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [x, y], got " + j.dump());
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

Mat2 mat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [[a, b], [c, d]], got " + j.dump());
  Vec2 r0 = vec_from_json(j[0]), r1 = vec_from_json(j[1]);
  return {r0.x, r0.y, r1.x, r1.y};
}

Mat2 parse_matrix(std::string_view text) { return mat_from_json(parse_lenient_json(text)); }

Vec2 parse_vector(std::string_view text) { return vec_from_json(parse_lenient_json(text)); }

std::vector<Mat2> parse_matrix_list(std::string_view text) {
  json j = parse_lenient_json(text);
  if (!j.is_array()) throw ParseError("expected a list of matrices, got " + j.dump());
  std::vector<Mat2> out;
  for (const auto& m : j) out.push_back(mat_from_json(m));
  return out;
}

json to_json(const Rat& x) { return x.str(); }

json to_json(const Vec2& v) { return json::array({v.x.str(), v.y.str()}); }

json to_json(const Mat2& m) {
  return json::array({json::array({m.a.str(), m.b.str()}), json::array({m.c.str(), m.d.str()})});
}

}  // namespace hecke
