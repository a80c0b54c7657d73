#include "hecke/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hecke/error.hpp"
#include "hecke/group/sampling.hpp"
#include "hecke/io/parse.hpp"

namespace hecke {

using nlohmann::json;

namespace {

template <class F>
auto field(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigInvalid&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigInvalid("field '" + name + "': " + e.what());
  }
}

Mat2 q_from_json(const PairDescriptor& desc, const json& j) {
  if (desc.family() == Family::Heisenberg && !j.is_array()) return Mat2{1, rat_from_json(j), 0, 1};
  return mat_from_json(j);
}

}  // namespace

PairConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigInvalid("configuration must be a JSON object");
  auto get_string = [&](const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) throw ConfigInvalid("field '" + key + "': expected a string");
    return j[key].get<std::string>();
  };

  const std::string family_s = get_string("family", "Planar");
  Family family;
  if (family_s == "Planar") family = Family::Planar;
  else if (family_s == "Heisenberg") family = Family::Heisenberg;
  else throw ConfigInvalid("field 'family': expected Planar or Heisenberg, got " + family_s);

  std::optional<long> p;
  if (j.contains("p") && !j["p"].is_null()) {
    if (!j["p"].is_number_integer()) throw ConfigInvalid("field 'p': expected an integer");
    p = j["p"].get<long>();
  }
  const std::string ring = get_string("base_ring", p ? "Z[1/" + std::to_string(*p) + "]" : "Q");
  if (ring == "Q") {
    if (p) throw ConfigInvalid("field 'p': base_ring Q takes no prime");
  } else if (ring.rfind("Z[1/", 0) == 0 && ring.back() == ']') {
    long ring_p = field("base_ring", [&] { return std::stol(ring.substr(4, ring.size() - 5)); });
    if (p && *p != ring_p) throw ConfigInvalid("field 'p': " + std::to_string(*p) + " disagrees with base_ring " + ring);
    p = ring_p;
  } else {
    throw ConfigInvalid("field 'base_ring': expected Q or Z[1/p], got " + ring);
  }

  const std::string kind_s = get_string("Q_kind", family == Family::Heisenberg ? "Unipotent" : "FullGL2");
  QKind kind;
  if (kind_s == "FullGL2") kind = QKind::FullGL2;
  else if (kind_s == "QuadTorus") kind = QKind::QuadTorus;
  else if (kind_s == "Unipotent") kind = QKind::Unipotent;
  else throw ConfigInvalid("field 'Q_kind': expected FullGL2, QuadTorus or Unipotent, got " + kind_s);

  long d = 0;
  if (j.contains("d") && !j["d"].is_null()) {
    if (!j["d"].is_number_integer()) throw ConfigInvalid("field 'd': expected an integer");
    d = j["d"].get<long>();
  }
  if (kind == QKind::QuadTorus && d == 0) throw ConfigInvalid("field 'd': required for QuadTorus");

  Lattice m = Lattice::standard();
  if (j.contains("M_basis") && !j["M_basis"].is_null()) {
    const json& mb = j["M_basis"];
    if (mb.is_string()) {
      const std::string marker = mb.get<std::string>();
      if (marker != "{0}xZ" && marker != "Z^2")
        throw ConfigInvalid("field 'M_basis': unknown marker " + marker);
      if ((marker == "{0}xZ") != (family == Family::Heisenberg))
        throw ConfigInvalid("field 'M_basis': marker " + marker + " does not match family " + family_s);
    } else {
      m = field("M_basis", [&] { return hnf(mat_from_json(mb)); });
    }
  }

  std::vector<Mat2> r_gens;
  if (j.contains("R_generators") && !j["R_generators"].is_null() &&
      !(j["R_generators"].is_string() && j["R_generators"] == "default")) {
    if (!j["R_generators"].is_array()) throw ConfigInvalid("field 'R_generators': expected a list of matrices");
    for (const auto& g : j["R_generators"]) r_gens.push_back(field("R_generators", [&] { return mat_from_json(g); }));
  } else {
    r_gens = field("Q_kind", [&] { return default_r_generators(kind, d); });
  }

  PairConfig config;
  config.desc = PairDescriptor::make(family, p, kind, d, m, r_gens);

  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    if (!b.is_object()) throw ConfigInvalid("field 'bounds': expected an object");
    auto positive = [&](const char* key, auto& target) {
      if (!b.contains(key)) return;
      if (!b[key].is_number_integer() || b[key].get<long>() <= 0)
        throw ConfigInvalid(std::string("field 'bounds.") + key + "': expected a positive integer");
      target = static_cast<std::remove_reference_t<decltype(target)>>(b[key].get<long>());
    };
    positive("coset_enum_max", config.bounds.coset_enum_max);
    positive("conductor_max", config.bounds.conductor_max);
    positive("stage_order_max", config.bounds.stage_order_max);
    positive("residue_group_max", config.bounds.residue_group_max);
  }

  const json samples = j.contains("samples") ? j["samples"] : json::object();
  if (samples.contains("q")) {
    for (const auto& q : samples["q"])
      config.sample_q.push_back(field("samples.q", [&] { return q_from_json(config.desc, q); }));
  } else {
    config.sample_q = default_q_samples(config.desc);
  }
  if (samples.contains("n")) {
    for (const auto& n : samples["n"]) config.sample_n.push_back(field("samples.n", [&] { return vec_from_json(n); }));
  } else {
    config.sample_n = default_n_samples(config.desc);
  }
  if (samples.contains("h")) {
    if (!samples["h"].is_number_integer() || samples["h"].get<long>() < 0)
      throw ConfigInvalid("field 'samples.h': expected a non-negative integer");
    config.sample_h = samples["h"].get<std::size_t>();
  }
  for (const auto& q : config.sample_q)
    if (!config.desc.in_Q(q)) throw ConfigInvalid("field 'samples.q': " + q.str() + " is not in Q");
  for (const auto& n : config.sample_n)
    if (!config.desc.in_N(n)) throw ConfigInvalid("field 'samples.n': " + n.str() + " is not in N");
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PairConfig load_config(const std::string& path) {
  const std::string text = read_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigInvalid("malformed JSON in " + path);
  return config_from_json(j);
}

json config_to_json(const PairConfig& config) {
  const auto& desc = config.desc;
  json r_gens = json::array();
  for (const auto& g : desc.r_generators()) r_gens.push_back(to_json(g));
  json out{{"family", to_string(desc.family())},
           {"base_ring", desc.prime() ? "Z[1/" + std::to_string(*desc.prime()) + "]" : "Q"},
           {"p", desc.prime() ? json(*desc.prime()) : json(nullptr)},
           {"Q_kind", to_string(desc.q_kind())},
           {"d", desc.d()},
           {"M_basis", desc.family() == Family::Heisenberg ? json("{0}xZ") : to_json(desc.M().basis())},
           {"R_generators", r_gens}};
  return out;
}

GElem gelem_from_json(const PairDescriptor& desc, const json& j) {
  if (!j.is_object()) throw ParseError("element must be an object {\"n\": ..., \"q\": ...}");
  Vec2 n = j.contains("n") ? vec_from_json(j["n"]) : Vec2{0, 0};
  Mat2 q = j.contains("q") ? q_from_json(desc, j["q"]) : Mat2::identity();
  return make_elem(desc, n, q);
}

json gelem_to_json(const PairDescriptor& desc, const GElem& x) {
  json q = desc.family() == Family::Heisenberg ? to_json(x.q.b) : to_json(x.q);
  return json{{"n", to_json(x.n)}, {"q", q}};
}

HeckeElement hecke_from_json(CosetEnumerator& cosets, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("Hecke element must be {\"terms\": [...]}");
  HeckeElement f(cosets.descriptor().id());
  for (const auto& term : j["terms"]) {
    if (!term.contains("rep")) throw ParseError("term without rep: " + term.dump());
    Rat c = term.contains("coeff") ? rat_from_json(term["coeff"]) : Rat(1);
    f.add(cosets, gelem_from_json(cosets.descriptor(), term["rep"]), c);
  }
  return f;
}

json hecke_to_json(const PairDescriptor& desc, const HeckeElement& f) {
  json terms = json::array();
  for (const auto& [key, term] : f.terms())
    terms.push_back(json{{"rep", gelem_to_json(desc, term.rep)}, {"coeff", term.coeff.str()}, {"key", key}});
  return json{{"terms", terms}};
}

}  // namespace hecke
