#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "hecke/cosets/double_coset.hpp"
#include "hecke/cosets/hecke_algebra.hpp"
#include "hecke/error.hpp"
#include "hecke/families/gl2.hpp"
#include "hecke/families/heisenberg.hpp"
#include "hecke/families/quad_units.hpp"
#include "hecke/group/sampling.hpp"
#include "hecke/group/verify.hpp"
#include "hecke/io/json_io.hpp"
#include "hecke/io/parse.hpp"
#include "hecke/io/report.hpp"
#include "hecke/random.hpp"
#include "hecke/tower/tower.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;

struct Options {
  std::string config;
  std::uint64_t seed = 1;
  std::size_t bound_cosets = 0;
  std::string out;
};

// --config, else $HECKE_CONFIG_DIR/pair.json, else FullGL2 over Z[1/2].
PairConfig resolve_config(const Options& opt) {
  const char* dir = std::getenv("HECKE_CONFIG_DIR");
  PairConfig config;
  if (!opt.config.empty()) {
    std::filesystem::path path(opt.config);
    if (!std::filesystem::exists(path) && dir && path.is_relative()) path = std::filesystem::path(dir) / path;
    config = load_config(path.string());
  } else if (dir && std::filesystem::exists(std::filesystem::path(dir) / "pair.json")) {
    config = load_config((std::filesystem::path(dir) / "pair.json").string());
  }
  if (opt.bound_cosets > 0) config.bounds.coset_enum_max = opt.bound_cosets;
  return config;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

CheckRecord inconclusive(const std::string& name, json inputs, const Error& e) {
  return {name, std::move(inputs), json{{"error", e.what()}}, Verdict::Inconclusive, "bounded computation"};
}

Report cmd_pair_verify(const Options& opt) {
  PairConfig config = resolve_config(opt);
  const PairDescriptor& desc = config.desc;
  std::vector<Mat2> qs = config.sample_q.empty() ? default_q_samples(desc) : config.sample_q;
  std::vector<Vec2> ns = config.sample_n.empty() ? default_n_samples(desc) : config.sample_n;

  Report report("pair verify " + desc.name() + " seed=" + std::to_string(opt.seed));
  report.merge(is_hecke_pair(desc, qs, ns, config.bounds));

  report.merge(reduced_check(desc, default_reduced_stages(desc), config.bounds));

  std::vector<GElem> xs;
  for (const auto& q : qs) xs.push_back(pure_q(desc, q));
  for (const auto& n : ns) xs.push_back(pure_n(desc, n));
  for (const auto& q : qs)
    for (const auto& n : ns) xs.push_back(make_elem(desc, n, q));

  Rng rng(opt.seed);
  std::vector<GElem> hs{identity(desc)};
  for (const auto& m : desc.m_generators()) hs.push_back(pure_n(desc, m));
  for (const auto& r : desc.r_generators()) hs.push_back(pure_q(desc, r));
  for (std::size_t i = 0; i < config.sample_h; ++i) hs.push_back(random_H(desc, rng));
  report.merge(verify_stabilizer_identities(desc, xs, hs));

  std::vector<Mat2> dq{Mat2::identity()};
  dq.insert(dq.end(), qs.begin(), qs.end());
  report.merge(downward_directed_check(desc, dq));
  return report;
}

GElem element_from_options(const PairDescriptor& desc, const std::string& element, const std::string& q,
                           const std::string& n) {
  if (!element.empty()) return gelem_from_json(desc, parse_lenient_json(element));
  Vec2 nv = n.empty() ? Vec2{0, 0} : parse_vector(n);
  Mat2 qm = q.empty() ? Mat2::identity() : parse_matrix(q);
  return make_elem(desc, nv, qm);
}

Report cmd_dcoset(const Options& opt, const std::string& element, const std::string& q, const std::string& n) {
  PairConfig config = resolve_config(opt);
  const PairDescriptor& desc = config.desc;
  GElem x = element_from_options(desc, element, q, n);
  Report report("dcoset " + desc.name());
  json inputs{{"x", gelem_to_json(desc, x)}};
  CosetEnumerator cosets(desc, config.bounds);
  try {
    auto dc = cosets.double_coset(x);
    auto dc_inv = cosets.double_coset(inv(desc, x));
    json reps = json::array();
    for (const auto& y : dc->left_reps) reps.push_back(gelem_to_json(desc, y));
    Rat delta = Rat(Int(dc->L())) / Rat(Int(dc_inv->L()));
    // Every listed representative must land in a distinct left coset inside H x H.
    bool distinct = std::set<std::string>(dc->left_keys.begin(), dc->left_keys.end()).size() == dc->L();
    report.add({"dcoset", inputs,
                json{{"left_reps", reps},
                     {"L", dc->L()},
                     {"L_inverse", dc_inv->L()},
                     {"delta", to_json(delta)},
                     {"key", dc->key}},
                verdict_of(distinct && delta == cosets.delta(x)), "L(x) = |HxH/H|, delta = L(x)/L(x^-1)"});
  } catch (const EnumerationBound& e) {
    report.add(inconclusive("dcoset", inputs, e));
  }
  return report;
}

Report cmd_hecke_mul(const Options& opt, const std::string& f_path, const std::string& g_path) {
  PairConfig config = resolve_config(opt);
  const PairDescriptor& desc = config.desc;
  CosetEnumerator cosets(desc, config.bounds);
  HeckeElement f = hecke_from_json(cosets, parse_lenient_json(read_file(f_path)));
  HeckeElement g = hecke_from_json(cosets, parse_lenient_json(read_file(g_path)));
  Report report("hecke mul " + desc.name());
  json inputs{{"f", hecke_to_json(desc, f)}, {"g", hecke_to_json(desc, g)}};
  const std::string anchor = "f*g(x) = sum over yH of f(y) g(y^-1 x); f^*(x) = f(x^-1) delta(x^-1)";
  try {
    HeckeElement fg = convolve(cosets, f, g);
    report.add({"hecke.product", inputs, json{{"f*g", hecke_to_json(desc, fg)}}, Verdict::Pass, anchor});

    HeckeElement fs = involution(cosets, f);
    HeckeElement gs = involution(cosets, g);
    bool twice = involution(cosets, fs) == f && involution(cosets, gs) == g;
    report.add({"hecke.involution", inputs,
                json{{"f^*", hecke_to_json(desc, fs)}, {"g^*", hecke_to_json(desc, gs)}, {"involutive", twice}},
                verdict_of(twice), anchor});

    bool anti = involution(cosets, fg) == convolve(cosets, gs, fs);
    report.add({"hecke.antimultiplicative", inputs, json{{"(f*g)^* = g^* * f^*", anti}}, verdict_of(anti), anchor});

    HeckeElement lhs = convolve(cosets, fg, f);
    HeckeElement rhs = convolve(cosets, f, convolve(cosets, g, f));
    bool assoc = lhs == rhs;
    report.add({"hecke.associativity", inputs,
                json{{"(f*g)*f", hecke_to_json(desc, lhs)}, {"f*(g*f)", hecke_to_json(desc, rhs)}}, verdict_of(assoc),
                anchor});
  } catch (const EnumerationBound& e) {
    report.add(inconclusive("hecke.product", inputs, e));
  }
  return report;
}

Report cmd_tower(const Options& opt, const std::string& seed_text, std::optional<std::size_t> stages) {
  PairConfig config = resolve_config(opt);
  const PairDescriptor& desc = config.desc;
  std::vector<Mat2> seeds = seed_text.empty() ? std::vector<Mat2>{} : parse_matrix_list(seed_text);
  for (const auto& s : seeds)
    if (!desc.in_Q(s)) throw NotInQ("seed " + s.str() + " is not in Q");
  std::size_t count = stages.value_or(seeds.size());
  if (count > seeds.size())
    throw ConfigInvalid("--stages " + std::to_string(count) + " exceeds the " + std::to_string(seeds.size()) +
                        " seeds given");
  Report report("tower build " + desc.name());
  json inputs{{"seeds", json::array()}, {"stages", count}};
  for (const auto& s : seeds) inputs["seeds"].push_back(to_json(s));
  try {
    Tower tower = build_tower(desc, seeds, count, config.bounds);
    report.merge(verify_tower(tower));
  } catch (const StageTooLarge& e) {
    report.add(inconclusive("tower.build", inputs, e));
  } catch (const ConductorOverflow& e) {
    report.add(inconclusive("tower.build", inputs, e));
  } catch (const EnumerationBound& e) {
    report.add(inconclusive("tower.build", inputs, e));
  }
  return report;
}

Report cmd_gl2(const std::optional<long>& p, const std::string& matrix) {
  Mat2 g = parse_matrix(matrix);
  THDecomposition dec = p ? th_decompose_p(g, *p) : th_decompose_global(g);
  THCertificate cert = certify(g, dec, p);
  Report report("gl2 decompose" + (p ? " p=" + std::to_string(*p) : std::string(" global")));
  json inputs{{"g", to_json(g)}};
  if (p) inputs["p"] = *p;
  report.add({"gl2.decompose", inputs,
              json{{"t", to_json(dec.t)},
                   {"k", to_json(dec.k)},
                   {"certificate",
                    {{"reassembles", cert.reassembles},
                     {"t_lower_triangular", cert.t_lower_triangular},
                     {"t_diagonal_allowed", cert.t_diagonal_allowed},
                     {"k_integral", cert.k_integral},
                     {"k_det_unit", cert.k_det_unit}}}},
              verdict_of(cert.ok()), "g = t k, t lower triangular, k in SL+-(2, Z_(p))"});
  return report;
}

json pair_json(const ResiduePair& x) { return json::array({x.first, x.second}); }

Report cmd_quad(long d, long s) {
  QuadUnitData data = unit_image_gap(d, s);
  Report report("quad units d=" + std::to_string(d) + " mod=" + std::to_string(s));
  json image = json::array();
  for (const auto& x : data.unit_image) image.push_back(pair_json(x));
  bool inside = std::includes(data.full_units.begin(), data.full_units.end(), data.unit_image.begin(),
                              data.unit_image.end());
  bool lagrange = !data.unit_image.empty() && data.full_units.size() % data.unit_image.size() == 0;
  auto witness = data.witness();
  bool witness_ok = !witness || !data.in_image(*witness);
  bool unit_ok = data.r0.norm() == 1 || data.r0.norm() == -1;
  json outputs{{"r0", data.r0.str()},
               {"norm", data.r0.norm().get_str()},
               {"n_s", data.n_s},
               {"image", image},
               {"image_size", data.unit_image.size()},
               {"unit_group_size", data.full_units.size()},
               {"proper", data.proper()},
               {"witness", witness ? pair_json(*witness) : json(nullptr)},
               {"certificate",
                {{"r0_is_unit", unit_ok},
                 {"image_inside_units", inside},
                 {"image_size_divides", lagrange},
                 {"witness_outside_image", witness_ok}}}};
  report.add({"quad.units", json{{"d", d}, {"mod", s}}, outputs, verdict_of(unit_ok && inside && lagrange && witness_ok),
              "image of +-r0^Z in (Z_s[sqrt d])^x"});
  return report;
}

Report cmd_heis(long s, long z, long w) {
  auto orbit = heis_orbit(z, w, s);
  Report report("heis orbit mod=" + std::to_string(s));
  json points = json::array();
  for (const auto& [a, b] : orbit) points.push_back(json::array({a, b}));
  long expected = s / std::gcd(((z % s) + s) % s, s);
  report.add({"heis.orbit", json{{"mod", s}, {"z", z}, {"w", w}},
              json{{"orbit", points}, {"size", orbit.size()}, {"expected_size", expected}},
              verdict_of(static_cast<long>(orbit.size()) == expected), "orbit {(z, w + r z) : r in Z/s}"});
  return report;
}

void emit(Report& report, const Options& opt) {
  report.normalize();
  const std::string jsonl = report.to_jsonl();
  if (!opt.out.empty()) {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw ConfigInvalid("cannot write --out " + opt.out);
    file << jsonl;
  }
  std::cout << jsonl;
  std::istringstream summary(report.human_summary());
  for (std::string line; std::getline(summary, line);) std::cout << "# " << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke pairs of semidirect products: verification, double cosets, Hecke algebra, towers"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd, bool with_config) {
    if (with_config) {
      cmd->add_option("--config", opt.config, "pair configuration (JSON); default $HECKE_CONFIG_DIR/pair.json");
      cmd->add_option("--bound-cosets", opt.bound_cosets, "maximum number of left cosets per enumeration");
    }
    cmd->add_option("--out", opt.out, "also write the JSON-lines report to this file");
  };
  app.add_option("--config", opt.config, "pair configuration (JSON); default $HECKE_CONFIG_DIR/pair.json");
  app.add_option("--seed", opt.seed, "seed for random sampling");
  app.add_option("--bound-cosets", opt.bound_cosets, "maximum number of left cosets per enumeration");
  app.add_option("--out", opt.out, "also write the JSON-lines report to this file");

  Report report;
  std::function<Report()> run;

  auto* pair = app.add_subcommand("pair", "pair-level checks")->require_subcommand(1);
  auto* verify = pair->add_subcommand("verify", "Hecke-pair, reducedness, stabilizer and downward checks");
  add_common(verify, true);
  verify->add_option("--seed", opt.seed, "seed for random sampling");
  verify->callback([&] { run = [&] { return cmd_pair_verify(opt); }; });

  std::string element, elem_q, elem_n;
  auto* dcoset = app.add_subcommand("dcoset", "left cosets of H x H, L(x), L(x^-1), delta(x)");
  add_common(dcoset, true);
  dcoset->add_option("--element", element, R"(element as JSON, e.g. {"n":[0,0],"q":[[2,0],[0,1]]})");
  dcoset->add_option("--q", elem_q, "Q part as a matrix, e.g. [[2,0],[0,1]]");
  dcoset->add_option("--n", elem_n, "N part as a vector, e.g. [1/2,0]");
  dcoset->callback([&] { run = [&] { return cmd_dcoset(opt, element, elem_q, elem_n); }; });

  std::string f_path, g_path;
  auto* hecke = app.add_subcommand("hecke", "Hecke algebra operations")->require_subcommand(1);
  auto* mul = hecke->add_subcommand("mul", "f*g, f^*, g^* and an associativity check");
  add_common(mul, true);
  mul->add_option("--f", f_path, "Hecke element JSON file")->required();
  mul->add_option("--g", g_path, "Hecke element JSON file")->required();
  mul->callback([&] { run = [&] { return cmd_hecke_mul(opt, f_path, g_path); }; });

  std::string seeds;
  std::optional<std::size_t> stages;
  auto* tower = app.add_subcommand("tower", "finite-stage towers")->require_subcommand(1);
  auto* build = tower->add_subcommand("build", "nested stages (M/M_E) x| (R/R^E_F) with connecting maps");
  add_common(build, true);
  build->add_option("--seed", seeds, "seed Q-elements as a list of matrices, e.g. [[[2,0],[0,1]]]");
  build->add_option("--stages", stages, "number of seeded stages (default: one per seed)");
  build->callback([&] { run = [&] { return cmd_tower(opt, seeds, stages); }; });

  std::optional<long> gl2_p;
  std::string matrix;
  auto* gl2 = app.add_subcommand("gl2", "GL(2) decompositions")->require_subcommand(1);
  auto* decompose = gl2->add_subcommand("decompose", "g = t k with t lower triangular");
  add_common(decompose, false);
  decompose->add_option("--p", gl2_p, "prime; omit for the global decomposition");
  decompose->add_option("--matrix", matrix, "matrix, e.g. [[1,1/2],[0,1]]")->required();
  decompose->callback([&] { run = [&] { return cmd_gl2(gl2_p, matrix); }; });

  long quad_d = 0, quad_s = 0;
  auto* quad = app.add_subcommand("quad", "real quadratic units")->require_subcommand(1);
  auto* units = quad->add_subcommand("units", "fundamental unit, n_s and the unit image mod s");
  add_common(units, false);
  units->add_option("--d", quad_d, "square-free d > 1, d != 1 mod 4")->required();
  units->add_option("--mod", quad_s, "modulus s >= 2")->required();
  units->callback([&] { run = [&] { return cmd_quad(quad_d, quad_s); }; });

  long heis_s = 0, heis_z = 0, heis_w = 0;
  auto* heis = app.add_subcommand("heis", "Heisenberg family")->require_subcommand(1);
  auto* orbit = heis->add_subcommand("orbit", "orbit of (z, w) under r -> (z, w + r z) mod s");
  add_common(orbit, false);
  orbit->add_option("--mod", heis_s, "modulus s >= 1")->required();
  orbit->add_option("--z", heis_z, "z")->required();
  orbit->add_option("--w", heis_w, "w")->required();
  orbit->callback([&] { run = [&] { return cmd_heis(heis_s, heis_z, heis_w); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    report = run();
    emit(report, opt);
  } catch (const ConfigInvalid& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    // Inputs outside the domain of the requested operation.
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return report.exit_code();
}
