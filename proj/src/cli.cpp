#include "lorentz/cli.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include "lorentz/json_io.hpp"

namespace lorentz {

namespace {

std::string fmt_double(double x, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json cmd_classify(const Json& j) {
  require_fields(j, {"schema", "lattice", "matrix"});
  LatticePtr lat = parse_lattice(j["lattice"]);
  Isometry iso = Isometry::make(lat, parse_imat(j["matrix"]));
  return emit_classification(classify(iso));
}

void cmd_growth(const Json& j, std::ostream& out, const std::string& format) {
  require_fields(j, {"schema", "lattice", "matrix", "n_max"});
  LatticePtr lat = parse_lattice(j["lattice"]);
  Isometry iso = Isometry::make(lat, parse_imat(j["matrix"]));
  const Json& nj = j["n_max"];
  if (!nj.is_number_integer() && !nj.is_number_unsigned())
    fail("bad_schema", "\"n_max\" must be an integer");
  const long long n_max = nj.get<long long>();
  if (n_max < 8) fail("bad_n_max", "growth probe needs n_max >= 8");
  GrowthReport rep = growth_probe(iso, static_cast<unsigned long>(n_max));
  if (format == "json") {
    print_json(out, emit_growth_report(rep));
    return;
  }
  out << "n,norm\n";
  for (const GrowthSample& s : rep.samples)
    out << s.n << "," << fmt_double(s.norm) << "\n";
  out << "fitted_exponent," << fmt_double(rep.fitted_exponent, "%.6g") << "\n";
  out << "fitted_class," << to_string(rep.fitted_class) << "\n";
}

TranslationFrame parse_frame(const LatticePtr& lat, const Json& j) {
  require_fields(j, {"theta", "eta"});
  return TranslationFrame::create(lat, parse_ivec(j["theta"]), parse_ivec(j["eta"]));
}

Json cmd_translate(const Json& j) {
  require_fields(j, {"schema", "lattice", "frame", "zeta"});
  LatticePtr lat = parse_lattice(j["lattice"]);
  TranslationFrame frame = parse_frame(lat, j["frame"]);
  Translation t = make_translation(frame, parse_qvec(j["zeta"]));
  Json out;
  out["schema"] = kSchema;
  out["matrix"] = emit_qmat(t.matrix);
  out["integral"] = t.integral;
  out["zeta"] = emit_qvec(t.zeta);
  return out;
}

Json cmd_wazomba(const Json& j) {
  require_fields(j, {"schema", "lattice", "u", "v"});
  LatticePtr lat = parse_lattice(j["lattice"]);
  auto parse_translation = [&](const Json& tj) {
    require_fields(tj, {"frame", "zeta"});
    TranslationFrame frame = parse_frame(lat, tj["frame"]);
    return make_translation(frame, parse_qvec(tj["zeta"]));
  };
  Translation u = parse_translation(j["u"]);
  Translation v = parse_translation(j["v"]);
  HyperbolicWitness w = hyperbolic_from_pair(u, v);
  Json out;
  out["schema"] = kSchema;
  out["choice"] = w.used_inverse ? "u_inv_v" : "uv";
  out["matrix"] = emit_qmat(w.matrix);
  out["char_poly"] = emit_poly(w.char_poly);
  out["spectral_radius_approx"] = w.spectral_radius_approx;
  return out;
}

Json cmd_group(const Json& j) {
  require_fields(j, {"schema", "lattice", "generators", "word_bound"});
  GroupSpec spec;
  spec.lat = parse_lattice(j["lattice"]);
  if (!j["generators"].is_array()) fail("bad_schema", "\"generators\" must be an array");
  for (const Json& g : j["generators"]) spec.generators.push_back(parse_imat(g));
  const Json& wb = j["word_bound"];
  if (!wb.is_number_integer() && !wb.is_number_unsigned())
    fail("bad_schema", "\"word_bound\" must be an integer");
  const long long bound = wb.get<long long>();
  if (bound < 1) fail("bad_schema", "\"word_bound\" must be positive");
  spec.word_bound = static_cast<unsigned>(bound);
  return emit_group_report(explore(spec));
}

Json cmd_halphen_rank(const Json& j) {
  require_fields(j, {"schema", "m", "fibers"});
  HalphenModel model = parse_halphen_model(j);
  RankPair rk = translation_group_rank(model, parse_fiber_config(j));
  Json out;
  out["schema"] = kSchema;
  out["rkN"] = rk.rk_n;
  out["rkG"] = rk.rk_g;
  return out;
}

Json cmd_halphen_gen(const Json& j) {
  require_fields(j, {"schema", "m", "fibers"});
  HalphenModel model = parse_halphen_model(j);
  GeneratorBasis basis = generator_basis(model, parse_fiber_config(j));
  Json out;
  out["schema"] = kSchema;
  out["m"] = model.m;
  out["rkG"] = basis.generators.size();
  if (!basis.notice.empty()) out["notice"] = basis.notice;
  Json alphas = Json::array(), gens = Json::array();
  for (const AutGenerator& g : basis.generators) {
    alphas.push_back(emit_ivec(g.alpha));
    // each generator is a complete `classify`/`growth` input document
    Json doc;
    doc["schema"] = kSchema;
    doc["lattice"] = emit_lattice(*model.lat);
    doc["matrix"] = emit_imat(g.matrix.mat);
    gens.push_back(std::move(doc));
  }
  out["alphas"] = std::move(alphas);
  out["generators"] = std::move(gens);
  return out;
}

Json cmd_halphen_crucial(const Json& j) {
  require_fields(j, {"schema", "m", "fibers", "D"});
  HalphenModel model = parse_halphen_model(j);
  CrucialSolution sol = crucial_solver(model, parse_fiber_config(j), parse_ivec(j["D"]));
  Json out;
  out["schema"] = kSchema;
  if (!sol.n.fits_slong_p()) fail("internal", "N does not fit a JSON number");
  out["N"] = sol.n.get_si();
  out["S"] = emit_ivec(sol.s);
  out["S_coeffs"] = emit_ivec(sol.coeffs);
  return out;
}

Json cmd_validate_config(const Json& j) {
  require_fields(j, {"schema", "m", "fibers"});
  HalphenModel model = parse_halphen_model(j);
  FiberConfig config = parse_fiber_config(j);
  validate_config(model, config);
  RankPair rk = translation_group_rank(model, config);
  Json out;
  out["schema"] = kSchema;
  out["valid"] = true;
  out["sum_mu_minus_one"] = config.sum_mu_minus_one();
  out["rkN"] = rk.rk_n;
  out["rkG"] = rk.rk_g;
  return out;
}

}  // namespace

int run_command(const std::string& subcommand, std::istream& in, std::ostream& out,
                const std::string& format) {
  try {
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      fail("bad_json", e.what());
    }
    require_schema_tag(j);

    if (subcommand == "classify") print_json(out, cmd_classify(j));
    else if (subcommand == "growth") cmd_growth(j, out, format);
    else if (subcommand == "translate") print_json(out, cmd_translate(j));
    else if (subcommand == "wazomba") print_json(out, cmd_wazomba(j));
    else if (subcommand == "group") print_json(out, cmd_group(j));
    else if (subcommand == "halphen-rank") print_json(out, cmd_halphen_rank(j));
    else if (subcommand == "halphen-gen") print_json(out, cmd_halphen_gen(j));
    else if (subcommand == "halphen-crucial") print_json(out, cmd_halphen_crucial(j));
    else if (subcommand == "validate-config") print_json(out, cmd_validate_config(j));
    else fail("unknown_subcommand", "unknown subcommand \"" + subcommand + "\"");
    return 0;
  } catch (const Error& e) {
    Json err;
    err["error"] = e.code;
    err["detail"] = e.what();
    print_json(out, err);
    return (e.code == "bad_schema" || e.code == "bad_json") ? 2 : 1;
  }
}

}  // namespace lorentz
