#include "lorentz/json_io.hpp"

#include <cstdio>

namespace lorentz {

void require_fields(const Json& j, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional) {
  if (!j.is_object()) fail("bad_schema", "expected a JSON object");
  for (const char* f : required)
    if (!j.contains(f)) fail("bad_schema", std::string("missing field \"") + f + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* f : required) known = known || key == f;
    for (const char* f : optional) known = known || key == f;
    if (!known) fail("bad_schema", "unknown field \"" + key + "\"");
  }
}

void require_schema_tag(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string() ||
      j["schema"].get<std::string>() != kSchema)
    fail("bad_schema", std::string("document must carry \"schema\": \"") + kSchema + "\"");
}

Int parse_int(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<unsigned long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Int x;
    if (s.empty() || mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
      fail("bad_schema", "malformed integer string \"" + s + "\"");
    return x;
  }
  fail("bad_schema", "expected an integer or a decimal string");
}

Rat parse_rat(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(parse_int(j));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(Json(s)));
    Int num = parse_int(Json(s.substr(0, slash)));
    Int den = parse_int(Json(s.substr(slash + 1)));
    if (den == 0) fail("bad_schema", "rational with zero denominator");
    return make_rat(num, den);
  }
  fail("bad_schema", "expected a rational as integer or \"p/q\" string");
}

IVec parse_ivec(const Json& j) {
  if (!j.is_array()) fail("bad_schema", "expected an array of integers");
  IVec v;
  for (const Json& x : j) v.push_back(parse_int(x));
  return v;
}

QVec parse_qvec(const Json& j) {
  if (!j.is_array()) fail("bad_schema", "expected an array of rationals");
  QVec v;
  for (const Json& x : j) v.push_back(parse_rat(x));
  return v;
}

IMat parse_imat(const Json& j) {
  if (!j.is_array() || j.empty()) fail("bad_schema", "expected a nonempty array of rows");
  IMat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    IVec row = parse_ivec(j[i]);
    if (row.size() != m.cols) fail("bad_schema", "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols; ++c) m(i, c) = row[c];
  }
  return m;
}

QMat parse_qmat(const Json& j) {
  if (!j.is_array() || j.empty()) fail("bad_schema", "expected a nonempty array of rows");
  QMat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    QVec row = parse_qvec(j[i]);
    if (row.size() != m.cols) fail("bad_schema", "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols; ++c) m(i, c) = row[c];
  }
  return m;
}

LatticePtr parse_lattice(const Json& j) {
  require_fields(j, {"gram"}, {"cone_ref"});
  IMat gram = parse_imat(j["gram"]);
  IVec cone_ref;
  if (j.contains("cone_ref")) cone_ref = parse_ivec(j["cone_ref"]);
  return Lattice::create(std::move(gram), std::move(cone_ref));
}

HalphenModel parse_halphen_model(const Json& j) {
  if (!j.contains("m")) fail("bad_schema", "missing field \"m\"");
  const Json& m = j["m"];
  if (!m.is_number_unsigned() && !m.is_number_integer())
    fail("bad_schema", "\"m\" must be a positive integer");
  const long long mval = m.get<long long>();
  if (mval <= 0) fail("bad_schema", "\"m\" must be a positive integer");
  return HalphenModel::create(static_cast<unsigned>(mval));
}

FiberConfig parse_fiber_config(const Json& j) {
  if (!j.contains("fibers")) fail("bad_schema", "missing field \"fibers\"");
  const Json& fibers = j["fibers"];
  if (!fibers.is_array()) fail("bad_schema", "\"fibers\" must be an array");
  FiberConfig config;
  for (const Json& fj : fibers) {
    require_fields(fj, {"components"}, {"multiple"});
    Fiber f;
    if (fj.contains("multiple")) {
      if (!fj["multiple"].is_boolean()) fail("bad_schema", "\"multiple\" must be a boolean");
      f.multiple = fj["multiple"].get<bool>();
    }
    if (!fj["components"].is_array()) fail("bad_schema", "\"components\" must be an array");
    for (const Json& cj : fj["components"]) {
      require_fields(cj, {"e", "a"});
      f.components.push_back(FiberComponent{parse_ivec(cj["e"]), parse_int(cj["a"])});
    }
    config.fibers.push_back(std::move(f));
  }
  return config;
}

Json emit_int(const Int& x) { return Json(x.get_str()); }

Json emit_rat(const Rat& x) {
  if (x.get_den() == 1) return Json(x.get_num().get_str());
  return Json(x.get_num().get_str() + "/" + x.get_den().get_str());
}

Json emit_ivec(const IVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(emit_int(x));
  return a;
}

Json emit_qvec(const QVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(emit_rat(x));
  return a;
}

Json emit_imat(const IMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(emit_int(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

Json emit_qmat(const QMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(emit_rat(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

Json emit_poly(const std::vector<Int>& p) { return emit_ivec(p); }

Json emit_poly(const std::vector<Rat>& p) {
  QVec v(p.begin(), p.end());
  return emit_qvec(v);
}

Json emit_lattice(const Lattice& lat) {
  Json j;
  j["gram"] = emit_imat(lat.gram);
  j["cone_ref"] = emit_ivec(lat.cone_ref);
  return j;
}

Json emit_classification(const Classification& c) {
  Json j;
  j["schema"] = kSchema;
  j["tag"] = to_string(c.tag);
  if (c.tag == IsoType::Elliptic) j["order"] = c.order;
  if (c.tag == IsoType::Parabolic) {
    j["theta"] = emit_ivec(c.theta);
    j["translation_exponent"] = c.translation_exponent;
  }
  j["char_poly"] = emit_poly(c.char_poly);
  if (c.tag == IsoType::Hyperbolic) j["spectral_radius_approx"] = c.spectral_radius_approx;
  return j;
}

Json emit_growth_report(const GrowthReport& r) {
  Json j;
  j["schema"] = kSchema;
  Json samples = Json::array();
  for (const GrowthSample& s : r.samples) {
    Json row;
    row["n"] = s.n;
    row["norm"] = s.norm;
    samples.push_back(std::move(row));
  }
  j["samples"] = std::move(samples);
  j["fitted_exponent"] = r.fitted_exponent;
  j["fitted_class"] = to_string(r.fitted_class);
  return j;
}

Json emit_group_report(const GroupReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == GroupVerdict::HyperbolicFound) {
    j["witness_word"] = r.witness_word;
    j["witness_word_str"] = word_to_string(r.witness_word);
  }
  if (r.common_theta) j["common_theta"] = emit_ivec(*r.common_theta);
  j["translation_rank"] = r.translation_rank;
  j["finite_part_order_lower_bound"] = r.finite_part_order_lower_bound;
  Json kg = Json::array();
  for (const KernelElement& e : r.kernel_generators) {
    Json ej;
    ej["word"] = e.word;
    ej["word_str"] = word_to_string(e.word);
    ej["zeta"] = emit_qvec(e.zeta);
    kg.push_back(std::move(ej));
  }
  j["kernel_generators"] = std::move(kg);
  if (!r.inconsistency_hint.empty()) j["inconsistency_hint"] = r.inconsistency_hint;
  j["elements_explored"] = r.elements_explored;
  return j;
}

}  // namespace lorentz
