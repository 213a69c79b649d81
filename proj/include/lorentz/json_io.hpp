#pragma once

#include <json.hpp>

#include "lorentz/group.hpp"
#include "lorentz/halphen.hpp"
#include "lorentz/translation.hpp"

namespace lorentz {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lorentz-aut/1";

// Schema-strict parsing: every helper rejects unknown fields and wrong
// types with Error("bad_schema", ...). Integer entries may be JSON integers
// or decimal strings; rationals additionally accept "p/q".
void require_fields(const Json& j, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {});
void require_schema_tag(const Json& j);

Int parse_int(const Json& j);
Rat parse_rat(const Json& j);
IVec parse_ivec(const Json& j);
QVec parse_qvec(const Json& j);
IMat parse_imat(const Json& j);
QMat parse_qmat(const Json& j);
LatticePtr parse_lattice(const Json& j);
HalphenModel parse_halphen_model(const Json& j);  // reads "m"
FiberConfig parse_fiber_config(const Json& j);    // reads "fibers"

Json emit_int(const Int& x);
Json emit_rat(const Rat& x);
Json emit_ivec(const IVec& v);
Json emit_qvec(const QVec& v);
Json emit_imat(const IMat& m);
Json emit_qmat(const QMat& m);
Json emit_poly(const std::vector<Int>& p);
Json emit_poly(const std::vector<Rat>& p);
Json emit_lattice(const Lattice& lat);
Json emit_classification(const Classification& c);
Json emit_growth_report(const GrowthReport& r);
Json emit_group_report(const GroupReport& r);

}  // namespace lorentz
