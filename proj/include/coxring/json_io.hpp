#pragma once

// JSON documents for the CLI. Group elements are ambient integer vectors and
// every group travels with its presentation.

#include "coxring/cox.hpp"
#include "coxring/pmline.hpp"
#include "coxring/veronese.hpp"
#include "json.hpp"

namespace coxring::io {

using nlohmann::json;

/// Malformed input document (missing key, wrong type).
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Int& x);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const std::vector<IntVector>& vs);
json to_json(const FgAbelianGroup& g);
json to_json(const GroupHom& h);
json to_json(const RationalCone& c);
json to_json(const GradedAlgebra& a);
json to_json(const CoxPresentation& p);
json to_json(const OrbitData& o);
json to_json(const SubalgebraGens& s, bool expand);
json to_json(const CurveDivisor& d);
json to_json(const GradedSection& s);

Int int_from(const json& j);
Rational rational_from(const json& j);
IntVector vector_from(const json& j);
IntMatrix matrix_from(const json& j);
std::vector<IntVector> vectors_from(const json& j);
FgAbelianGroup group_from(const json& j);
/// {"variables": [...], "invertible": [names]}
RingPtr ring_from(const json& j);
/// Ring plus {"group", "degrees", "relations"}; relations must be homogeneous.
GradedAlgebra algebra_from(const json& j);
/// {"target", "matrix"} with source `source`, or a full {"source", ...}.
GroupHom hom_from(const json& j, const FgAbelianGroup& source);
CoxInput cox_input_from(const json& j);
/// A CoxPresentation document or a bare algebra document.
CoxPresentation presentation_from(const json& j);
CurveModel curve_from(const json& points, const json& multiplicities);
GradedSection section_from(const json& j);
AffinePoint point_from(const json& j);
std::vector<Poly> polys_from(const RingPtr& ring, const json& j);

}  // namespace coxring::io
