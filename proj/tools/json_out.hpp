#pragma once

#include <json.hpp>

#include "sailkit/algebraic/algebraic.hpp"
#include "sailkit/contfrac/contfrac.hpp"
#include "sailkit/exact/number_field.hpp"
#include "sailkit/exact/real_algebraic.hpp"
#include "sailkit/klein/klein.hpp"
#include "sailkit/planar/angle.hpp"

namespace sailkit::cli {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones strings.
json jint(const BigInt& x);
json jints(const std::vector<BigInt>& xs);
json jrat(const BigRat& x);
json jpoint(const IntPoint& p);
json jpoints(const std::vector<IntPoint>& ps);
json jmatrix(const IntMatrix& m);
// {"minpoly": [...], "lo": "p/q", "hi": "p/q", "value_approx": x}
json jreal(const RealAlgebraic& a);
json jpoly(const Poly& p);
json jfield(const FieldElem& e);
json jcf(const ContinuedFraction& cf);
json jlls(const LLSSequence& s);
json jfacetype(const FaceType& t);
json jsail(const Sail& s);

// "key: value" lines, nested keys joined by dots.
std::string to_text(const json& result);

}  // namespace sailkit::cli
