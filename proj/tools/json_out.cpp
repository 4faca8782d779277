#include "json_out.hpp"

#include <sstream>

namespace sailkit::cli {

json jint(const BigInt& x) {
  if (fits_i64(x)) return to_i64(x);
  return x.get_str();
}

json jints(const std::vector<BigInt>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(jint(x));
  return a;
}

json jrat(const BigRat& x) { return to_string(x); }

json jpoint(const IntPoint& p) {
  json a = json::array();
  for (auto c : p) a.push_back(c);
  return a;
}

json jpoints(const std::vector<IntPoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(jpoint(p));
  return a;
}

json jmatrix(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jints(m.row(i)));
  return a;
}

json jreal(const RealAlgebraic& a) {
  json coeffs = json::array();
  for (const auto& c : a.minpoly()) coeffs.push_back(c.get_str());
  return {{"minpoly", coeffs}, {"lo", jrat(a.lo())}, {"hi", jrat(a.hi())}, {"value_approx", a.approx()}};
}

json jpoly(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

json jfield(const FieldElem& e) { return {{"poly", jpoly(e.poly())}, {"value_approx", e.approx()}}; }

json jcf(const ContinuedFraction& cf) {
  return {{"head", jints(cf.head)}, {"period", jints(cf.period)}, {"text", cf.to_string()}};
}

json jlls(const LLSSequence& s) {
  return {{"lls", jints(s.head)}, {"period", jints(s.period)}, {"truncated", s.truncated}, {"text", s.to_string()}};
}

json jfacetype(const FaceType& t) { return {{"normal_form", jmatrix(t.form)}, {"distance", jint(t.distance)}}; }

json jsail(const Sail& s) {
  json faces = json::array();
  for (const auto& f : s.faces) {
    json jf = {{"vertices", f.vertices}, {"dim", f.dim}, {"normal", jpoint(f.normal)}, {"distance", jint(f.distance)}};
    if (f.dim == 1) jf["length"] = jint(f.length);
    else jf["area"] = jint(f.area);
    jf["normal_form"] = jmatrix(f.normal_form);
    faces.push_back(std::move(jf));
  }
  json out = {{"dim", s.dim},      {"window", s.window},          {"complete", s.complete},
              {"vertices", jpoints(s.vertices)}, {"faces", std::move(faces)}};
  if (s.dim == 2) out["lattice_points"] = jpoints(s.lattice_points);
  return out;
}

namespace {

bool is_flat(const json& v) {
  if (v.is_array()) {
    for (const auto& e : v)
      if (e.is_object()) return false;
    return true;
  }
  return !v.is_object();
}

void flatten(const json& v, const std::string& prefix, std::ostringstream& os) {
  if (is_flat(v)) {
    os << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return;
  }
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(e, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", os);
}

}  // namespace

std::string to_text(const json& result) {
  std::ostringstream os;
  flatten(result, "", os);
  return os.str();
}

}  // namespace sailkit::cli
