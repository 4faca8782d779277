#include "cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

#include "json_out.hpp"
#include "sailkit/error.hpp"
#include "sailkit/intgeom/invariants.hpp"
#include "sailkit/jacobiperron/jacobiperron.hpp"
#include "sailkit/minkvor/minkvor.hpp"
#include "sailkit/stats/stats.hpp"

namespace sailkit::cli {

namespace {

constexpr const char* kSchema = "sailkit/1";

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::int64_t parse_i64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail("bad-" + what, "cannot read integer '" + s + "'");
}

IntPoint parse_point(const std::string& s) {
  IntPoint p;
  for (const auto& t : split(s, ',')) p.push_back(parse_i64(t, "point"));
  if (p.size() < 2 || p.size() > 3) fail("bad-point", "expected 2 or 3 coordinates in '" + s + "'");
  return p;
}

std::vector<IntPoint> parse_points(const std::string& s) {
  std::vector<IntPoint> out;
  for (const auto& t : split(s, ';'))
    if (!t.empty()) out.push_back(parse_point(t));
  return out;
}

bool has_letter(const std::string& s) {
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c))) return true;
  return false;
}

// Root of a polynomial by ascending index; negative indices count from the
// largest root.
RealAlgebraic pick_root(const std::string& poly, int index) {
  auto roots = RealAlgebraic::real_roots(parse_poly(poly));
  int n = static_cast<int>(roots.size());
  if (n == 0) fail("no-real-root", "'" + poly + "' has no real root");
  int i = index < 0 ? n + index : index;
  if (i < 0 || i >= n) fail("bad-root-index", "root index " + std::to_string(index) + " out of range for '" + poly + "'");
  return roots[static_cast<std::size_t>(i)];
}

// A rational "p/q" or a root of a polynomial.
RealAlgebraic parse_real(const std::string& text, int root) {
  return has_letter(text) ? pick_root(text, root) : RealAlgebraic(parse_rat(text));
}

ContinuedFraction parse_cf(std::string s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("bad-continued-fraction", "expected [a0;a1,...]");
  s = s.substr(1, s.size() - 2);
  ContinuedFraction cf;
  std::string per;
  if (auto open = s.find('('); open != std::string::npos) {
    auto close = s.find(')', open);
    if (close == std::string::npos || trim(s.substr(close + 1)) != "")
      fail("bad-continued-fraction", "the period must close the expansion");
    per = s.substr(open + 1, close - open - 1);
    s = s.substr(0, open);
  }
  for (char& c : s)
    if (c == ';') c = ',';
  for (const auto& t : split(s, ','))
    if (!t.empty()) cf.head.emplace_back(parse_i64(t, "continued-fraction"));
  if (!per.empty())
    for (const auto& t : split(per, ',')) cf.period.emplace_back(parse_i64(t, "continued-fraction"));
  validate(cf);
  return cf;
}

Parity parse_parity(const std::string& s) {
  if (s == "any") return Parity::any;
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  fail("bad-parity", "parity must be any, odd or even");
}

RayDir ray_of(const std::string& pt, const std::string& slope, int root, int slope_sign, const char* name) {
  if (!slope.empty()) return SlopeRay{parse_real(slope, root), slope_sign};
  if (pt.empty()) fail("missing-ray", std::string("--") + name + " or a slope is required");
  return parse_point(pt);
}

struct Args {
  std::string format = "json";
  bool json_flag = false, off_flag = false, text_flag = false;
  std::int64_t threads = 0;

  // shared
  std::int64_t window = 0;
  int root = -1;
  std::string field;

  // invariant
  std::string a, b, c, vertex = "0,0", point, subspace, simplex;
  int max_volume = 0;
  int cap = kEmptySimplexCap;

  // cf
  std::string value, parity = "any", cf_text, poly;
  std::size_t terms = 20;
  std::size_t convergents = 0;

  // angle
  std::string ray1, ray2, slope;
  int slope_sign = 1;

  // klein / mv / algebraic
  std::string generators, basis, matrix, signs;
  std::int64_t box = kDirichletBox;
  bool invariance = false;

  // markov
  std::vector<std::string> forms;
  std::int64_t bound = 0;

  // stats
  long k = 1;
  int digits = 30;
  long qmax = 0;
  int dim = 3;
  long gen_bound = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string points;
  long K = 0;

  // jp
  std::string y, z;
  std::size_t max_steps = kDefaultJPSteps;
  std::optional<std::size_t> reconstruct;
  bool require_verdict = false;
};

struct Output {
  json result = json::object();
  std::optional<std::string> off;
};

using Handler = std::function<void(const Args&, Output&)>;

json cone_json(const AlgebraicCone& cone) {
  json eig = json::array();
  for (const auto& e : cone.eigenvalues) eig.push_back(jreal(e));
  return {{"matrix", jmatrix(cone.matrix)},
          {"charpoly", jpoly(cone.charpoly)},
          {"eigenvalues", std::move(eig)},
          {"signs", cone.orthant_signs}};
}

json class_json(const FaceClass& c) {
  return {{"type", jfacetype(c.type)}, {"vertex_count", c.vertex_count}, {"representative", jpoints(c.representative)}};
}

AlgebraicCone select_cone(const IntMatrix& a, const std::string& signs) {
  auto cones = validate_matrix(a);
  if (signs.empty()) return cones.back();
  std::vector<int> want;
  for (const auto& t : split(signs, ',')) {
    if (t == "+" || t == "+1" || t == "1") want.push_back(1);
    else if (t == "-" || t == "-1") want.push_back(-1);
    else fail("bad-signs", "signs are a comma list of + and -");
  }
  for (const auto& c : cones)
    if (c.orthant_signs == want) return c;
  fail("bad-signs", "expected " + std::to_string(a.rows()) + " signs");
}

PlanarForm parse_form(const std::string& text, const FieldPtr& field) {
  auto parts = split(text, ',');
  if (parts.size() != 2) fail("bad-form", "a form is written 'a,b' for a x + b y");
  auto coeff = [&](const std::string& s) {
    if (field) return FieldElem(field, parse_poly(s)).to_real();
    return RealAlgebraic(parse_rat(s));
  };
  return {coeff(parts[0]), coeff(parts[1])};
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::input: return 2;
    case ErrorKind::resource_limit: return 3;
    case ErrorKind::inconclusive: return 4;
    case ErrorKind::internal: return 1;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args A;
  std::string command;
  Handler handler;

  CLI::App app{"Exact geometric continued fractions: sails, LLS sequences, statistics."};
  app.name("sailkit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", A.format, "Output format")->check(CLI::IsMember({"json", "off", "text"}));
  app.add_flag("--json", A.json_flag, "Shorthand for --format json");
  app.add_flag("--off", A.off_flag, "Shorthand for --format off");
  app.add_flag("--text", A.text_flag, "Shorthand for --format text");
  app.add_option("--threads", A.threads, "Worker threads (sets SAILKIT_THREADS)")->check(CLI::PositiveNumber);

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& full,
                  Handler h) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->callback([&command, &handler, full, h] {
      command = full;
      handler = h;
    });
    return sub;
  };

  // invariant
  auto* inv = app.add_subcommand("invariant", "Integer-geometry invariants");
  inv->require_subcommand(1);
  auto* inv_len = leaf(inv, "length", "Integer length of [A,B]", "invariant length", [](const Args& a, Output& o) {
    o.result["value"] = jint(int_length(parse_point(a.a), parse_point(a.b)));
  });
  inv_len->add_option("--a", A.a)->required();
  inv_len->add_option("--b", A.b)->required();
  auto* inv_sin = leaf(inv, "sine", "Integer sine of an angle", "invariant sine", [](const Args& a, Output& o) {
    o.result["value"] = jint(int_sine(parse_point(a.vertex), parse_point(a.ray1), parse_point(a.ray2)));
  });
  inv_sin->add_option("--vertex", A.vertex);
  inv_sin->add_option("--ray1", A.ray1, "Point on the first ray")->required();
  inv_sin->add_option("--ray2", A.ray2, "Point on the second ray")->required();
  auto* inv_area = leaf(inv, "area", "Integer area of triangle ABC", "invariant area", [](const Args& a, Output& o) {
    o.result["value"] = jint(int_area(parse_point(a.a), parse_point(a.b), parse_point(a.c)));
  });
  inv_area->add_option("--a", A.a)->required();
  inv_area->add_option("--b", A.b)->required();
  inv_area->add_option("--c", A.c)->required();
  auto* inv_dist =
      leaf(inv, "distance", "Integer distance to an affine subspace", "invariant distance", [](const Args& a, Output& o) {
        o.result["value"] = jint(int_distance(parse_point(a.point), parse_points(a.subspace)));
      });
  inv_dist->add_option("--point", A.point)->required();
  inv_dist->add_option("--subspace", A.subspace, "Points 'x,y;x,y' spanning the subspace")->required();
  auto* inv_simplex = leaf(inv, "simplex", "Emptiness, width and normal form of a lattice simplex", "invariant simplex",
                           [](const Args& a, Output& o) {
                             IntSimplex s{parse_points(a.simplex)};
                             validate_simplex(s);
                             o.result["dim"] = s.dim();
                             o.result["lattice_points"] = jpoints(lattice_points(s));
                             o.result["empty"] = is_empty(s);
                             if (s.dim() == s.ambient()) {
                               o.result["width"] = jint(lattice_width(s));
                               o.result["normal_form"] = jmatrix(simplex_normal_form(s));
                             }
                           });
  inv_simplex->add_option("--simplex", A.simplex, "Vertices 'x,y,z;...'")->required();

  auto* es = leaf(&app, "empty-simplices", "Empty lattice 3-simplices up to congruence", "empty-simplices",
                  [](const Args& a, Output& o) {
                    auto classes = enumerate_empty_simplices_3d(a.max_volume, a.cap);
                    json list = json::array();
                    bool width_one = true;
                    for (const auto& c : classes) {
                      width_one = width_one && c.width == 1;
                      list.push_back(
                          {{"normal_form", jmatrix(c.normal_form)}, {"volume", jint(c.volume)}, {"width", jint(c.width)}});
                    }
                    o.result["max_volume"] = a.max_volume;
                    o.result["count"] = classes.size();
                    o.result["all_width_one"] = width_one;
                    o.result["classes"] = std::move(list);
                  });
  es->add_option("--max-volume", A.max_volume)->required();
  es->add_option("--cap", A.cap, "Largest volume accepted");

  // cf
  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->require_subcommand(1);
  auto* cf_exp = leaf(cf, "expand", "Expand a rational or real algebraic number", "cf expand",
                      [](const Args& a, Output& o) {
                        RealAlgebraic x = parse_real(a.value, a.root);
                        o.result["value"] = jreal(x);
                        if (x.is_rational()) {
                          o.result.update(jcf(expand(x.rational_value(), parse_parity(a.parity))));
                        } else if (x.degree() == 2) {
                          o.result.update(jcf(expand_quadratic(x)));
                        } else {
                          ContinuedFraction c;
                          c.head = expand_prefix(x, a.terms);
                          o.result["head"] = jints(c.head);
                          o.result["period"] = json::array();
                          o.result["truncated"] = true;
                        }
                      });
  cf_exp->add_option("--value", A.value, "'p/q' or a polynomial whose root is expanded")->required();
  cf_exp->add_option("--root", A.root, "Root index, ascending; negative counts from the largest");
  cf_exp->add_option("--parity", A.parity, "any, odd or even (rationals)");
  cf_exp->add_option("--terms", A.terms, "Prefix length for cubic irrationals");
  auto* cf_eval = leaf(cf, "eval", "Value of [a0;a1,...] or [a0;(p1,...)]", "cf eval", [](const Args& a, Output& o) {
    ContinuedFraction c = parse_cf(a.cf_text);
    o.result.update(jcf(c));
    RealAlgebraic v = evaluate(c);
    o.result["value"] = jreal(v);
    if (v.is_rational()) o.result["rational"] = jrat(v.rational_value());
    if (a.convergents) {
      json conv = json::array();
      for (const auto& r : convergents(c, a.convergents)) conv.push_back(jrat(r));
      o.result["convergents"] = std::move(conv);
    }
  });
  cf_eval->add_option("--cf", A.cf_text)->required();
  cf_eval->add_option("--convergents", A.convergents, "Number of convergents to list");
  auto* cf_quad = leaf(cf, "quadratic", "Periodic expansion of a quadratic irrational", "cf quadratic",
                       [](const Args& a, Output& o) {
                         RealAlgebraic x = pick_root(a.poly, a.root);
                         o.result["value"] = jreal(x);
                         o.result.update(jcf(expand_quadratic(x)));
                       });
  cf_quad->add_option("--poly", A.poly, "Quadratic polynomial, e.g. 'x^2-2'")->required();
  cf_quad->add_option("--root", A.root, "Root index, ascending; negative counts from the largest");

  // angle
  auto* angle = app.add_subcommand("angle", "Integer angles");
  angle->require_subcommand(1);
  auto make_angle = [](const Args& a) {
    IntAngle g;
    g.vertex = parse_point(a.vertex);
    g.ray1 = ray_of(a.ray1, "", a.root, 1, "ray1");
    g.ray2 = ray_of(a.ray2, a.slope, a.root, a.slope_sign, "ray2");
    return g;
  };
  auto angle_opts = [&](CLI::App* s) {
    s->add_option("--vertex", A.vertex);
    s->add_option("--ray1", A.ray1, "Integer point on the first ray")->required();
    s->add_option("--ray2", A.ray2, "Integer point on the second ray");
    s->add_option("--slope", A.slope, "Second ray direction (1, s): 'p/q' or a polynomial with root s");
    s->add_option("--root", A.root, "Root index for --slope");
    s->add_option("--slope-sign", A.slope_sign, "Direction sign(1, s)")->check(CLI::IsMember({-1, 1}));
    s->add_option("--window", A.window, "Max-norm window for irrational rays");
  };
  auto win = [](const Args& a) { return a.window ? a.window : kDefaultAngleWindow; };
  angle_opts(leaf(angle, "lls", "LLS sequence", "angle lls",
                  [=](const Args& a, Output& o) { o.result = jlls(lls(make_angle(a), win(a))); }));
  angle_opts(leaf(angle, "itan", "Integer tangent", "angle itan", [=](const Args& a, Output& o) {
    RealAlgebraic t = itan(make_angle(a));
    o.result["itan"] = jreal(t);
    if (t.is_rational()) o.result["rational"] = jrat(t.rational_value());
  }));
  angle_opts(leaf(angle, "trig", "Integer sine, cosine and tangent", "angle trig", [=](const Args& a, Output& o) {
    IntAngle g = make_angle(a);
    o.result["isin"] = jint(isin(g));
    o.result["icos"] = jrat(icos(g));
    o.result["itan"] = jrat(itan(g).rational_value());
  }));
  angle_opts(leaf(angle, "sail", "Sail broken line", "angle sail", [=](const Args& a, Output& o) {
    BrokenLine b = angle_sail(make_angle(a), win(a));
    o.result["vertices"] = jpoints(b.vertices);
    o.result["lattice_points"] = jpoints(b.lattice_points);
    o.result["complete"] = b.complete;
  }));

  // klein
  auto* kl = leaf(&app, "klein", "Klein sail of a simplicial cone", "klein", [](const Args& a, Output& o) {
    Sail s = klein_sail(ConeSpec{parse_points(a.generators)}, a.window);
    o.result = jsail(s);
    o.off = to_off(s);
  });
  kl->add_option("--generators", A.generators, "Cone generators 'x,y,z;...'")->required();
  kl->add_option("--window", A.window, "Max-norm window (0: the fundamental parallelepiped)");

  // mv
  auto* mv = leaf(&app, "mv", "Minkowski-Voronoi staircase of a lattice", "mv", [](const Args& a, Output& o) {
    auto lat = make_sym_lattice(parse_points(a.basis), a.window);
    Staircase s = mv_sail(lat);
    json facets = json::array();
    for (const auto& f : s.facets) facets.push_back({{"minimum", f.minimum}, {"axis", f.axis}, {"nodes", f.nodes}});
    o.result["window"] = a.window;
    o.result["minima"] = jpoints(s.minima);
    o.result["nodes"] = jpoints(s.nodes);
    o.result["facets"] = std::move(facets);
  });
  mv->add_option("--basis", A.basis, "Lattice basis 'x,y;x,y'")->required();
  mv->add_option("--window", A.window)->required()->check(CLI::PositiveNumber);

  // algebraic
  auto* alg = leaf(&app, "algebraic", "Periodic sail of a totally real matrix", "algebraic",
                   [](const Args& a, Output& o) {
                     IntMatrix m = IntMatrix::parse(a.matrix);
                     AlgebraicCone cone = select_cone(m, a.signs);
                     DirichletGroup g = dirichlet_group(m, a.box);
                     Sail s = algebraic_sail(cone, a.window);
                     o.off = to_off(s);
                     o.result["cone"] = cone_json(cone);
                     json gens = json::array();
                     for (std::size_t i = 0; i < g.generators.size(); ++i)
                       gens.push_back({{"matrix", jmatrix(g.generators[i])}, {"coefficients", jints(g.coefficients[i])}});
                     o.result["dirichlet"] = {{"rank", g.rank},
                                              {"box", g.box},
                                              {"units_found", g.units_found},
                                              {"independence_certified", g.independence_certified},
                                              {"certified_bits", g.certified_bits},
                                              {"generators", std::move(gens)}};
                     o.result["sail"] = jsail(s);
                     TorusDecomposition td = fundamental_domain(cone, s, g);
                     json classes = json::array(), edges = json::array(), counts = json::array();
                     for (const auto& c : td.face_classes) classes.push_back(class_json(c));
                     for (const auto& c : td.edge_classes) edges.push_back(class_json(c));
                     for (const auto& t : td.type_counts)
                       counts.push_back(
                           {{"type", jfacetype(t.type)}, {"vertex_count", t.vertex_count}, {"multiplicity", t.multiplicity}});
                     o.result["domain"] = {{"vertices", td.vertices}, {"edges", td.edges},
                                           {"faces", td.faces},       {"euler", td.euler()},
                                           {"face_classes", classes}, {"edge_classes", edges},
                                           {"type_counts", counts}};
                     if (m.rows() == 2) o.result["lls_period"] = jints(sail_lls_period(cone, s, g.generators[0]));
                     ArnoldReport r = arnold_probe(td);
                     o.result["arnold"] = {{"applicable", r.applicable},
                                           {"has_triangle", r.has_triangle},
                                           {"has_distance_one", r.has_distance_one},
                                           {"has_distance_gt_one", r.has_distance_gt_one},
                                           {"triangles", r.triangles},
                                           {"quadrangles", r.quadrangles},
                                           {"other_polygons", r.other_polygons},
                                           {"only_quadrangles", r.only_quadrangles},
                                           {"note", r.note}};
                     if (a.invariance) {
                       InvarianceReport rep = check_invariance(cone, g, s.window);
                       o.result["invariance"] = {{"ok", rep.ok()},
                                                 {"faces_checked", rep.faces_checked},
                                                 {"faces_skipped", rep.faces_skipped},
                                                 {"vertices_checked", rep.vertices_checked},
                                                 {"failures", rep.failures}};
                       if (!rep.ok())
                         fail("invariance-failed", "sail is not invariant under the group", ErrorKind::internal);
                     }
                   });
  alg->add_option("--matrix", A.matrix, "Integer matrix 'a,b;c,d' or 'a,b,c;d,e,f;g,h,i'")->required();
  alg->add_option("--window", A.window, "Max-norm window (default 60)");
  alg->add_option("--signs", A.signs, "Cone as eigen-form signs, e.g. '+,-,+' (default all +)");
  alg->add_option("--box", A.box, "Coefficient box for the unit search");
  alg->add_flag("--check-invariance", A.invariance, "Verify the sail is mapped to itself at twice the window");

  auto* mk = leaf(&app, "markov", "Minimum of |L1 L2| over nonzero integer points", "markov",
                  [](const Args& a, Output& o) {
                    FieldPtr f = a.field.empty() ? nullptr : NumberField::make(pick_root(a.field, a.root));
                    if (a.forms.size() != 2) fail("bad-form", "exactly two --form options are required");
                    MarkovResult r = markov_minimum_2d(parse_form(a.forms[0], f), parse_form(a.forms[1], f), a.bound);
                    o.result["value"] = jreal(r.value);
                    o.result["witness"] = jpoint(r.witness);
                    o.result["brute_value"] = jreal(r.brute_value);
                    o.result["brute_witness"] = jpoint(r.brute_witness);
                    o.result["sail_vertices"] = r.sail_vertices;
                  });
  mk->add_option("--form", A.forms, "Form 'a,b' meaning a x + b y; give twice")->required();
  mk->add_option("--bound", A.bound, "Max-norm of the brute-force search")->required()->check(CLI::PositiveNumber);
  mk->add_option("--field", A.field, "Coefficients are polynomials in a root of this polynomial");
  mk->add_option("--root", A.root, "Root index for --field");

  // stats
  auto* st = app.add_subcommand("stats", "Gauss-Kuzmin statistics and face census");
  st->require_subcommand(1);
  auto* gk = leaf(st, "gk", "Gauss-Kuzmin probability of digit k", "stats gk", [](const Args& a, Output& o) {
    if (a.k < 1) fail("bad-digit", "k must be positive");
    o.result["k"] = a.k;
    o.result["ratio"] = jrat(gk_ratio(a.k));
    o.result["probability"] = gk_probability_decimal(a.k, a.digits);
    o.result["probability_approx"] = gk_probability(a.k);
  });
  gk->add_option("--k", A.k)->required();
  gk->add_option("--digits", A.digits, "Significant digits")->check(CLI::Range(1, 1000));
  auto* emp = leaf(st, "empirical", "Digit frequencies over reduced fractions", "stats empirical",
                   [](const Args& a, Output& o) {
                     DigitHistogram h = empirical_digits(a.qmax);
                     json cmp = json::array();
                     for (long k = 1; k <= 10; ++k)
                       cmp.push_back({{"k", k},
                                      {"count", h.counts[static_cast<std::size_t>(k)]},
                                      {"frequency_approx", h.frequency(k)},
                                      {"gk_approx", gk_probability(k)},
                                      {"deviation_approx", h.frequency(k) - gk_probability(k)}});
                     std::vector<std::uint64_t> counts(h.counts.begin() + 1, h.counts.end());
                     o.result["qmax"] = a.qmax;
                     o.result["source"] = h.source;
                     o.result["total"] = h.total;
                     o.result["overflow"] = h.overflow;
                     o.result["counts"] = counts;
                     o.result["comparison"] = std::move(cmp);
                   });
  emp->add_option("--qmax", A.qmax)->required()->check(CLI::PositiveNumber);
  auto* fc = leaf(st, "face-census", "Face types of Klein sails of random cones", "stats face-census",
                  [](const Args& a, Output& o) {
                    FaceCensus c = face_census(a.dim, a.gen_bound, a.samples, a.seed);
                    json entries = json::array();
                    for (const auto& e : c.entries)
                      entries.push_back({{"normal_form", jmatrix(e.normal_form)},
                                         {"vertex_count", e.vertex_count},
                                         {"distance_one", e.distance_one},
                                         {"distance_more", e.distance_more}});
                    o.result = {{"dim", c.dim},     {"gen_bound", c.gen_bound}, {"samples", c.samples},
                                {"seed", c.seed},   {"cones", c.cones},         {"skipped", c.skipped},
                                {"faces", c.faces}, {"faces_distance_one", c.faces_distance_one},
                                {"entries", std::move(entries)}};
                  });
  fc->add_option("--dim", A.dim)->check(CLI::IsMember({2, 3}));
  fc->add_option("--gen-bound", A.gen_bound)->required();
  fc->add_option("--samples", A.samples)->required();
  fc->add_option("--seed", A.seed)->required();
  auto* cr = leaf(st, "cross-ratio", "Cross-ratio of four points of the projective line", "stats cross-ratio",
                  [](const Args& a, Output& o) {
                    auto p = split(a.points, ',');
                    if (p.size() != 4) fail("bad-points", "expected four comma-separated points");
                    ExtRat r = cross_ratio(parse_ext_rat(p[0]), parse_ext_rat(p[1]), parse_ext_rat(p[2]),
                                           parse_ext_rat(p[3]));
                    o.result["value"] = r.to_string();
                  });
  cr->add_option("--points", A.points, "'a,b,c,d'; 'inf' is the point at infinity")->required();
  auto* tel = leaf(st, "telescoping", "Partial sums of the Gauss-Kuzmin logarithms", "stats telescoping",
                   [](const Args& a, Output& o) {
                     TelescopingResult t = telescoping_check(a.K);
                     o.result = {{"K", a.K},
                                 {"partial_sum_approx", t.partial_sum},
                                 {"residual_approx", t.residual},
                                 {"closed_form_approx", t.closed_form}};
                   });
  tel->add_option("--K", A.K)->required()->check(CLI::PositiveNumber);

  auto* jp = leaf(&app, "jp", "Jacobi-Perron expansion of (1, y, z)", "jp", [](const Args& a, Output& o) {
    JPExpansion e;
    if (a.field.empty()) {
      e = jp_expand(RealAlgebraic(parse_rat(a.y)), RealAlgebraic(parse_rat(a.z)), a.max_steps);
    } else {
      FieldPtr f = NumberField::make(pick_root(a.field, a.root));
      e = jp_expand(FieldElem(f, parse_poly(a.y)), FieldElem(f, parse_poly(a.z)), a.max_steps);
    }
    if (a.require_verdict && e.verdict == JPVerdict::inconclusive)
      fail("jp-inconclusive", "no termination or period within " + std::to_string(a.max_steps) + " steps",
           ErrorKind::inconclusive);
    json digits = json::array();
    for (const auto& [p, q] : e.digits) digits.push_back({jint(p), jint(q)});
    o.result["y"] = jfield(e.y);
    o.result["z"] = jfield(e.z);
    o.result["independent"] = e.independent;
    o.result["verdict"] = to_string(e.verdict);
    o.result["steps"] = e.digits.size();
    o.result["preperiod"] = e.preperiod;
    o.result["period"] = e.period;
    o.result["digits"] = std::move(digits);
    if (e.verdict == JPVerdict::terminated) {
      o.result["terminal_alpha"] = jfield(e.terminal_alpha);
      o.result["terminal_beta"] = jfield(e.terminal_beta);
    }
    if (a.reconstruct) {
      auto approx = jp_reconstruct(e, *a.reconstruct);
      o.result["reconstruction"] = {{"k", *a.reconstruct},
                                    {"y", jrat(approx.first)},
                                    {"z", jrat(approx.second)},
                                    {"error_bound_approx", jp_error_bound(e, approx).get_d()}};
    }
  });
  jp->add_option("--y", A.y, "Rational, or polynomial in the field generator with --field")->required();
  jp->add_option("--z", A.z)->required();
  jp->add_option("--field", A.field, "Polynomial whose root generates the field");
  jp->add_option("--root", A.root, "Root index for --field");
  jp->add_option("--max-steps", A.max_steps);
  jp->add_option("--reconstruct", A.reconstruct, "Approximation from the first k digits");
  jp->add_flag("--require-verdict", A.require_verdict, "Exit 4 when the expansion neither terminates nor repeats");

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sailkit: " << e.what() << "\n";
    return 2;
  }
  if (A.json_flag + A.off_flag + A.text_flag > 1) {
    err << "sailkit: choose one of --json, --off, --text\n";
    return 2;
  }
  if (A.json_flag) A.format = "json";
  if (A.off_flag) A.format = "off";
  if (A.text_flag) A.format = "text";
  if (A.threads > 0) setenv("SAILKIT_THREADS", std::to_string(A.threads).c_str(), 1);

  try {
    Output o;
    handler(A, o);
    if (A.format == "off") {
      if (!o.off) fail("off-unsupported", "OFF output is available for klein and algebraic");
      out << *o.off;
    } else if (A.format == "text") {
      out << to_text(o.result);
    } else {
      json doc = {{"schema", kSchema}, {"command", command}, {"result", std::move(o.result)}};
      out << doc.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "sailkit: error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "sailkit: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sailkit::cli
