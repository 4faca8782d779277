#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sailkit/algebraic/algebraic.hpp"
#include "sailkit/error.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

namespace {

IntPoint map_point(const IntMatrix& m, const IntPoint& p) {
  std::vector<BigInt> r = m.apply(to_big(p));
  IntPoint out;
  for (const auto& x : r) out.push_back(to_i64(x));
  return out;
}

std::vector<IntPoint> sorted_points(std::vector<IntPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::int64_t max_norm(const std::vector<IntPoint>& pts) {
  std::int64_t m = 0;
  for (const auto& p : pts)
    for (auto c : p) m = std::max<std::int64_t>(m, std::abs(c));
  return m;
}

std::vector<double> unit_log(const AlgebraicCone& cone, const IntMatrix& g) {
  std::vector<double> l;
  for (const auto& mu : unit_eigenvalues(cone, g)) l.push_back(std::log(std::abs(mu.approx())));
  return l;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Sail algebraic_sail(const AlgebraicCone& cone, std::int64_t window) {
  std::size_t n = cone.matrix.rows();
  if (window == 0) window = n == 2 ? kDefaultAlgebraicWindow2d : kDefaultAlgebraicWindow3d;
  if (window < 1) fail("bad-window", "window must be positive");
  Sail s = window_sail(cone.form_cone(), window);
  if (s.faces.empty()) fail("window-too-small", "no sail face is certified inside window " + std::to_string(window));
  return s;
}

InvarianceReport check_invariance(const AlgebraicCone& cone, const DirichletGroup& g, std::int64_t window) {
  InvarianceReport rep;
  Sail sail = algebraic_sail(cone, window);
  FormCone fc = cone.form_cone();
  std::size_t n = fc.dim();
  std::vector<std::vector<double>> rays(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : fc.rays[j]) rays[j].push_back(e.approx());

  std::vector<IntMatrix> moves{cone.matrix};
  for (const auto& m : g.generators) {
    moves.push_back(m);
    moves.push_back(adjugate(m));
  }
  std::map<std::vector<int>, std::set<std::vector<IntPoint>>> big_faces;
  std::map<std::vector<int>, std::set<IntPoint>> big_vertices;
  const double limit = 2.0 * static_cast<double>(window);
  for (const auto& m : moves) {
    AlgebraicCone img = image_cone(cone, m);
    if (!big_faces.count(img.orthant_signs)) {
      Sail big = algebraic_sail(img, 2 * window);
      auto& fs = big_faces[img.orthant_signs];
      for (const auto& f : face_point_lists(big)) fs.insert(sorted_points(f));
      big_vertices[img.orthant_signs] = {big.vertices.begin(), big.vertices.end()};
    }
    const auto& fs = big_faces[img.orthant_signs];
    const auto& vs = big_vertices[img.orthant_signs];
    std::set<IntPoint> checked_vertices;
    for (const auto& face : sail.faces) {
      // Corners of the cut-off cap, c ray_j / (n . ray_j), mapped by m.
      double worst = 0;
      for (std::size_t j = 0; j < n; ++j) {
        double nr = 0;
        for (std::size_t k = 0; k < n; ++k) nr += static_cast<double>(face.normal[k]) * rays[j][k];
        double scale = face.distance.get_d() / nr;
        for (std::size_t r = 0; r < n; ++r) {
          double v = 0;
          for (std::size_t k = 0; k < n; ++k) v += m(r, k).get_d() * rays[j][k] * scale;
          worst = std::max(worst, std::abs(v));
        }
      }
      if (worst > limit * (1 - 1e-9)) {
        ++rep.faces_skipped;
        continue;
      }
      ++rep.faces_checked;
      std::vector<IntPoint> image;
      for (auto i : face.vertices) image.push_back(map_point(m, sail.vertices[i]));
      if (!fs.count(sorted_points(image)))
        rep.failures.push_back("image of a face under " + m.to_string() + " is not a face at window " +
                               std::to_string(2 * window));
      for (auto i : face.vertices) {
        if (!checked_vertices.insert(sail.vertices[i]).second) continue;
        ++rep.vertices_checked;
        if (!vs.count(map_point(m, sail.vertices[i])))
          rep.failures.push_back("image of a vertex under " + m.to_string() + " is not a vertex");
      }
    }
  }
  return rep;
}

namespace {

struct Cell {
  std::vector<IntPoint> points;  // boundary order
  std::vector<IntPoint> key;     // sorted
  std::vector<double> coords;    // position in the unit-log basis
  BigInt distance;
  IntMatrix normal_form;
};

struct Grouping {
  std::vector<std::vector<std::size_t>> classes;  // cell indices, first = seed
};

class WordCache {
 public:
  explicit WordCache(const DirichletGroup& g) : g_(g) {}
  const IntMatrix& word(const std::vector<long>& k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    std::size_t n = g_.base.rows();
    IntMatrix w = IntMatrix::identity(n);
    for (std::size_t b = 0; b < k.size(); ++b) {
      IntMatrix base = k[b] < 0 ? adjugate(g_.generators[b]) : g_.generators[b];
      for (long e = std::labs(k[b]); e > 0; --e) w = w * base;
    }
    return cache_.emplace(k, std::move(w)).first->second;
  }

 private:
  const DirichletGroup& g_;
  std::map<std::vector<long>, IntMatrix> cache_;
};

Grouping group_cells(const std::vector<Cell>& cells, WordCache& words) {
  Grouping gr;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    bool placed = false;
    for (auto& cls : gr.classes) {
      const Cell& seed = cells[cls[0]];
      if (seed.points.size() != cells[c].points.size()) continue;
      std::vector<long> k;
      bool near = true;
      for (std::size_t b = 0; b < seed.coords.size(); ++b) {
        double d = cells[c].coords[b] - seed.coords[b];
        long r = std::lround(d);
        near = near && std::abs(d - static_cast<double>(r)) < 1e-6;
        k.push_back(r);
      }
      if (!near) continue;
      const IntMatrix& w = words.word(k);
      std::vector<IntPoint> img;
      for (const auto& p : seed.points) img.push_back(map_point(w, p));
      if (sorted_points(img) != cells[c].key) continue;
      cls.push_back(c);
      placed = true;
      break;
    }
    if (!placed) gr.classes.push_back({c});
  }
  return gr;
}

}  // namespace

TorusDecomposition fundamental_domain(const AlgebraicCone& cone, const Sail& sail, const DirichletGroup& g) {
  const std::size_t n = cone.matrix.rows();
  if (sail.faces.empty()) fail("incomplete-orbit-coverage", "the sail has no certified faces", ErrorKind::resource_limit);
  if (g.generators.size() != n - 1) fail("bad-group", "group rank does not match the dimension");

  std::vector<std::vector<double>> basis;
  for (const auto& m : g.generators) basis.push_back(unit_log(cone, m));
  std::vector<std::vector<double>> gram(basis.size(), std::vector<double>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = dot(basis[i], basis[j]);
  auto coords_of = [&](const std::vector<IntPoint>& pts) {
    IntPoint s(n, 0);
    for (const auto& p : pts)
      for (std::size_t k = 0; k < n; ++k) s[k] += p[k];
    std::vector<double> l;
    for (const auto& f : cone.eigen_forms) {
      double v = 0;
      for (std::size_t k = 0; k < n; ++k) v += f.approx[k] * static_cast<double>(s[k]);
      l.push_back(std::log(std::abs(v)));
    }
    std::vector<double> r;
    for (const auto& b : basis) r.push_back(dot(b, l));
    if (basis.size() == 1) return std::vector<double>{r[0] / gram[0][0]};
    double dt = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
    return std::vector<double>{(r[0] * gram[1][1] - r[1] * gram[0][1]) / dt,
                               (gram[0][0] * r[1] - gram[1][0] * r[0]) / dt};
  };
  auto make_cell = [&](std::vector<IntPoint> pts) {
    Cell c;
    c.key = sorted_points(pts);
    c.coords = coords_of(pts);
    c.points = std::move(pts);
    return c;
  };

  std::vector<Cell> faces, edges, verts;
  std::map<std::vector<IntPoint>, int> edge_faces;
  for (const auto& f : sail.faces) {
    std::vector<IntPoint> pts;
    for (auto i : f.vertices) pts.push_back(sail.vertices[i]);
    Cell c = make_cell(pts);
    c.distance = f.distance;
    c.normal_form = f.normal_form;
    if (n == 3)
      for (std::size_t i = 0; i < pts.size(); ++i) ++edge_faces[sorted_points({pts[i], pts[(i + 1) % pts.size()]})];
    faces.push_back(std::move(c));
  }
  std::map<IntPoint, int> vertex_degree;  // 2D: segments at the vertex
  std::map<IntPoint, bool> closed;
  if (n == 3) {
    for (const auto& [e, cnt] : edge_faces) {
      for (const auto& p : e) {
        auto [it, fresh] = closed.emplace(p, true);
        it->second = it->second && cnt == 2;
        (void)fresh;
      }
      Cell c = make_cell(e);
      c.distance = int_distance(IntPoint(n, 0), e);
      edges.push_back(std::move(c));
    }
  } else {
    for (const auto& f : faces)
      for (const auto& p : f.points) ++vertex_degree[p];
    for (const auto& [p, d] : vertex_degree) closed[p] = d == 2;
  }
  for (const auto& p : sail.vertices) verts.push_back(make_cell({p}));

  WordCache words(g);
  Grouping fg = group_cells(faces, words);
  Grouping eg = group_cells(edges, words);
  Grouping vg = group_cells(verts, words);

  for (const auto& cls : fg.classes) {
    bool covered = std::any_of(cls.begin(), cls.end(), [&](std::size_t c) {
      const auto& pts = faces[c].points;
      return std::all_of(pts.begin(), pts.end(), [&](const IntPoint& p) { return closed[p]; });
    });
    if (!covered)
      fail("incomplete-orbit-coverage",
           "a face orbit has no member with a fully certified neighbourhood at window " + std::to_string(sail.window),
           ErrorKind::resource_limit);
  }

  auto classes_of = [&](const Grouping& gr, const std::vector<Cell>& cells, bool top) {
    std::vector<FaceClass> out;
    for (const auto& cls : gr.classes) {
      std::size_t best = cls[0];
      auto rank = [&](std::size_t c) { return std::make_pair(max_norm(cells[c].points), cells[c].key); };
      for (auto c : cls)
        if (rank(c) < rank(best)) best = c;
      FaceClass fc;
      const Cell& b = cells[best];
      fc.representative = b.points;
      fc.vertex_count = b.points.size();
      if (top) fc.type = FaceType{b.normal_form, b.distance};
      else fc.type = face_type(b.points, b.distance);
      out.push_back(std::move(fc));
    }
    std::sort(out.begin(), out.end(), [](const FaceClass& x, const FaceClass& y) {
      if (!(x.type == y.type)) return x.type < y.type;
      return x.representative < y.representative;
    });
    return out;
  };

  TorusDecomposition td;
  td.dim = static_cast<int>(n);
  td.face_classes = classes_of(fg, faces, true);
  td.vertices = vg.classes.size();
  if (n == 3) {
    td.edge_classes = classes_of(eg, edges, false);
    td.edges = eg.classes.size();
    td.faces = fg.classes.size();
  } else {
    td.edges = fg.classes.size();
    td.faces = 0;
  }
  std::map<std::pair<FaceType, std::size_t>, std::size_t> counts;
  for (const auto& fc : td.face_classes) ++counts[{fc.type, fc.vertex_count}];
  for (const auto& [k, m] : counts) td.type_counts.push_back({k.first, k.second, m});
  return td;
}

std::vector<BigInt> sail_lls_period(const AlgebraicCone& cone, const Sail& sail, const IntMatrix& g) {
  if (sail.dim != 2) fail("bad-dimension", "LLS periods are defined for planar sails");
  (void)cone;
  const auto& v = sail.vertices;
  std::map<IntPoint, std::size_t> index;
  for (std::size_t i = 0; i < v.size(); ++i) index[v[i]] = i;
  std::set<std::pair<std::size_t, std::size_t>> seg;
  for (const auto& f : sail.faces) seg.insert({f.vertices[0], f.vertices[1]});
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    auto it = index.find(map_point(g, v[i]));
    if (it == index.end() || it->second == i) continue;
    std::size_t lo = std::min(i, it->second), hi = std::max(i, it->second);
    bool chain = true;
    for (std::size_t k = lo - 1; k < hi && chain; ++k) chain = seg.count({k, k + 1}) > 0;
    if (!chain || lo == 0) continue;
    std::vector<BigInt> period;
    for (std::size_t k = lo; k < hi; ++k) {
      period.push_back(int_sine(v[k], v[k - 1], v[k + 1]));
      period.push_back(int_length(v[k], v[k + 1]));
    }
    return period;
  }
  fail("window-too-small", "no vertex and its translate are joined by certified edges", ErrorKind::resource_limit);
}

ArnoldReport arnold_probe(const TorusDecomposition& td) {
  ArnoldReport r;
  if (td.face_classes.empty()) fail("empty-decomposition", "no face classes to probe");
  r.applicable = td.dim == 3;
  if (!r.applicable) {
    r.note = "n=2: the conjecture concerns two-dimensional sails of three-dimensional cones";
    return r;
  }
  for (const auto& fc : td.face_classes) {
    if (fc.vertex_count == 3) ++r.triangles;
    else if (fc.vertex_count == 4) ++r.quadrangles;
    else ++r.other_polygons;
    if (fc.type.distance == 1) r.has_distance_one = true;
    else r.has_distance_gt_one = true;
  }
  r.has_triangle = r.triangles > 0;
  r.only_quadrangles = r.triangles == 0 && r.other_polygons == 0;
  r.note = "evidence from one fundamental domain";
  return r;
}

}  // namespace sailkit
