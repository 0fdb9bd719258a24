#include "sphedra/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "sphedra/errors.hpp"

namespace sphedra {

namespace {

// Signed volume of the parallelepiped (b-a, c-a, d-a): positive when d lies
// on the side the right-hand normal of (a,b,c) points away from.
double orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return dot(cross(b - a, c - a), d - a);
}

struct Tri {
  int a, b, c;
};

// Spread-maximizing starting tetrahedron: farthest pair, then farthest from
// their line, then farthest from that plane. Returned indices satisfy
// orient(t0,t1,t2,t3) < 0, which makes the canonical four faces outward.
std::array<int, 4> initial_tetrahedron(std::span<const Vec3> pts) {
  const int n = static_cast<int>(pts.size());
  int i0 = 0, i1 = 1;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = squared_norm(pts[i] - pts[j]);
      if (d > best) {
        best = d;
        i0 = i;
        i1 = j;
      }
    }
  }

  const Vec3 axis = pts[i1] - pts[i0];
  int i2 = -1;
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1) continue;
    const double d = squared_norm(cross(axis, pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0 || std::sqrt(best) / norm(axis) <= kOrientEps) {
    throw DegenerateInput("input points are collinear within tolerance");
  }

  int i3 = -1;
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2) continue;
    const double d = std::abs(orient(pts[i0], pts[i1], pts[i2], pts[i]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0 || best <= kOrientEps) {
    throw DegenerateInput("input points are coplanar within tolerance");
  }

  if (orient(pts[i0], pts[i1], pts[i2], pts[i3]) > 0.0) std::swap(i2, i3);
  return {i0, i1, i2, i3};
}

// Merge groups of adjacent coplanar triangles and return each group's
// boundary as a vertex cycle, preserving the outward-CCW direction.
std::vector<std::vector<int>> merge_coplanar(const std::vector<Tri>& tris,
                                             std::span<const Vec3> pts) {
  const int m = static_cast<int>(tris.size());

  std::vector<Vec3> normals(m);
  for (int i = 0; i < m; ++i) {
    normals[i] = normalized(
        cross(pts[tris[i].b] - pts[tris[i].a], pts[tris[i].c] - pts[tris[i].a]));
  }

  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Adjacency through shared undirected edges; union when the dihedral is
  // flat. |n1 x n2| = sin(angle), which resolves 1e-8 rad where a dot
  // product cannot.
  std::map<std::pair<int, int>, int> edge_owner;
  for (int i = 0; i < m; ++i) {
    const int vs[3] = {tris[i].a, tris[i].b, tris[i].c};
    for (int k = 0; k < 3; ++k) {
      const int u = vs[k], v = vs[(k + 1) % 3];
      const auto key = std::minmax(u, v);
      auto [it, inserted] = edge_owner.try_emplace(key, i);
      if (!inserted) {
        const int j = it->second;
        if (dot(normals[i], normals[j]) > 0.0 &&
            norm(cross(normals[i], normals[j])) < kCoplanarMergeAngle) {
          parent[find(i)] = find(j);
        }
      }
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);

  std::vector<std::vector<int>> cycles;
  for (const auto& [root, members] : groups) {
    std::set<std::pair<int, int>> directed;
    for (const int fi : members) {
      const int vs[3] = {tris[fi].a, tris[fi].b, tris[fi].c};
      for (int k = 0; k < 3; ++k) directed.emplace(vs[k], vs[(k + 1) % 3]);
    }
    // Boundary edges are those whose reversal is interior-absent; vertices
    // fanned entirely inside a merged facet drop out here.
    std::map<int, int> next;
    for (const auto& [u, v] : directed) {
      if (directed.count({v, u})) continue;
      if (!next.emplace(u, v).second) {
        throw std::logic_error("merged facet has a pinched boundary");
      }
    }
    if (next.empty()) throw std::logic_error("merged facet has no boundary");

    std::vector<int> cycle;
    const int start = next.begin()->first;
    int cur = start;
    do {
      cycle.push_back(cur);
      const auto it = next.find(cur);
      if (it == next.end()) {
        throw std::logic_error("merged facet boundary is not closed");
      }
      cur = it->second;
    } while (cur != start);
    if (cycle.size() != next.size()) {
      throw std::logic_error("merged facet boundary is not a single cycle");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

UnitPoint::UnitPoint(double x, double y, double z) : UnitPoint(Vec3{x, y, z}) {}

UnitPoint::UnitPoint(const Vec3& v) : v_{} {
  const double n = norm(v);
  if (n < kUnitNormTol) {
    throw DegenerateInput("cannot project the zero vector onto the sphere");
  }
  v_ = v / n;
}

UnitPoint UnitPoint::from_polar(double theta, double phi) {
  const double s = std::sin(theta);
  return UnitPoint(
      Vec3{s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

std::string family_label(const CombinatorialType& type) {
  switch (type.family) {
    case Family::kSimplex:
      return "simplex";
    case Family::kPyramid:
      return "pyramid-" + std::to_string(type.vertex_count);
    case Family::kBipyramid:
      return "bipyramid-" + std::to_string(type.vertex_count);
    case Family::kOther:
      break;
  }
  return "other";
}

Polyhedron convex_hull(std::span<const Vec3> points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw DegenerateInput("need at least 4 points");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(points[i], points[j]) < kDuplicateEps) {
        throw DegenerateInput("duplicate points within tolerance");
      }
    }
  }

  const auto tet = initial_tetrahedron(points);
  const int A = tet[0], B = tet[1], C = tet[2], D = tet[3];
  std::vector<Tri> faces = {{A, B, C}, {A, C, D}, {A, D, B}, {B, D, C}};

  for (int p = 0; p < n; ++p) {
    if (p == A || p == B || p == C || p == D) continue;

    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f) {
      const double o = orient(points[faces[f].a], points[faces[f].b],
                              points[faces[f].c], points[p]);
      if (o > kOrientEps) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // inside (or on) the current hull

    // Horizon: directed edges of the visible region whose reversal is not
    // itself visible. New cone faces keep the edge direction, so they
    // inherit the outward-CCW convention.
    std::set<std::pair<int, int>> rim;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const int vs[3] = {faces[f].a, faces[f].b, faces[f].c};
      for (int k = 0; k < 3; ++k) rim.emplace(vs[k], vs[(k + 1) % 3]);
    }
    std::vector<Tri> updated;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) updated.push_back(faces[f]);
    }
    for (const auto& [u, v] : rim) {
      if (!rim.count({v, u})) updated.push_back({u, v, p});
    }
    faces = std::move(updated);
  }

  auto cycles = merge_coplanar(faces, points);

  // Compact to the vertices that survived on the boundary, keeping input
  // order; hull vertices are exactly the extreme points of the input.
  std::set<int> used;
  for (const auto& c : cycles) used.insert(c.begin(), c.end());
  std::vector<int> old_index(used.begin(), used.end());
  std::map<int, int> renum;
  for (size_t i = 0; i < old_index.size(); ++i) renum[old_index[i]] = static_cast<int>(i);

  Polyhedron poly;
  poly.vertices.reserve(old_index.size());
  for (const int i : old_index) poly.vertices.push_back(points[i]);

  for (auto& c : cycles) {
    for (int& v : c) v = renum[v];
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  }
  std::sort(cycles.begin(), cycles.end());
  poly.facets = std::move(cycles);

  // Derive edges; every undirected edge must be shared by exactly two
  // facets in a closed surface.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& c : poly.facets) {
    for (size_t k = 0; k < c.size(); ++k) {
      ++edge_count[std::minmax(c[k], c[(k + 1) % c.size()])];
    }
  }
  for (const auto& [e, cnt] : edge_count) {
    if (cnt != 2) throw std::logic_error("hull edge not shared by two facets");
    poly.edges.push_back({e.first, e.second});
  }

  const int ve = static_cast<int>(poly.vertices.size());
  const int ee = static_cast<int>(poly.edges.size());
  const int fe = static_cast<int>(poly.facets.size());
  if (ve - ee + fe != 2) throw std::logic_error("hull violates Euler's formula");

  // Orientation audit: every facet normal must point away from the hull
  // centroid.
  Vec3 centroid{0, 0, 0};
  for (const auto& v : poly.vertices) centroid = centroid + v;
  centroid = centroid / static_cast<double>(ve);
  for (int f = 0; f < fe; ++f) {
    Vec3 fc{0, 0, 0};
    for (const int v : poly.facets[f]) fc = fc + poly.vertices[v];
    fc = fc / static_cast<double>(poly.facets[f].size());
    if (dot(facet_unit_normal(poly, f), fc - centroid) <= 0.0) {
      throw std::logic_error("hull facet oriented inward");
    }
  }
  return poly;
}

Polyhedron convex_hull(std::span<const UnitPoint> points) {
  std::vector<Vec3> raw;
  raw.reserve(points.size());
  for (const auto& p : points) raw.push_back(p.vec());
  return convex_hull(raw);
}

double surface_area(const Polyhedron& p) {
  double total = 0.0;
  for (const auto& c : p.facets) {
    Vec3 acc{0, 0, 0};
    for (size_t k = 0; k < c.size(); ++k) {
      acc = acc + cross(p.vertices[c[k]], p.vertices[c[(k + 1) % c.size()]]);
    }
    total += 0.5 * norm(acc);
  }
  return total;
}

double volume(const Polyhedron& p) {
  double six_vol = 0.0;
  for (const auto& c : p.facets) {
    for (size_t k = 1; k + 1 < c.size(); ++k) {
      six_vol += dot(p.vertices[c[0]],
                     cross(p.vertices[c[k]], p.vertices[c[k + 1]]));
    }
  }
  return six_vol / 6.0;
}

CombinatorialType classify(const Polyhedron& p) {
  CombinatorialType t;
  t.vertex_count = static_cast<int>(p.vertices.size());
  t.edge_count = static_cast<int>(p.edges.size());
  t.facet_count = static_cast<int>(p.facets.size());
  for (const auto& c : p.facets) t.facet_sizes.push_back(static_cast<int>(c.size()));
  std::sort(t.facet_sizes.begin(), t.facet_sizes.end());

  const int v = t.vertex_count;
  const bool all_triangles =
      !t.facet_sizes.empty() && t.facet_sizes.back() == 3;

  std::vector<int> degree(v, 0);
  for (const auto& e : p.edges) {
    ++degree[e[0]];
    ++degree[e[1]];
  }

  if (v == 4 && all_triangles) {
    t.family = Family::kSimplex;
    return t;
  }
  if (v >= 5 && t.facet_count == v && t.facet_sizes[v - 1] == v - 1 &&
      t.facet_sizes[v - 2] == 3) {
    t.family = Family::kPyramid;
    return t;
  }
  if (v >= 5 && all_triangles && t.facet_count == 2 * (v - 2)) {
    // Bipyramid: exactly two vertices of degree v-2 (the apexes), not
    // adjacent to each other, all equatorial vertices of degree 4. The
    // v=6 case degenerates (every octahedron vertex has degree 4) and is
    // deliberately left unlabeled.
    std::vector<int> apexes;
    bool equator_ok = true;
    for (int i = 0; i < v; ++i) {
      if (degree[i] == v - 2) {
        apexes.push_back(i);
      } else if (degree[i] != 4) {
        equator_ok = false;
      }
    }
    if (apexes.size() == 2 && equator_ok) {
      const std::array<int, 2> probe = {std::min(apexes[0], apexes[1]),
                                        std::max(apexes[0], apexes[1])};
      const bool adjacent =
          std::find(p.edges.begin(), p.edges.end(), probe) != p.edges.end();
      if (!adjacent) {
        t.family = Family::kBipyramid;
        return t;
      }
    }
  }
  t.family = Family::kOther;
  return t;
}

Vec3 facet_unit_normal(const Polyhedron& p, int facet_index) {
  const auto& c = p.facets.at(facet_index);
  Vec3 acc{0, 0, 0};
  for (size_t k = 0; k < c.size(); ++k) {
    acc = acc + cross(p.vertices[c[k]], p.vertices[c[(k + 1) % c.size()]]);
  }
  return normalized(acc);
}

}  // namespace sphedra
