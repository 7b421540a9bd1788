#include "fewnomial/polytope.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>

namespace fewnomial {

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Row-reduced basis of the direction space of an affine hull. Each basis
// row has a 1 in its pivot column and zeros in the other pivot columns, so
// projecting onto the pivot columns is injective on the hull.
struct Frame {
  Point base;
  std::vector<Point> basis;
  std::vector<Index> pivots;

  Point project(const Point& p) const {
    Point q(static_cast<Index>(pivots.size()));
    for (std::size_t j = 0; j < pivots.size(); ++j) q(j) = p(pivots[j]);
    return q;
  }

  // Residual of x - base after eliminating the basis; zero iff x lies in
  // the affine hull.
  bool in_affine_hull(const Point& x) const {
    Point d = x - base;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Rational f = d(pivots[j]);
      if (f != 0) d -= f * basis[j];
    }
    return std::all_of(d.data(), d.data() + d.size(),
                       [](const Rational& v) { return v == 0; });
  }
};

Frame affine_frame(const std::vector<Point>& pts) {
  Frame frame;
  frame.base = pts.front();
  const Index n = frame.base.size();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point d = pts[i] - frame.base;
    for (std::size_t j = 0; j < frame.basis.size(); ++j) {
      const Rational f = d(frame.pivots[j]);
      if (f != 0) d -= f * frame.basis[j];
    }
    Index pc = 0;
    while (pc < n && d(pc) == 0) ++pc;
    if (pc == n) continue;
    d /= Rational(d(pc));
    for (auto& row : frame.basis) {
      const Rational f = row(pc);
      if (f != 0) row -= f * d;
    }
    frame.basis.push_back(std::move(d));
    frame.pivots.push_back(pc);
  }
  // Keep pivots ascending so projected coordinates follow ambient order.
  std::vector<std::size_t> order(frame.pivots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return frame.pivots[a] < frame.pivots[b];
  });
  Frame sorted{frame.base, {}, {}};
  for (auto o : order) {
    sorted.basis.push_back(frame.basis[o]);
    sorted.pivots.push_back(frame.pivots[o]);
  }
  return sorted;
}

// Scales a rational vector to a primitive integer vector (same ray).
void make_primitive(RationalVector& v) {
  BigInt l = 1;
  for (Index i = 0; i < v.size(); ++i) l = mp::lcm(l, mp::denominator(v(i)));
  BigInt g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    v(i) *= l;
    g = mp::gcd(g, mp::numerator(v(i)));
  }
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v(i) /= g;
}

struct RawFacet {
  RationalVector normal;
  Rational offset;
  Bits points;  // input points lying on the facet
};

Rational lifted_dot(const RationalVector& y, const Point& q) {
  Rational v = y(0);
  for (Index j = 0; j < q.size(); ++j) v += y(j + 1) * q(j);
  return v;
}

// Facets of conv(pts) for a full-dimensional configuration in R^k, k >= 2,
// by the double description method on the cone
// { y = (b, a) : b + a.q_i >= 0 for all i } whose extreme rays are exactly
// the facet inequalities.
std::vector<RawFacet> hull_facets(const std::vector<Point>& pts) {
  const Index k = pts.front().size();
  const Index d = k + 1;
  const std::size_t m = pts.size();

  // Affinely independent starting simplex.
  std::vector<std::size_t> initial;
  std::vector<RationalVector> echelon;
  std::vector<Index> echelon_pivot;
  for (std::size_t i = 0; i < m && static_cast<Index>(initial.size()) < d; ++i) {
    RationalVector h(d);
    h(0) = 1;
    h.tail(k) = pts[i];
    for (std::size_t j = 0; j < echelon.size(); ++j) {
      const Rational f = h(echelon_pivot[j]) / echelon[j](echelon_pivot[j]);
      if (f != 0) h -= f * echelon[j];
    }
    Index pc = 0;
    while (pc < d && h(pc) == 0) ++pc;
    if (pc == d) continue;
    echelon.push_back(h);
    echelon_pivot.push_back(pc);
    initial.push_back(i);
  }

  RationalMatrix h0(d, d);
  for (Index r = 0; r < d; ++r) {
    h0(r, 0) = 1;
    h0.row(r).tail(k) = pts[initial[r]].transpose();
  }
  // Gauss-Jordan inverse; columns are the initial rays.
  RationalMatrix aug(d, 2 * d);
  aug.leftCols(d) = h0;
  aug.rightCols(d) = RationalMatrix::Identity(d, d);
  for (Index c = 0; c < d; ++c) {
    Index p = c;
    while (aug(p, c) == 0) ++p;
    if (p != c) aug.row(p).swap(aug.row(c));
    const Rational inv = Rational(1) / aug(c, c);
    aug.row(c) *= inv;
    for (Index r = 0; r < d; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      const Rational f = aug(r, c);
      aug.row(r) -= f * aug.row(c);
    }
  }

  struct Ray {
    RationalVector y;
    Bits zeros;
  };
  std::vector<Ray> rays;
  for (Index j = 0; j < d; ++j) {
    Ray ray{aug.rightCols(d).col(j), Bits(m)};
    make_primitive(ray.y);
    for (Index l = 0; l < d; ++l)
      if (l != j) ray.zeros.set(initial[l]);
    rays.push_back(std::move(ray));
  }

  Bits done(m);
  for (auto i : initial) done.set(i);

  for (std::size_t i = 0; i < m; ++i) {
    if (done.test(i)) continue;
    done.set(i);
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = lifted_dot(rays[r].y, pts[i]);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(i);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (value[r] >= 0) next.push_back(rays[r]);
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (static_cast<Index>(common.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray{value[p] * rays[q].y - value[q] * rays[p].y, common};
        make_primitive(ray.y);
        ray.zeros.set(i);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<RawFacet> facets;
  facets.reserve(rays.size());
  for (auto& ray : rays)
    facets.push_back({ray.y.tail(k), ray.y(0), std::move(ray.zeros)});
  return facets;
}

// Indices of extreme points of a full-dimensional configuration given its
// facets: a point is a vertex iff the facets through it meet only in it.
std::vector<bool> vertex_flags(const std::vector<Point>& pts,
                               const std::vector<RawFacet>& facets) {
  const std::size_t m = pts.size();
  std::vector<bool> flags(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    Bits meet(m);
    meet.set();
    bool any = false;
    for (const auto& f : facets) {
      if (!f.points.test(i)) continue;
      meet &= f.points;
      any = true;
    }
    flags[i] = any && meet.count() == 1;
  }
  return flags;
}

// Extreme points of a configuration of distinct points in R^k that
// affinely spans R^k.
std::vector<std::size_t> extreme_points(const std::vector<Point>& pts) {
  const Index k = pts.front().size();
  std::vector<std::size_t> out;
  if (k == 0) return {0};
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i](0) < pts[lo](0)) lo = i;
      if (pts[i](0) > pts[hi](0)) hi = i;
    }
    out = {lo, hi};
  } else {
    auto flags = vertex_flags(pts, hull_facets(pts));
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (flags[i]) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Triangulates conv(pts) (distinct extreme points spanning R^k) by coning
// from the first point over a recursive triangulation of the facets that
// avoid it. Simplices are lists of indices into `ids`.
void triangulate(const std::vector<Point>& pts, const std::vector<Index>& ids,
                 std::vector<std::vector<Index>>& out) {
  const Index k = pts.front().size();
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i](0) < pts[lo](0)) lo = i;
      if (pts[i](0) > pts[hi](0)) hi = i;
    }
    out.push_back({ids[lo], ids[hi]});
    return;
  }
  const auto facets = hull_facets(pts);
  const auto flags = vertex_flags(pts, facets);
  std::size_t apex = 0;
  while (!flags[apex]) ++apex;
  for (const auto& f : facets) {
    if (f.points.test(apex)) continue;
    std::vector<Point> face;
    std::vector<Index> face_ids;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!f.points.test(i) || !flags[i]) continue;
      face.push_back(pts[i]);
      face_ids.push_back(ids[i]);
    }
    const Frame frame = affine_frame(face);
    std::vector<Point> projected;
    projected.reserve(face.size());
    for (const auto& p : face) projected.push_back(frame.project(p));
    std::vector<std::vector<Index>> sub;
    triangulate(projected, face_ids, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), ids[apex]);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Polytope::Polytope(std::vector<Point> generators, Index ambient_dim)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
  if (ambient_dim_ < 1)
    throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be >= 1");
  if (generators_.empty())
    throw Error(ErrorCode::DimensionMismatch, "convex hull of no points");
  for (const auto& p : generators_)
    if (p.size() != ambient_dim_)
      throw Error(ErrorCode::DimensionMismatch,
                  "point of length " + std::to_string(p.size()) +
                      " in dimension " + std::to_string(ambient_dim_));

  std::vector<Point> pts = generators_;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const Frame frame = affine_frame(pts);
  frame_coords_ = frame.pivots;
  frame_basis_ = frame.basis;
  std::vector<Point> projected;
  projected.reserve(pts.size());
  for (const auto& p : pts) projected.push_back(frame.project(p));

  const auto extreme = extreme_points(projected);
  std::vector<Point> frame_vertices;
  for (auto i : extreme) {
    vertices_.push_back(pts[i]);
    frame_vertices.push_back(projected[i]);
  }

  const Index k = dimension();
  if (k >= 2) {
    for (auto& raw : hull_facets(frame_vertices)) {
      Facet f{std::move(raw.normal), std::move(raw.offset), {}};
      for (std::size_t i = 0; i < frame_vertices.size(); ++i)
        if (raw.points.test(i)) f.vertices.push_back(static_cast<Index>(i));
      facets_.push_back(std::move(f));
    }
  }

  volume_ = 0;
  if (k == ambient_dim_) {
    std::vector<Index> ids(vertices_.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<std::vector<Index>> simplices;
    triangulate(frame_vertices, ids, simplices);
    RationalMatrix edge(k, k);
    for (const auto& s : simplices) {
      for (Index j = 0; j < k; ++j)
        edge.col(j) = frame_vertices[s[j + 1]] - frame_vertices[s[0]];
      volume_ += mp::abs(exact_determinant(edge));
    }
  }
}

bool Polytope::contains(const Point& x) const {
  if (x.size() != ambient_dim_)
    throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  const Frame frame{vertices_.front(), frame_basis_, frame_coords_};
  if (!frame.in_affine_hull(x)) return false;
  const Point y = frame.project(x);
  const Index k = dimension();
  if (k == 0) return true;
  if (k == 1) {
    const Rational lo = frame.project(vertices_.front())(0);
    const Rational hi = frame.project(vertices_.back())(0);
    return std::min(lo, hi) <= y(0) && y(0) <= std::max(lo, hi);
  }
  for (const auto& f : facets_)
    if (f.offset + f.normal.dot(y) < 0) return false;
  return true;
}

Polytope convex_hull(const std::vector<Point>& points, Index ambient_dim) {
  return Polytope(points, ambient_dim);
}

Rational normalized_volume(const Polytope& p) { return p.normalized_volume(); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "Minkowski sum of polytopes in different dimensions");
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return Polytope(std::move(sums), p.ambient_dim());
}

Polytope scale(const Polytope& p, const Rational& s) {
  if (s < 0) throw Error(ErrorCode::DomainError, "negative scale factor");
  std::vector<Point> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(s * v);
  return Polytope(std::move(pts), p.ambient_dim());
}

bool contains(const Polytope& p, const Point& x) { return p.contains(x); }

Polytope standard_simplex(Index n) {
  std::vector<Point> pts;
  pts.push_back(Point::Zero(n));
  for (Index i = 0; i < n; ++i) pts.push_back(Point::Unit(n, i));
  return Polytope(std::move(pts), n);
}

}  // namespace fewnomial
