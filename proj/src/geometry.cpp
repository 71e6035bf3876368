#include "hmw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hmw/errors.hpp"

namespace hmw::geom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kJunctionTol = 1e-12;

struct PositionVisitor {
  double t;
  Vec2 operator()(const ArcSegment& a) const {
    double ang = a.angle0 + t * a.sweep;
    return a.center + Vec2{a.radius * std::cos(ang), a.radius * std::sin(ang)};
  }
  Vec2 operator()(const LineSegment& l) const { return l.a + t * (l.b - l.a); }
  Vec2 operator()(const ParametricSegment& p) const { return p.position(t); }
};

struct VelocityVisitor {
  double t;
  Vec2 operator()(const ArcSegment& a) const {
    double ang = a.angle0 + t * a.sweep;
    double rs = a.radius * a.sweep;
    return {-rs * std::sin(ang), rs * std::cos(ang)};
  }
  Vec2 operator()(const LineSegment& l) const { return l.b - l.a; }
  Vec2 operator()(const ParametricSegment& p) const { return p.velocity(t); }
};

Segment sub_segment(const Segment& s, double a, double b) {
  if (const auto* arc = std::get_if<ArcSegment>(&s)) {
    return ArcSegment{arc->center, arc->radius, arc->angle0 + a * arc->sweep,
                      (b - a) * arc->sweep};
  }
  if (const auto* line = std::get_if<LineSegment>(&s)) {
    return LineSegment{line->a + a * (line->b - line->a),
                       line->a + b * (line->b - line->a)};
  }
  const auto& p = std::get<ParametricSegment>(s);
  double span = b - a;
  return ParametricSegment{
      [p, a, span](double t) { return p.position(a + span * t); },
      [p, a, span](double t) { return span * p.velocity(a + span * t); }};
}

Segment reversed_segment(const Segment& s) {
  if (const auto* arc = std::get_if<ArcSegment>(&s)) {
    return ArcSegment{arc->center, arc->radius, arc->angle0 + arc->sweep,
                      -arc->sweep};
  }
  if (const auto* line = std::get_if<LineSegment>(&s)) {
    return LineSegment{line->b, line->a};
  }
  const auto& p = std::get<ParametricSegment>(s);
  return ParametricSegment{[p](double t) { return p.position(1.0 - t); },
                           [p](double t) { return -p.velocity(1.0 - t); }};
}

double point_segment_distance(const Segment& s, Vec2 q) {
  if (const auto* arc = std::get_if<ArcSegment>(&s)) {
    Vec2 d = q - arc->center;
    double r = d.norm();
    if (std::abs(arc->sweep) >= kTwoPi - 1e-9) return std::abs(r - arc->radius);
    double phi = std::atan2(d.y, d.x);
    // is phi inside the swept angular interval?
    double lo = std::min(arc->angle0, arc->angle0 + arc->sweep);
    double hi = std::max(arc->angle0, arc->angle0 + arc->sweep);
    double k = std::ceil((lo - phi) / kTwoPi);
    double phi_shift = phi + k * kTwoPi;
    if (phi_shift <= hi) return std::abs(r - arc->radius);
    Vec2 e0 = PositionVisitor{0.0}(*arc), e1 = PositionVisitor{1.0}(*arc);
    return std::min((q - e0).norm(), (q - e1).norm());
  }
  if (const auto* line = std::get_if<LineSegment>(&s)) {
    Vec2 ab = line->b - line->a;
    double len2 = ab.dot(ab);
    double t = len2 > 0.0 ? std::clamp((q - line->a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (q - (line->a + t * ab)).norm();
  }
  const auto& p = std::get<ParametricSegment>(s);
  double best = (q - p.position(0.0)).norm();
  constexpr int kSamples = 1024;
  for (int i = 1; i <= kSamples; ++i) {
    best = std::min(best, (q - p.position(double(i) / kSamples)).norm());
  }
  return best;
}

// Angle subtended at `about` by the piece of `s` between t0 and t1.
// Bisects until each step is small enough that atan2 cannot alias.
double subtended_angle(const Segment& s, Vec2 about, double t0, double t1,
                       Vec2 v0, Vec2 v1, double epsilon, int depth) {
  double step = std::atan2(v0.cross(v1), v0.dot(v1));
  if (std::abs(step) < 0.5 || depth >= 48) return step;
  double tm = 0.5 * (t0 + t1);
  Vec2 vm = position(s, tm) - about;
  if (vm.norm() <= epsilon) {
    throw SingularPointError("path passes within the singularity radius of the winding point");
  }
  return subtended_angle(s, about, t0, tm, v0, vm, epsilon, depth + 1) +
         subtended_angle(s, about, tm, t1, vm, v1, epsilon, depth + 1);
}

}  // namespace

Vec2 position(const Segment& s, double t) { return std::visit(PositionVisitor{t}, s); }
Vec2 velocity(const Segment& s, double t) { return std::visit(VelocityVisitor{t}, s); }

void sample(const Segment& s, const double* ts, std::size_t n, double* xs,
            double* ys, double* txs, double* tys) {
  if (const auto* arc = std::get_if<ArcSegment>(&s)) {
    for (std::size_t i = 0; i < n; ++i) {
      double ang = arc->angle0 + ts[i] * arc->sweep;
      double c = std::cos(ang), sn = std::sin(ang);
      xs[i] = arc->center.x + arc->radius * c;
      ys[i] = arc->center.y + arc->radius * sn;
      double rs = arc->radius * arc->sweep;
      txs[i] = -rs * sn;
      tys[i] = rs * c;
    }
    return;
  }
  if (const auto* line = std::get_if<LineSegment>(&s)) {
    double dx = line->b.x - line->a.x, dy = line->b.y - line->a.y;
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = line->a.x + ts[i] * dx;
      ys[i] = line->a.y + ts[i] * dy;
      txs[i] = dx;
      tys[i] = dy;
    }
    return;
  }
  const auto& p = std::get<ParametricSegment>(s);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 pos = p.position(ts[i]);
    Vec2 vel = p.velocity(ts[i]);
    xs[i] = pos.x;
    ys[i] = pos.y;
    txs[i] = vel.x;
    tys[i] = vel.y;
  }
}

LoopPath::LoopPath(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw ConfigError("path: a loop needs at least one segment");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    Vec2 end = position(segments_[i], 1.0);
    Vec2 next = position(segments_[(i + 1) % segments_.size()], 0.0);
    if ((end - next).norm() > kJunctionTol) {
      throw ConfigError("path: segments do not close into a loop (junction gap at segment " +
                        std::to_string(i) + ")");
    }
  }
}

LoopPath LoopPath::circle(Vec2 center, double radius, Orientation o, int turns) {
  if (!(radius > 0.0)) throw ConfigError("path.radius must be positive");
  if (turns < 1) throw ConfigError("path.turns must be >= 1");
  double dir = o == Orientation::ccw ? 1.0 : -1.0;
  std::vector<Segment> segs;
  segs.reserve(static_cast<std::size_t>(4 * turns));
  for (int q = 0; q < 4 * turns; ++q) {
    segs.push_back(ArcSegment{center, radius, dir * q * (kTwoPi / 4.0),
                              dir * (kTwoPi / 4.0)});
  }
  return LoopPath(std::move(segs));
}

LoopPath LoopPath::polygon(std::vector<Vec2> vertices, Orientation o) {
  if (vertices.size() < 3) throw ConfigError("path.vertices: need at least 3 vertices");
  double area2 = 0.0;  // shoelace, twice the signed area
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vec2 a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    area2 += a.cross(b);
  }
  if (area2 == 0.0) throw ConfigError("path.vertices: degenerate polygon");
  bool want_ccw = o == Orientation::ccw;
  if (want_ccw != (area2 > 0.0)) std::reverse(vertices.begin(), vertices.end());
  std::vector<Segment> segs;
  segs.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vec2 a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    if ((b - a).norm() == 0.0) throw ConfigError("path.vertices: repeated vertex");
    segs.push_back(LineSegment{a, b});
  }
  return LoopPath(std::move(segs));
}

LoopPath LoopPath::reversed() const {
  std::vector<Segment> segs;
  segs.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    segs.push_back(reversed_segment(*it));
  }
  return LoopPath(std::move(segs));
}

LoopPath LoopPath::subdivided(int parts) const {
  if (parts < 1) throw ConfigError("subdivided: parts must be >= 1");
  std::vector<Segment> segs;
  segs.reserve(segments_.size() * static_cast<std::size_t>(parts));
  for (const auto& s : segments_) {
    for (int i = 0; i < parts; ++i) {
      segs.push_back(sub_segment(s, double(i) / parts, double(i + 1) / parts));
    }
  }
  return LoopPath(std::move(segs));
}

double min_distance(const LoopPath& path, Vec2 point) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : path.segments()) {
    best = std::min(best, point_segment_distance(s, point));
  }
  return best;
}

int winding_number(const LoopPath& path, Vec2 about, double epsilon) {
  if (min_distance(path, about) <= epsilon) {
    throw SingularPointError("winding_number: path passes within the singularity radius of the point");
  }
  double total = 0.0;
  constexpr int kInitialSlices = 32;
  for (const auto& s : path.segments()) {
    for (int i = 0; i < kInitialSlices; ++i) {
      double t0 = double(i) / kInitialSlices, t1 = double(i + 1) / kInitialSlices;
      Vec2 v0 = position(s, t0) - about;
      Vec2 v1 = position(s, t1) - about;
      total += subtended_angle(s, about, t0, t1, v0, v1, epsilon, 0);
    }
  }
  double turns = total / kTwoPi;
  auto n = static_cast<long>(std::llround(turns));
  if (std::abs(turns - double(n)) > 1e-6) {
    throw std::runtime_error("winding_number: angle accumulation did not land on an integer");
  }
  return static_cast<int>(n);
}

}  // namespace hmw::geom
