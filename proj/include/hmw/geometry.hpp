#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

namespace hmw::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;

  [[nodiscard]] double dot(Vec2 o) const { return x * o.x + y * o.y; }
  [[nodiscard]] double cross(Vec2 o) const { return x * o.y - y * o.x; }
  [[nodiscard]] double norm() const { return std::hypot(x, y); }
};

/// Circular arc, t in [0,1] -> center + radius * (cos, sin)(angle0 + t*sweep).
struct ArcSegment {
  Vec2 center;
  double radius = 1.0;
  double angle0 = 0.0;
  double sweep = 0.0;  // signed; positive turns counterclockwise
};

struct LineSegment {
  Vec2 a;
  Vec2 b;
};

/// Free-form segment for internal use (tests, custom loops). Not part of the
/// external scenario format.
struct ParametricSegment {
  std::function<Vec2(double)> position;
  std::function<Vec2(double)> velocity;  // d position / d t
};

using Segment = std::variant<ArcSegment, LineSegment, ParametricSegment>;

Vec2 position(const Segment& s, double t);
Vec2 velocity(const Segment& s, double t);

/// Evaluate positions and velocities at n parameter values in one call.
void sample(const Segment& s, const double* ts, std::size_t n, double* xs,
            double* ys, double* txs, double* tys);

enum class Orientation { ccw, cw };

/// Closed oriented piecewise-parametric curve in the plane.
/// Construction enforces continuity: each junction gap, including last-to-first,
/// must be <= 1e-12.
class LoopPath {
 public:
  explicit LoopPath(std::vector<Segment> segments);

  /// |turns| full revolutions, four quarter arcs each. turns >= 1.
  static LoopPath circle(Vec2 center, double radius, Orientation o, int turns = 1);

  /// Simple polygon from >= 3 vertices. The vertex order is reversed if needed
  /// so the loop's signed area matches the requested orientation.
  static LoopPath polygon(std::vector<Vec2> vertices, Orientation o);

  [[nodiscard]] const std::vector<Segment>& segments() const { return segments_; }
  [[nodiscard]] bool is_closed() const { return true; }

  [[nodiscard]] LoopPath reversed() const;

  /// Same geometric loop, each segment split into `parts` equal pieces.
  [[nodiscard]] LoopPath subdivided(int parts) const;

 private:
  std::vector<Segment> segments_;
};

/// Shortest distance from the loop to a point (exact for arcs and lines,
/// sampled for parametric segments).
double min_distance(const LoopPath& path, Vec2 point);

/// Signed number of turns of the loop around `about`, by accumulating the
/// subtended angle. Throws SingularPointError if the path comes within
/// `epsilon` of the point.
int winding_number(const LoopPath& path, Vec2 about, double epsilon = 1e-9);

}  // namespace hmw::geom
