#pragma once

#include <string>
#include <variant>
#include <vector>

#include "supfit/angle.hpp"

namespace supfit {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

struct Singleton {
  Point2 point;
};

struct Ball {
  Point2 center;
  double radius = 0.0;
};

struct Segment {
  Point2 a, b;
};

/// Vertices in counterclockwise order, strictly convex position (no three
/// collinear) when there are three or more. One- and two-vertex polytopes
/// (points, segments) are permitted; they arise from halfplane intersections
/// of degenerate support vectors.
struct Polytope {
  std::vector<Point2> vertices;
};

/// Half-disk {x : |x| <= radius, x . (cos axis, sin axis) >= 0}.
struct HalfDisk {
  double radius = 0.0;
  Angle axis;
};

/// A planar compact convex set with an exact support function. Degenerate
/// parameters (zero radius, coincident segment endpoints, one-vertex input)
/// normalize to Singleton at construction.
class ConvexBody {
 public:
  using Variant = std::variant<Singleton, Ball, Segment, Polytope, HalfDisk>;

  static ConvexBody singleton(Point2 p);
  static ConvexBody ball(Point2 center, double radius);
  static ConvexBody segment(Point2 a, Point2 b);
  static ConvexBody polytope(std::vector<Point2> vertices);
  static ConvexBody half_disk(double radius, Angle axis);

  const Variant& value() const { return v_; }

  ConvexBody translated(Point2 t) const;

 private:
  explicit ConvexBody(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// h_K(theta) = max over the body of x1 cos(theta) + x2 sin(theta).
/// Exact closed form per variant; total function.
double support(const ConvexBody& body, Angle theta);

/// Support values at many angles. For polytopes the angles must be sorted
/// ascending; evaluation is then amortized O(vertices + angles) instead of
/// O(vertices * angles).
std::vector<double> support_profile(const ConvexBody& body,
                                    const std::vector<double>& sorted_thetas);

/// Shape-spec JSON, e.g. {"type":"ball","center":[0,0],"radius":1.0}.
/// Field names per variant:
///   singleton: point [x,y]
///   ball:      center [x,y], radius
///   segment:   endpoints [[x,y],[x,y]]
///   polytope:  vertices [[x,y],...]  (counterclockwise)
///   halfdisk:  radius, axis (radians)
ConvexBody body_from_json_text(const std::string& text);
std::string body_to_json_text(const ConvexBody& body);

/// Short lowercase tag for reports ("ball", "segment", ...).
std::string body_tag(const ConvexBody& body);

}  // namespace supfit
