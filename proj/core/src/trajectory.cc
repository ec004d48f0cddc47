#include "aeroplan/trajectory.h"

#include <cmath>

#include "aeroplan/errors.h"

namespace aeroplan {

double Norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

double HorizontalNorm(Vec3 v) { return std::hypot(v.x, v.y); }

double Distance(Vec3 a, Vec3 b) { return Norm(a - b); }

Trajectory Trajectory::Static(Vec3 p) {
  Trajectory t;
  t.kind = TrajectoryKind::kStatic;
  t.a = p;
  t.b = p;
  return t;
}

Trajectory Trajectory::LinearShuttle(Vec3 from, Vec3 to, double speed,
                                     double hover_time, double start_offset) {
  Trajectory t;
  t.kind = TrajectoryKind::kLinearShuttle;
  t.a = from;
  t.b = to;
  t.speed = speed;
  t.hover_time = hover_time;
  t.start_offset = start_offset;
  return t;
}

Trajectory Trajectory::Circular(Vec3 center, double radius, double speed,
                                double start_offset) {
  Trajectory t;
  t.kind = TrajectoryKind::kCircular;
  t.a = center;
  t.b = center;
  t.radius = radius;
  t.speed = speed;
  t.start_offset = start_offset;
  return t;
}

Vec3 Trajectory::PositionAt(double t) const {
  switch (kind) {
    case TrajectoryKind::kStatic:
      return a;
    case TrajectoryKind::kLinearShuttle: {
      double length = Distance(a, b);
      if (length == 0 || speed == 0) return a;
      double travel = length / speed;
      double period = 2 * (travel + hover_time);
      double tau = std::fmod(t + start_offset, period);
      if (tau < 0) tau += period;
      Vec3 d = b - a;
      if (tau < travel) return a + (tau / travel) * d;
      tau -= travel;
      if (tau < hover_time) return b;
      tau -= hover_time;
      if (tau < travel) return b - (tau / travel) * d;
      return a;
    }
    case TrajectoryKind::kCircular: {
      if (radius == 0) return a;
      double angle = (t + start_offset) * speed / radius;
      return a + Vec3{radius * std::cos(angle), radius * std::sin(angle), 0};
    }
  }
  return a;
}

void Trajectory::Validate() const {
  auto finite = [](Vec3 v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
  };
  if (!finite(a) || !finite(b)) throw InputError("trajectory: non-finite position");
  if (!(speed >= 0) || !std::isfinite(speed)) throw InputError("trajectory: speed must be >= 0");
  if (!(hover_time >= 0) || !std::isfinite(hover_time)) {
    throw InputError("trajectory: hover_time must be >= 0");
  }
  if (!(radius >= 0) || !std::isfinite(radius)) throw InputError("trajectory: radius must be >= 0");
  if (!std::isfinite(start_offset)) throw InputError("trajectory: non-finite start_offset");
}

}  // namespace aeroplan
