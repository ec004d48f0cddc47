#ifndef AEROPLAN_TRAJECTORY_H
#define AEROPLAN_TRAJECTORY_H

namespace aeroplan {

struct Vec3 {
  double x = 0;
  double y = 0;
  double z = 0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

double Norm(Vec3 v);
double HorizontalNorm(Vec3 v);
double Distance(Vec3 a, Vec3 b);

enum class TrajectoryKind { kStatic, kLinearShuttle, kCircular };

// Predicted kinematics of one node. A linear shuttle flies a -> b, hovers at
// b, flies back and hovers at a, repeating. A circular trajectory orbits
// center `a` at `radius` in the horizontal plane.
struct Trajectory {
  TrajectoryKind kind = TrajectoryKind::kStatic;
  Vec3 a;
  Vec3 b;
  double radius = 0;
  double speed = 0;
  double hover_time = 0;
  double start_offset = 0;

  static Trajectory Static(Vec3 p);
  static Trajectory LinearShuttle(Vec3 from, Vec3 to, double speed,
                                  double hover_time, double start_offset);
  static Trajectory Circular(Vec3 center, double radius, double speed,
                             double start_offset);

  Vec3 PositionAt(double t) const;

  // Throws InputError on negative speed/hover/radius or non-finite values.
  void Validate() const;
};

}  // namespace aeroplan

#endif
