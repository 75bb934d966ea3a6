#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace hev {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

struct NonPositiveDepth : std::runtime_error {
  NonPositiveDepth() : std::runtime_error("point depth must be positive") {}
};
struct OutOfImage : std::runtime_error {
  OutOfImage() : std::runtime_error("pixel outside image bounds") {}
};
struct MissingAgentPose : std::runtime_error {
  MissingAgentPose() : std::runtime_error("ego frame requires an agent pose") {}
};
struct IndexOutOfRange : std::runtime_error {
  IndexOutOfRange() : std::runtime_error("cell index outside grid") {}
};

constexpr double kPi = 3.14159265358979323846;

// Normalize an angle to [-pi, pi).
inline double normalize_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

// Pinhole intrinsics. Pixel coordinates have their origin at the top-left
// corner of the image; u grows right, v grows down.
struct CameraIntrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int width = 0, height = 0;

  // Square-pixel intrinsics from a horizontal field of view.
  static CameraIntrinsics from_fov(int width, int height, double hfov_rad);

  Mat3 as_matrix() const;
  CameraIntrinsics rescaled(int new_width, int new_height) const;
  bool valid() const {
    return fx > 0 && fy > 0 && cx > 0 && cx < width && cy > 0 && cy < height;
  }
};

// Camera mount orientation relative to the robot base. Both frames use
// x=right, y=down, z=forward; there is deliberately no translation.
class RotationExtrinsic {
 public:
  explicit RotationExtrinsic(const Mat3& r);
  static RotationExtrinsic identity() { return RotationExtrinsic(Mat3::Identity()); }
  // Mount yawed by `yaw` radians about the base up axis; positive = left.
  static RotationExtrinsic yaw_mount(double yaw);
  const Mat3& matrix() const { return r_; }

 private:
  Mat3 r_;
};

// Planar pose. heading is counterclockwise radians with 0 = world north (+y),
// stored normalized to [-pi, pi).
struct Pose2D {
  double x = 0, y = 0, heading = 0;

  Pose2D() = default;
  Pose2D(double x_, double y_, double heading_)
      : x(x_), y(y_), heading(normalize_angle(heading_)) {}

  Vec2 position() const { return {x, y}; }
  Vec2 forward() const { return {-std::sin(heading), std::cos(heading)}; }
};

enum class FrameKind : uint8_t { WorldCentric = 0, EgoCentric = 1, EgoForward = 2 };

const char* frame_name(FrameKind f);

// Occupancy grid geometry. Cell (0,0) sits at `origin` (the grid's minimum
// corner in frame coordinates); rows grow north (+y), columns east (+x).
// For ego frames the grid is centered on the frame origin and `origin` is
// ignored.
struct GridSpec {
  FrameKind frame = FrameKind::WorldCentric;
  int rows = 0, cols = 0;
  double cell_size = 0;
  Vec2 origin{0, 0};
  int channels = 1;

  double span_x() const { return cols * cell_size; }
  double span_y() const { return rows * cell_size; }
  // Minimum corner in frame coordinates (origin for world, centered for ego).
  Vec2 frame_origin() const {
    if (frame == FrameKind::WorldCentric) return origin;
    return {-0.5 * span_x(), -0.5 * span_y()};
  }
};

struct Cell {
  int row = 0, col = 0;
  bool operator==(const Cell&) const = default;
};

// Rigid 2D transform p -> r*p + t.
struct Transform2D {
  Mat2 r = Mat2::Identity();
  Vec2 t{0, 0};

  Vec2 apply(const Vec2& p) const { return r * p + t; }
  Transform2D inverse() const {
    Transform2D inv;
    inv.r = r.transpose();
    inv.t = -(inv.r * t);
    return inv;
  }
};

// Pinhole projection of a camera-frame point (z forward) to a pixel.
Vec2 project(const Vec3& point_cam, const CameraIntrinsics& k);

// Unit ray direction through a pixel. Throws OutOfImage for pixels outside
// [0,width) x [0,height).
Vec3 unproject(const Vec2& pixel, const CameraIntrinsics& k);

// World -> frame transform for a coordinate frame anchored to `agent`.
Transform2D frame_transform(FrameKind frame, const Pose2D& agent);

// Rasterization lookup. OutOfBounds is a value (nullopt), not an error.
std::optional<Cell> world_to_cell(const GridSpec& spec,
                                  const std::optional<Pose2D>& agent,
                                  const Vec2& point);

// Center of cell (row, col) in world coordinates.
Vec2 cell_to_world(const GridSpec& spec, const std::optional<Pose2D>& agent,
                   int row, int col);

// --- footprint primitives shared by the grid sensor, physics and renderer ---

struct Disc {
  Vec2 center{0, 0};
  double radius = 0;
};

// Rectangle with arbitrary rotation; angle 0 means axis-aligned, half extents
// along the rectangle's own axes.
struct RotRect {
  Vec2 center{0, 0};
  Vec2 half{0, 0};
  double angle = 0;
};

// Closed-set intersection tests (touching counts as overlap).
bool disc_intersects_rect(const Disc& d, const Vec2& rect_min, const Vec2& rect_max);
bool rotrect_intersects_rect(const RotRect& r, const Vec2& rect_min, const Vec2& rect_max);

// Open-set overlap tests for collision resolution (touching is allowed).
bool disc_overlaps_disc(const Disc& a, const Disc& b);
bool disc_overlaps_aabb(const Disc& d, const Vec2& rect_min, const Vec2& rect_max);
bool aabb_overlaps_aabb(const Vec2& amin, const Vec2& amax, const Vec2& bmin, const Vec2& bmax);

}  // namespace hev
