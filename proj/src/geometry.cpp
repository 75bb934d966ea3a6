#include "hev/geometry.hpp"

namespace hev {

CameraIntrinsics CameraIntrinsics::from_fov(int width, int height, double hfov_rad) {
  CameraIntrinsics k;
  k.width = width;
  k.height = height;
  k.fx = (width / 2.0) / std::tan(hfov_rad / 2.0);
  k.fy = k.fx;  // square pixels
  k.cx = width / 2.0;
  k.cy = height / 2.0;
  return k;
}

Mat3 CameraIntrinsics::as_matrix() const {
  Mat3 m;
  m << fx, 0, cx, 0, fy, cy, 0, 0, 1;
  return m;
}

CameraIntrinsics CameraIntrinsics::rescaled(int new_width, int new_height) const {
  const double sx = new_width / static_cast<double>(width);
  const double sy = new_height / static_cast<double>(height);
  CameraIntrinsics k;
  k.fx = fx * sx;
  k.fy = fy * sy;
  k.cx = cx * sx;
  k.cy = cy * sy;
  k.width = new_width;
  k.height = new_height;
  return k;
}

RotationExtrinsic::RotationExtrinsic(const Mat3& r) : r_(r) {
  const double ortho_err = (r * r.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (ortho_err > 1e-6 || std::abs(r.determinant() - 1.0) > 1e-6) {
    throw std::invalid_argument("rotation extrinsic is not orthonormal");
  }
}

RotationExtrinsic RotationExtrinsic::yaw_mount(double yaw) {
  // Base up axis is -y (y points down). Positive yaw turns the camera left.
  const double c = std::cos(yaw), s = std::sin(yaw);
  Mat3 r;
  r << c, 0, s,
       0, 1, 0,
      -s, 0, c;
  return RotationExtrinsic(r);
}

const char* frame_name(FrameKind f) {
  switch (f) {
    case FrameKind::WorldCentric: return "world";
    case FrameKind::EgoCentric: return "ego";
    case FrameKind::EgoForward: return "ego_forward";
  }
  return "?";
}

Vec2 project(const Vec3& point_cam, const CameraIntrinsics& k) {
  if (point_cam.z() <= 0) throw NonPositiveDepth();
  return {k.fx * point_cam.x() / point_cam.z() + k.cx,
          k.fy * point_cam.y() / point_cam.z() + k.cy};
}

Vec3 unproject(const Vec2& pixel, const CameraIntrinsics& k) {
  if (pixel.x() < 0 || pixel.x() >= k.width || pixel.y() < 0 || pixel.y() >= k.height) {
    throw OutOfImage();
  }
  Vec3 d{(pixel.x() - k.cx) / k.fx, (pixel.y() - k.cy) / k.fy, 1.0};
  return d.normalized();
}

Transform2D frame_transform(FrameKind frame, const Pose2D& agent) {
  Transform2D tf;
  switch (frame) {
    case FrameKind::WorldCentric:
      break;
    case FrameKind::EgoCentric:
      tf.t = -agent.position();
      break;
    case FrameKind::EgoForward: {
      // Rotate by -heading so the agent's forward direction maps to +y
      // (increasing row = grid "up").
      const double c = std::cos(-agent.heading), s = std::sin(-agent.heading);
      tf.r << c, -s, s, c;
      tf.t = -(tf.r * agent.position());
      break;
    }
  }
  return tf;
}

static void require_pose_matches_frame(const GridSpec& spec,
                                       const std::optional<Pose2D>& agent) {
  if (spec.frame != FrameKind::WorldCentric && !agent.has_value()) {
    throw MissingAgentPose();
  }
}

std::optional<Cell> world_to_cell(const GridSpec& spec,
                                  const std::optional<Pose2D>& agent,
                                  const Vec2& point) {
  require_pose_matches_frame(spec, agent);
  const Transform2D tf = frame_transform(spec.frame, agent.value_or(Pose2D{}));
  const Vec2 local = tf.apply(point) - spec.frame_origin();
  const int col = static_cast<int>(std::floor(local.x() / spec.cell_size));
  const int row = static_cast<int>(std::floor(local.y() / spec.cell_size));
  if (row < 0 || row >= spec.rows || col < 0 || col >= spec.cols) return std::nullopt;
  return Cell{row, col};
}

Vec2 cell_to_world(const GridSpec& spec, const std::optional<Pose2D>& agent,
                   int row, int col) {
  require_pose_matches_frame(spec, agent);
  if (row < 0 || row >= spec.rows || col < 0 || col >= spec.cols) {
    throw IndexOutOfRange();
  }
  const Vec2 center_frame = spec.frame_origin() +
      Vec2{(col + 0.5) * spec.cell_size, (row + 0.5) * spec.cell_size};
  const Transform2D inv = frame_transform(spec.frame, agent.value_or(Pose2D{})).inverse();
  return inv.apply(center_frame);
}

bool disc_intersects_rect(const Disc& d, const Vec2& rect_min, const Vec2& rect_max) {
  const double px = std::clamp(d.center.x(), rect_min.x(), rect_max.x());
  const double py = std::clamp(d.center.y(), rect_min.y(), rect_max.y());
  const double dx = d.center.x() - px, dy = d.center.y() - py;
  return dx * dx + dy * dy <= d.radius * d.radius;
}

bool rotrect_intersects_rect(const RotRect& r, const Vec2& rect_min, const Vec2& rect_max) {
  // Separating-axis test over the cell's axes and the rectangle's own axes.
  const double c = std::cos(r.angle), s = std::sin(r.angle);
  const Vec2 ax0{c, s}, ax1{-s, c};  // rectangle axes
  const Vec2 cell_center = 0.5 * (rect_min + rect_max);
  const Vec2 cell_half = 0.5 * (rect_max - rect_min);
  const Vec2 delta = r.center - cell_center;

  const Vec2 axes[4] = {{1, 0}, {0, 1}, ax0, ax1};
  for (const Vec2& a : axes) {
    const double proj_rect = r.half.x() * std::abs(a.dot(ax0)) + r.half.y() * std::abs(a.dot(ax1));
    const double proj_cell = cell_half.x() * std::abs(a.x()) + cell_half.y() * std::abs(a.y());
    if (std::abs(a.dot(delta)) > proj_rect + proj_cell) return false;
  }
  return true;
}

bool disc_overlaps_disc(const Disc& a, const Disc& b) {
  const double rr = a.radius + b.radius;
  return (a.center - b.center).squaredNorm() < rr * rr;
}

bool disc_overlaps_aabb(const Disc& d, const Vec2& rect_min, const Vec2& rect_max) {
  const double px = std::clamp(d.center.x(), rect_min.x(), rect_max.x());
  const double py = std::clamp(d.center.y(), rect_min.y(), rect_max.y());
  const double dx = d.center.x() - px, dy = d.center.y() - py;
  return dx * dx + dy * dy < d.radius * d.radius;
}

bool aabb_overlaps_aabb(const Vec2& amin, const Vec2& amax, const Vec2& bmin, const Vec2& bmax) {
  return amin.x() < bmax.x() && bmin.x() < amax.x() &&
         amin.y() < bmax.y() && bmin.y() < amax.y();
}

}  // namespace hev
