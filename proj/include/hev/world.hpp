#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hev/geometry.hpp"
#include "hev/rng.hpp"

namespace hev {

struct PlacementFailure : std::runtime_error {
  PlacementFailure() : std::runtime_error("rejection sampling failed; arena too crowded") {}
};
struct ActionCountMismatch : std::runtime_error {
  ActionCountMismatch() : std::runtime_error("one action required per active agent") {}
};

enum class EnvId : uint8_t { PushBlock = 0, DungeonEscape = 1, PlanarConstruction = 2 };
enum class CameraRig : uint8_t { LeftRightPair = 0, SingleForward = 1 };

const char* env_name(EnvId id);
std::optional<EnvId> env_from_name(const std::string& name);

// Discrete action, cardinality 5 in every frame so policy heads stay
// comparable. Ego frames: {noop, forward, backward, turn-left, turn-right}.
// World frame:           {noop, north, east, south, west}.
enum class Action : uint8_t {
  Noop = 0,
  ForwardOrNorth = 1,
  BackwardOrEast = 2,
  TurnLeftOrSouth = 3,
  TurnRightOrWest = 4,
};
constexpr int kNumActions = 5;

struct EnvConfig {
  EnvId env_id = EnvId::PushBlock;
  int n_agents = 3;
  double arena_w = 16.0;  // x span, meters
  double arena_h = 16.0;  // y span, meters
  GridSpec grid;          // world-frame grid over the arena
  int max_steps = 500;
  uint64_t seed = 0;
  CameraRig camera_rig = CameraRig::LeftRightPair;

  double move_step = 0.25;
  double turn_step = kPi / 6.0;  // 30 degrees
  double agent_radius = 0.4;
  double push_step = 0.25;

  bool planar_random_desired = true;  // random vs static desired positions
  bool dungeon_sample_agents = true;  // sample 2-3 agents per episode

  static EnvConfig defaults(EnvId id);
  void validate() const;

  // Human-readable key/value round-trip (documented in the README).
  std::map<std::string, std::string> to_kv() const;
  static EnvConfig from_kv(const std::map<std::string, std::string>& kv);
  void save(const std::string& path) const;
  static EnvConfig load(const std::string& path);

  int class_count() const;                        // C, excluding the self channel
  std::vector<std::string> class_names() const;   // size C
  GridSpec grid_for_frame(FrameKind frame) const;
};

constexpr uint8_t kNoClass = 255;

// Role of an object inside its environment; drives dynamics and rendering.
enum class ObjRole : uint8_t {
  Wall = 0,
  Block = 1,
  GoalZone = 2,
  Dragon = 3,
  Key = 4,
  DoorZone = 5,
  Puck = 6,
  DesiredZone = 7,
};

struct ObjectState {
  uint8_t class_id = kNoClass;  // index into EnvConfig::class_names, kNoClass = geometry only
  ObjRole role = ObjRole::Wall;
  bool is_disc = false;
  Vec2 half{0, 0};     // box half extents (boxes stay axis-aligned in world)
  double radius = 0;   // disc radius
  Pose2D pose;
  bool alive = true;
  bool solid = true;
  double height = 0.4;          // render extrusion; 0 = floor paint
  int required_pushers = 0;     // blocks and pucks
  bool delivered = false;       // push block
};

struct AgentState {
  Pose2D pose;
  bool active = true;
};

struct EnvState {
  EnvConfig config;
  std::vector<AgentState> agents;
  std::vector<ObjectState> objects;
  int step_count = 0;
  Rng rng{0};
  bool done = false;

  // env-specific bookkeeping
  int key_holder = -1;
  int delivered_blocks = 0;
  int covered_desired = 0;
  uint64_t style_seed = 0;  // wall/floor segment colors; re-seeded per tick in Planar
  std::vector<Cell> desired_cells;
};

uint64_t state_digest(const EnvState& s);

// Binary occupancy mask in a declared coordinate frame. Index layout is
// channel-major: data[(ch * rows + row) * cols + col].
struct SemanticGrid {
  FrameKind frame = FrameKind::WorldCentric;
  int rows = 0, cols = 0, channels = 0;
  int agent_id = -1;  // querying agent; -1 when none
  std::vector<uint8_t> data;

  SemanticGrid() = default;
  SemanticGrid(FrameKind f, int r, int c, int ch)
      : frame(f), rows(r), cols(c), channels(ch),
        data(static_cast<size_t>(r) * c * ch, 0) {}

  uint8_t& at(int ch, int r, int c) {
    return data[(static_cast<size_t>(ch) * rows + r) * cols + c];
  }
  uint8_t at(int ch, int r, int c) const {
    return data[(static_cast<size_t>(ch) * rows + r) * cols + c];
  }
  size_t count_set() const;
  bool operator==(const SemanticGrid&) const = default;
};

struct StepResult {
  std::vector<SemanticGrid> observations;  // one per active agent, id order
  double group_reward = 0;
  std::vector<double> agent_rewards;
  bool done = false;
  std::map<std::string, double> info;
};

// Deterministic episode start; throws PlacementFailure if rejection sampling
// cannot satisfy the separation constraints.
EnvState reset(const EnvConfig& config);

// Advance one tick. `actions` must hold one entry per active agent, in
// active_agents() order. `frame` selects both action semantics and the
// observation frame.
StepResult step(EnvState& state, const std::vector<Action>& actions, FrameKind frame);

// Ground-truth grid sensor: cell (r,c,class) = 1 iff the class footprint
// intersects the cell rectangle after the frame transform. One extra self
// channel (index C) marks the querying agent's cells; with no agent_id
// (world frame only) the self channel is all zero.
SemanticGrid ground_truth_grid(const EnvState& state, const GridSpec& spec,
                               std::optional<int> agent_id);

std::vector<int> active_agents(const EnvState& state);

// Greedy deterministic heuristic used to bootstrap data collection.
Action scripted_policy(const EnvState& state, int agent_id, FrameKind frame);

// True when no two active solid bodies overlap (test helper).
bool solid_separation_ok(const EnvState& state);

}  // namespace hev
