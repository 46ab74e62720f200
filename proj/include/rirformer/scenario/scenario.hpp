#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "rirformer/geometry.hpp"
#include "rirformer/matrix.hpp"
#include "rirformer/rng.hpp"
#include "rirformer/roomsim/roomsim.hpp"

namespace rirformer::scenario {

enum class Experiment : std::uint8_t { kExp1 = 1, kExp2 = 2 };

inline constexpr std::size_t kArrayPoints = 64;
inline constexpr double kSampleRate = 8000.0;
inline constexpr double kRoiWallMargin = 0.2;
inline constexpr double kSourceArrayClearance = 0.1;
inline constexpr double kRslaMinSeparation = 0.002;

std::size_t rir_length(Experiment exp);  // 1024 for Exp 1, 2048 for Exp 2
std::string_view experiment_name(Experiment exp);
Experiment parse_experiment(std::string_view name);  // "exp1" | "exp2"

// Axis-aligned box centered on the room center. All geometry lies on the
// plane z = center.z; the z half-extent only sets the normalization scale.
struct RoiSpec {
  Vec3 center;
  Vec3 half_extent;
};

RoiSpec experiment_roi(Experiment exp);
bool roi_contains(const RoiSpec& roi, Vec3 p, double tolerance = 1e-12);
// Throws GeometryError unless the ROI keeps kRoiWallMargin from every wall.
void require_roi_fits(const RoiSpec& roi, Vec3 room_dims);

struct RoomDraw {
  Vec3 dims;
  double rt60 = 0;
};

// Draws dimensions and RT60 only; sample_room adds the calibrated absorption.
RoomDraw sample_room_parameters(Rng& rng);
roomsim::RoomSpec sample_room(Rng& rng, Experiment exp);
std::vector<Vec3> build_array_exp1(Rng& rng);
std::vector<Vec3> build_array_exp2(Rng& rng, const RoiSpec& roi);
Vec3 sample_source(Rng& rng, Experiment exp, const RoiSpec& roi,
                   std::span<const Vec3> array);

// Signed distance of each point from the first one along the array line.
std::vector<double> array_coordinates(std::span<const Vec3> points);

struct MaskAssignment {
  std::vector<std::size_t> measured;  // ascending
  std::vector<std::size_t> target;    // ascending
  double mr = 0;
};

// N = round(mr·L) with halves rounded up.
std::size_t target_count(std::size_t points, double mr);
MaskAssignment assign_mask(Rng& rng, std::size_t points, double mr);
// Evaluation masks depend only on (seed, scene, mr), so the model and the
// baseline see the same partition.
MaskAssignment evaluation_mask(std::uint64_t seed, std::size_t scene, double mr,
                               std::size_t points);
std::uint64_t mask_hash(const MaskAssignment& mask);

struct SceneInstance {
  roomsim::RoomSpec room;
  Vec3 source;
  std::vector<Vec3> points;  // L array points
  Matrix<float> rirs;        // L × K ground truth
};

struct Dataset {
  Experiment experiment = Experiment::kExp1;
  double fs = kSampleRate;
  std::size_t length = 0;  // K
  std::vector<SceneInstance> scenes;
};

enum class Split { kTrain, kEval };

struct GenerateConfig {
  Experiment experiment = Experiment::kExp1;
  std::size_t scene_count = 200;
  std::uint64_t seed = 0;
  Split split = Split::kTrain;
};

SceneInstance generate_scene(Experiment exp, std::uint64_t seed, Split split,
                             std::size_t index);
Dataset generate_dataset(const GenerateConfig& cfg);

// Binary container, little-endian:
//   header  "RIRD" | version u32 | fs u32 | K u32 | L u32 | count u64 | exp u8
//   scene   dims 3×f64 | rt60 f64 | absorption f64 | source 3×f64 |
//           points L×3 f64 | rirs L×K f32
//   trailer CRC-32 u32 over every scene record
inline constexpr std::uint32_t kDatasetVersion = 1;

void write_dataset(const std::filesystem::path& path, const Dataset& data);
Dataset read_dataset(const std::filesystem::path& path);
// CRC-32 of the serialized scene records, as stored in the trailer.
std::uint32_t dataset_checksum(const Dataset& data);

}  // namespace rirformer::scenario
