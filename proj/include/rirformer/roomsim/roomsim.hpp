#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rirformer/geometry.hpp"

namespace rirformer::roomsim {

// Shoebox room centered at the global origin; spans [−dims/2, dims/2].
struct RoomSpec {
  Vec3 dims;
  double rt60 = 0.5;
  double absorption = 0.25;  // uniform energy absorption of all six walls
};

struct SimConfig {
  double fs = 8000.0;
  std::size_t length = 1024;  // K samples
  double speed_of_sound = 343.0;
  int max_order = -1;  // < 0 selects default_max_order()
  int frac_delay_taps = 81;
};

struct Rir {
  std::vector<double> samples;
  double fs = 8000.0;
};

struct Absorption {
  double alpha = 0;
  bool clamped = false;  // true when the formula exceeded 1
};

// Sabine inversion α = 0.1611·V / (S·rt60), clamped to (0, 1].
Absorption sabine_absorption(Vec3 dims, double rt60);

// Uniform wall absorption at which the T20 of a reference RIR rendered by this
// simulator equals `rt60` (bisection on α). `clamped` mirrors the Sabine
// flag. See the README section on the absorption model.
Absorption simulator_absorption(Vec3 dims, double rt60);

RoomSpec make_room(Vec3 dims, double rt60);

struct ImageSource {
  Vec3 position;
  double gain = 1.0;  // sqrt(1 − α)^reflections
  int order = 0;
};

bool inside_room(const RoomSpec& room, Vec3 p);

// Allen–Berkley lattice of mirror images with at most `max_order`
// reflections. Images farther than `reach` from every point of the room are
// omitted. Throws GeometryError if the source is not strictly inside.
std::vector<ImageSource> image_sources(
    const RoomSpec& room, Vec3 source, int max_order,
    double reach = std::numeric_limits<double>::infinity());

// Smallest reflection order guaranteeing that every image within the
// rendered window (K samples plus the kernel half-width) is included.
int default_max_order(const RoomSpec& room, const SimConfig& cfg);

// Sum of gain/(4πd) arrivals at delay d/c, each spread by a Hann-windowed
// sinc fractional-delay kernel, truncated to cfg.length samples.
Rir render_rir(std::span<const ImageSource> images, Vec3 mic,
               const SimConfig& cfg);

Rir simulate_rir(const RoomSpec& room, Vec3 source, Vec3 mic,
                 const SimConfig& cfg);

// Same as simulate_rir for each mic, sharing one image set.
std::vector<Rir> simulate_array(const RoomSpec& room, Vec3 source,
                                std::span<const Vec3> mics,
                                const SimConfig& cfg);

}  // namespace rirformer::roomsim
