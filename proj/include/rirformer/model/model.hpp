#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rirformer/diff/tensor.hpp"
#include "rirformer/geometry.hpp"
#include "rirformer/scenario/scenario.hpp"

namespace rirformer::model {

using diff::Tensor;

struct ModelConfig {
  std::size_t d_model = 256;
  std::size_t encoder_layers = 4;
  std::size_t heads = 8;
  std::size_t ff_dim = 512;
  std::size_t segments = 8;        // T
  std::size_t encoding_order = 6;  // i: frequencies 2^0 … 2^(i−1)
  std::size_t rir_length = 1024;   // K
  std::size_t signal_hidden = 512;
  std::size_t head_hidden = 512;
  std::size_t refiner_hidden = 256;
  bool use_sinusoidal = true;
  bool use_segments = true;
  bool use_refiner = true;

  // Throws ConfigError on an invalid combination.
  void validate() const;
  std::size_t geometry_width() const;  // 6i, or 3 without the sinusoidal encoding
  std::size_t token_width() const;     // geometry_width() + D
  std::size_t segment_length() const;  // K/T, or K without segments

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// Affine map of the ROI box onto [−1, 1]³. Throws GeometryError outside it.
Vec3 normalize_position(Vec3 p, const scenario::RoiSpec& roi);
Vec3 denormalize_position(Vec3 p, const scenario::RoiSpec& roi);

// For each coordinate, then each j < order: sin(2^j·π·x), cos(2^j·π·x).
std::vector<double> positional_encode(Vec3 p_norm, std::size_t order);

template <typename T>
struct NamedParameter {
  std::string name;
  Tensor<T> tensor;
};

// One scene as seen by the network. `signals` row r holds the RIR of point
// measured[r]; targets contribute only their positions.
template <typename T>
struct ModelInput {
  std::vector<Vec3> positions;  // normalized, one per array point
  std::vector<std::size_t> measured;
  std::vector<std::size_t> target;
  Tensor<T> signals;  // M × K
};

template <typename T>
struct DecodeResult {
  Tensor<T> segments;  // N × K concatenated head outputs
  Tensor<T> residual;  // refiner correction; undefined without a refiner
  Tensor<T> output;    // segments + residual
};

template <typename T>
class RirFormer {
 public:
  RirFormer(const ModelConfig& config, std::uint64_t seed);

  const ModelConfig& config() const { return config_; }
  std::vector<NamedParameter<T>>& named_parameters() { return params_; }
  const std::vector<NamedParameter<T>>& named_parameters() const { return params_; }
  std::vector<Tensor<T>> parameters() const;
  std::vector<Tensor<T>> head_parameters(std::size_t segment) const;
  std::size_t parameter_count() const;
  Tensor<T>& parameter(const std::string& name);

  // L × geometry_width() constant features.
  Tensor<T> geometry_features(const std::vector<Vec3>& positions) const;
  // L × D signal embeddings; rows not listed in `measured` are exactly zero.
  Tensor<T> encode_signals(const Tensor<T>& signals,
                           const std::vector<std::size_t>& measured,
                           std::size_t points) const;
  // Token matrix [γ(x_m); e_m] → contextual features C (L × D).
  Tensor<T> encode(const Tensor<T>& tokens) const;
  DecodeResult<T> decode(const Tensor<T>& context) const;

  // Ĥ for the target rows, in `input.target` order. One call is one
  // complete reconstruction.
  Tensor<T> forward(const ModelInput<T>& input) const;
  DecodeResult<T> forward_detailed(const ModelInput<T>& input) const;
  std::uint64_t forward_calls() const { return forward_calls_; }

 private:
  struct Linear {
    Tensor<T> weight;  // in × out
    Tensor<T> bias;    // out
  };
  struct Block {
    Tensor<T> ln1_gain, ln1_bias;
    Linear qkv, proj;
    Tensor<T> ln2_gain, ln2_bias;
    Linear ff1, ff2;
  };

  Linear make_linear(const std::string& name, std::size_t in, std::size_t out);
  Tensor<T> make_param(const std::string& name, diff::Shape shape, std::vector<T> values);
  static Tensor<T> apply(const Linear& layer, const Tensor<T>& x);
  void check_input(const ModelInput<T>& input) const;

  ModelConfig config_;
  std::uint64_t seed_;
  std::vector<NamedParameter<T>> params_;
  Linear signal1_, signal2_, input_;
  std::vector<Block> blocks_;
  Tensor<T> final_gain_, final_bias_;
  std::vector<std::pair<Linear, Linear>> heads_;
  Linear refine1_, refine2_, refine3_;
  mutable std::uint64_t forward_calls_ = 0;
};

struct CheckpointMetadata {
  scenario::Experiment experiment = scenario::Experiment::kExp1;
  std::uint64_t seed = 0;
  std::uint32_t epochs = 0;
  bool finetuned = false;
  std::vector<double> loss_history;

  friend bool operator==(const CheckpointMetadata&, const CheckpointMetadata&) = default;
};

// Binary container, little-endian:
//   "RIRF" | version u32 | config: 10×u32 + 3×u8 | tensor count u32 |
//   per tensor: name length u32, name bytes, rank u32, dims rank×u64,
//               dtype u8 (4 = f32, 8 = f64), payload |
//   metadata: experiment u8, seed u64, epochs u32, finetuned u8,
//             loss count u32, losses f64… | CRC-32 u32 of everything before
inline constexpr std::uint32_t kCheckpointVersion = 1;

template <typename T>
void save_checkpoint(const std::filesystem::path& path, const RirFormer<T>& model,
                     const CheckpointMetadata& meta);

template <typename T>
struct LoadedCheckpoint {
  RirFormer<T> model;
  CheckpointMetadata meta;
};

// Parameters stored in the other precision are converted on load.
template <typename T>
LoadedCheckpoint<T> load_checkpoint(const std::filesystem::path& path);

extern template class RirFormer<float>;
extern template class RirFormer<double>;

}  // namespace rirformer::model
