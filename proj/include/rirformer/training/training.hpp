#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rirformer/matrix.hpp"
#include "rirformer/model/model.hpp"
#include "rirformer/rng.hpp"
#include "rirformer/scenario/scenario.hpp"

namespace rirformer::training {

using model::RirFormer;
using model::Tensor;

struct TrainConfig {
  double lr = 3e-4;
  double weight_decay = 0.01;
  std::size_t batch_size = 8;
  std::size_t epochs = 200;
  std::size_t ramp_epochs = 10;
  double mr_start = 0.30;
  double mr_end = 0.70;
  double post_ramp_mr_lo = 0.6;
  double post_ramp_mr_hi = 0.8;
  // When positive, every batch uses this missing rate instead of the curriculum.
  double fixed_mr = 0.0;
  std::size_t finetune_epochs = 20;
  double clip_norm = 1.0;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

// Linear ramp mr_start → mr_end over epochs 0…ramp_epochs, then a draw
// from U(post_ramp_mr_lo, post_ramp_mr_hi) taken from `rng`.
double masking_ratio(std::size_t epoch, const TrainConfig& cfg, Rng& rng);

struct NormalizationRecord {
  double scale = 1;  // max |sample| over the measured rows
};

// Divides every row by the measured-rows max-abs. Throws NumericError when
// all measured samples are zero.
std::pair<Matrix<double>, NormalizationRecord> normalize_scene(
    const Matrix<double>& rirs, std::span<const std::size_t> measured);
Matrix<double> denormalize_scene(const Matrix<double>& rirs, const NormalizationRecord& record);

// ‖Ĥ − H̄‖²_F / N for N target rows.
template <typename T>
Tensor<T> compute_loss(const Tensor<T>& prediction, const Tensor<T>& truth);

// Network input and normalized targets for one masked scene.
template <typename T>
struct Example {
  model::ModelInput<T> input;
  Tensor<T> truth;  // N × K
  NormalizationRecord norm;
};

template <typename T>
Example<T> make_example(const scenario::SceneInstance& scene, const scenario::RoiSpec& roi,
                        const scenario::MaskAssignment& mask);

struct EpochStats {
  std::size_t epoch = 0;
  double mean_loss = 0;
  double mean_mr = 0;
};

using EpochCallback = std::function<void(const EpochStats&)>;

// Mini-batch AdamW on the masked-reconstruction loss. Per-batch masks at
// masking_ratio(epoch). Throws NumericError on a non-finite loss.
template <typename T>
std::vector<EpochStats> train(RirFormer<T>& model, const scenario::Dataset& data,
                              const TrainConfig& cfg, const EpochCallback& on_epoch = {});

struct PhaseReport {
  std::size_t segment = 0;
  double loss_before = 0;  // segment loss over fixed masks of the training data
  double loss_after = 0;
  std::uint64_t frozen_hash_before = 0;  // parameters outside head t
  std::uint64_t frozen_hash_after = 0;
  std::vector<EpochStats> epochs;
};

// For each segment head in order, trains only that head for
// cfg.finetune_epochs on the loss restricted to its sample range.
template <typename T>
std::vector<PhaseReport> finetune_segments(RirFormer<T>& model, const scenario::Dataset& data,
                                           const TrainConfig& cfg,
                                           const EpochCallback& on_epoch = {});

// FNV-style hash over the bit patterns of every parameter outside `skip`.
template <typename T>
std::uint64_t parameter_hash(const RirFormer<T>& model, std::span<const Tensor<T>> skip = {});

// ---- evaluation ----

struct SceneResult {
  std::size_t scene_id = 0;
  double mr = 0;
  double nmse_db = 0;
  double cd = 0;
  std::uint64_t seed = 0;
  std::uint64_t mask_hash = 0;
  std::vector<double> segment_nmse_db;
};

struct AggregateRow {
  double mr = 0;
  double mean_nmse_db = 0;  // mean of per-scene dB values
  double mean_cd = 0;
  std::size_t n_scenes = 0;
};

struct MetricsReport {
  std::string method;
  std::vector<std::string> labels;
  std::vector<SceneResult> scenes;
  std::vector<AggregateRow> aggregate;  // one row per mr, in mr_list order
};

// Reconstructs the normalized target rows (N × K, target order) of one
// masked scene; `measured` is the normalized M × K measurement matrix.
using Predictor = std::function<Matrix<double>(const scenario::SceneInstance& scene,
                                               const scenario::MaskAssignment& mask,
                                               const Matrix<double>& measured)>;

// NMSE/CD over target rows in the normalized domain, masks from
// scenario::evaluation_mask(seed, scene, mr).
MetricsReport evaluate(const scenario::Dataset& data, std::span<const double> mr_list,
                       std::uint64_t seed, const Predictor& predict,
                       std::size_t segments = 8, const std::string& method = "model");

template <typename T>
Predictor model_predictor(const RirFormer<T>& model, const scenario::RoiSpec& roi);
// Returns the ground truth; for checking the evaluation path.
Predictor oracle_predictor();

// Mean wall-clock seconds of one forward pass over `repeats` passes.
template <typename T>
double time_inference(const RirFormer<T>& model, const scenario::SceneInstance& scene,
                      const scenario::RoiSpec& roi, double mr, std::size_t repeats = 100);

}  // namespace rirformer::training
