#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rirformer/model/model.hpp"
#include "rirformer/training/training.hpp"

namespace rirformer::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kDataError = 2, kNumericFailure = 3 };

enum class Precision { kF32, kF64 };

struct ExperimentConfig {
  scenario::Experiment experiment = scenario::Experiment::kExp1;
  std::uint64_t seed = 0;
  std::size_t train_scenes = 200;
  std::size_t eval_scenes = 10;
  std::filesystem::path out = "out";
  // Empty paths resolve to files inside `out`.
  std::filesystem::path train_data;
  std::filesystem::path eval_data;
  std::filesystem::path checkpoint;
  std::vector<double> mr_list = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  model::ModelConfig model;
  training::TrainConfig train;
  bool finetune_after_train = false;
  Precision precision = Precision::kF32;
  std::string ablation = "none";
  std::size_t timing_repeats = 100;

  std::filesystem::path train_data_path() const;
  std::filesystem::path eval_data_path() const;
  std::filesystem::path checkpoint_path() const;

  void validate() const;  // throws ConfigError
};

// Sub-stream seeds derived from the master seed.
struct SeedPlan {
  std::uint64_t train_data, eval_data, model_init, training, evaluation;
};
SeedPlan seed_plan(std::uint64_t master);

// Reads a JSON config. Unknown keys are errors. rir_length follows the
// experiment unless the file sets it.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig config_from_json(const std::string& text);

// Applies "none", "no-sinusoidal", "no-segments" or "no-refiner".
void apply_ablation(model::ModelConfig& config, const std::string& ablation);

std::vector<double> parse_mr_list(const std::string& text);

// Per-scene columns: scene_id, mr, nmse_db, cd, seed, mask_hash, method,
// labels, then seg<t>_nmse_db for each segment.
void write_scene_csv(const std::filesystem::path& path, const training::MetricsReport& report);
// Columns: mr, mean_nmse_db, mean_cd, n_scenes, method.
void write_aggregate_csv(const std::filesystem::path& path,
                         const training::MetricsReport& report);
void write_loss_csv(const std::filesystem::path& path,
                    const std::vector<training::EpochStats>& stats);

struct Curve {
  std::string method;
  std::vector<training::AggregateRow> rows;
};
std::vector<training::AggregateRow> read_aggregate_csv(const std::filesystem::path& path);
// NMSE-vs-MR and CD-vs-MR panels side by side.
void write_mr_plot(const std::filesystem::path& path, const std::vector<Curve>& curves);

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace rirformer::cli
