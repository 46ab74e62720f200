#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rirformer/diff/tensor.hpp"

namespace rirformer::diff {

struct AdamWOptions {
  double lr = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

// First/second moments per parameter, in parameter order.
template <typename T>
struct AdamWState {
  AdamWOptions options;
  std::uint64_t step = 0;
  std::vector<std::vector<T>> first_moment;
  std::vector<std::vector<T>> second_moment;
};

template <typename T>
AdamWState<T> make_adamw_state(std::span<const Tensor<T>> params,
                               AdamWOptions options = {});

// One bias-corrected Adam update with decoupled weight decay, reading each
// parameter's accumulated gradient (missing gradient = zero).
// Throws ContractError if the state does not match `params`.
template <typename T>
void adamw_step(std::span<Tensor<T>> params, AdamWState<T>& state);

template <typename T>
void zero_grads(std::span<Tensor<T>> params);

// Rescales all gradients so their joint L2 norm is at most `max_norm`.
// Returns the norm before clipping.
template <typename T>
double clip_grad_norm(std::span<Tensor<T>> params, double max_norm);

}  // namespace rirformer::diff
