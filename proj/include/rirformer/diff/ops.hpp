#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rirformer/diff/tensor.hpp"

namespace rirformer::diff {

// Differentiable ops. Inputs are treated as 2-D (rows × last axis) where
// relevant. Each op records its backward rule on the active tape when any
// input requires a gradient.

template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> scale(const Tensor<T>& a, T factor);

// a[R×C] + bias[C] broadcast over rows.
template <typename T>
Tensor<T> add_row(const Tensor<T>& a, const Tensor<T>& bias);

// Exact (erf) GELU.
template <typename T>
Tensor<T> gelu(const Tensor<T>& a);

template <typename T>
Tensor<T> softmax_rows(const Tensor<T>& x);

inline constexpr double kLayerNormEpsilon = 1e-5;

template <typename T>
Tensor<T> layer_norm(const Tensor<T>& x, const Tensor<T>& gain,
                     const Tensor<T>& bias,
                     double epsilon = kLayerNormEpsilon);

// Multi-head scaled dot-product self-attention over all tokens, no mask.
// q, k, v are [L×D]; D must be divisible by `heads`.
template <typename T>
Tensor<T> attention(const Tensor<T>& q, const Tensor<T>& k,
                    const Tensor<T>& v, std::size_t heads);

template <typename T>
Tensor<T> concat_cols(std::span<const Tensor<T>> parts);

template <typename T>
Tensor<T> concat_cols(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> slice_cols(const Tensor<T>& x, std::size_t begin, std::size_t end);

template <typename T>
Tensor<T> gather_rows(const Tensor<T>& x, std::span<const std::size_t> rows);

// Places row i of x at output row rows[i]; all other rows are zero and
// receive no gradient path.
template <typename T>
Tensor<T> scatter_rows(const Tensor<T>& x, std::span<const std::size_t> rows,
                       std::size_t total_rows);

template <typename T>
Tensor<T> sum(const Tensor<T>& x);

}  // namespace rirformer::diff
