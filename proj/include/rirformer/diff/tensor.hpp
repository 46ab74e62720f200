#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rirformer::diff {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);
std::string shape_string(const Shape& shape);

template <typename T>
struct TensorStorage {
  Shape shape;
  std::vector<T> data;
  std::vector<T> grad;  // empty until the first accumulation
  bool requires_grad = false;
};

// Shared handle to dense row-major storage. Copies alias the same buffer;
// use clone() for a deep copy.
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(Shape shape, std::vector<T> data, bool requires_grad = false);

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor filled(Shape shape, T value, bool requires_grad = false);
  static Tensor scalar(T value, bool requires_grad = false);

  bool defined() const { return static_cast<bool>(storage_); }
  const Shape& shape() const { return storage_->shape; }
  std::size_t rank() const { return storage_->shape.size(); }
  std::size_t size() const { return storage_->data.size(); }
  // Leading rows / last-axis width for 2-D views; rank-1 tensors are 1×n.
  std::size_t rows() const;
  std::size_t cols() const;

  std::span<T> data() { return storage_->data; }
  std::span<const T> data() const { return storage_->data; }
  T item() const;
  T& operator[](std::size_t i) { return storage_->data[i]; }
  const T& operator[](std::size_t i) const { return storage_->data[i]; }

  bool requires_grad() const { return storage_->requires_grad; }
  void set_requires_grad(bool value) { storage_->requires_grad = value; }

  bool has_grad() const { return !storage_->grad.empty(); }
  // Allocates a zero gradient on first use.
  std::span<T> grad();
  std::span<const T> grad() const { return storage_->grad; }
  void zero_grad();

  Tensor clone() const;
  Tensor detach() const;  // shares nothing, requires_grad = false

  const TensorStorage<T>* id() const { return storage_.get(); }

 private:
  std::shared_ptr<TensorStorage<T>> storage_;
};

// Throws NumericError naming `where` if any entry is NaN or Inf.
template <typename T>
void check_finite(std::span<const T> values, const std::string& where);

// When enabled, every op validates its output. Off by default.
void set_debug_checks(bool enabled);
bool debug_checks();

extern template class Tensor<float>;
extern template class Tensor<double>;

}  // namespace rirformer::diff
