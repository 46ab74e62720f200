#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rirformer/diff/tensor.hpp"

namespace rirformer::diff {

// Records the backward rules of ops executed while it is active. Ops only
// record when at least one input requires a gradient, so inference without
// an active tape, or with frozen parameters, builds nothing.
template <typename T>
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  void record(std::function<void()> backward_rule) {
    rules_.push_back(std::move(backward_rule));
  }

  std::size_t size() const { return rules_.size(); }

  // Seeds d(loss)/d(loss) = 1 and runs every recorded rule in reverse
  // order. Gradients accumulate into existing buffers. The tape is consumed.
  void backward(Tensor<T>& loss);

  void clear() { rules_.clear(); }

 private:
  std::vector<std::function<void()>> rules_;
};

template <typename T>
Tape<T>*& active_tape() {
  thread_local Tape<T>* tape = nullptr;
  return tape;
}

// Makes `tape` the recording target for the current thread for the
// lifetime of the guard.
template <typename T>
class TapeScope {
 public:
  explicit TapeScope(Tape<T>& tape) : previous_(active_tape<T>()) {
    active_tape<T>() = &tape;
  }
  ~TapeScope() { active_tape<T>() = previous_; }
  TapeScope(const TapeScope&) = delete;
  TapeScope& operator=(const TapeScope&) = delete;

 private:
  Tape<T>* previous_;
};

// Suspends recording, e.g. for frozen sub-networks evaluated mid-step.
template <typename T>
class NoGradScope {
 public:
  NoGradScope() : previous_(active_tape<T>()) { active_tape<T>() = nullptr; }
  ~NoGradScope() { active_tape<T>() = previous_; }
  NoGradScope(const NoGradScope&) = delete;
  NoGradScope& operator=(const NoGradScope&) = delete;

 private:
  Tape<T>* previous_;
};

extern template class Tape<float>;
extern template class Tape<double>;

}  // namespace rirformer::diff
