// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rvt/errors.hpp"

namespace rvt {

/// Dense row-major tensor of 64-bit floats. Values are immutable by
/// convention once an op has produced them; ops return fresh tensors.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), data_(checked_numel(shape_), 0.0) {}

  Tensor(std::vector<std::size_t> shape, std::vector<double> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_numel(shape_) != data_.size()) {
      throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                           " does not match shape product " +
                           std::to_string(checked_numel(shape_)));
    }
  }

  static Tensor scalar(double v) { return Tensor({1}, {v}); }

  static Tensor matrix(std::size_t rows, std::size_t cols,
                       std::vector<double> data) {
    return Tensor({rows, cols}, std::move(data));
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t ndim() const { return shape_.size(); }
  std::size_t numel() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  /// Row/column view of the trailing two extents; 1-d tensors are rows.
  std::size_t rows() const {
    if (shape_.size() <= 1) return shape_.empty() ? 0 : 1;
    return shape_[shape_.size() - 2];
  }
  std::size_t cols() const {
    return shape_.empty() ? 0 : shape_.back();
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  /// Extract the single element of a one-element tensor.
  double item() const {
    if (numel() != 1) {
      throw DimensionError("item() on tensor with " + std::to_string(numel()) +
                           " elements");
    }
    return data_[0];
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool all_finite() const {
    for (double v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  std::string shape_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(shape_[i]);
    }
    return s + "]";
  }

 private:
  static std::size_t checked_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) {
      if (e == 0) throw DimensionError("zero extent in tensor shape");
      n *= e;
    }
    return shape.empty() ? 0 : n;
  }

  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

}  // namespace rvt
