// Copyright 2026 The nmtlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NMTLAB_TENSOR_HPP_
#define NMTLAB_TENSOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nmtlab/util.hpp"

namespace nmtlab {

// Dense row-major tensor of doubles. Everything in the library runs in
// double precision.
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<double> data;
  bool requires_grad = false;

  Tensor() = default;
  Tensor(std::vector<int64_t> s, std::vector<double> d, bool rg = false);

  static Tensor zeros(std::vector<int64_t> s);
  static Tensor full(std::vector<int64_t> s, double v);
  static Tensor scalar(double v);

  int rank() const { return static_cast<int>(shape.size()); }
  int64_t numel() const;
  int64_t dim(int i) const { return shape[static_cast<size_t>(i)]; }
  // Row/column view of the trailing matrix: rows() folds all leading dims.
  int64_t rows() const;
  int64_t cols() const;

  double* ptr() { return data.data(); }
  const double* ptr() const { return data.data(); }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }
  bool all_finite() const;
  double item() const;  // scalar tensors only
};

std::string shape_str(const std::vector<int64_t>& shape);
int64_t shape_numel(const std::vector<int64_t>& shape);

}  // namespace nmtlab

#endif  // NMTLAB_TENSOR_HPP_
