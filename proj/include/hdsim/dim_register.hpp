// Copyright 2026 The hdsim Authors
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

#pragma once

#include <span>
#include <string>
#include <vector>

namespace hdsim {

/// Largest total Hilbert-space dimension a register may describe.
inline constexpr int kDefaultDimensionCap = 4096;

/// Ordered list of subsystem dimensions (each >= 2) with optional labels.
///
/// Flat indexing is row-major: the FIRST subsystem is the most significant
/// digit, so for dims (2,2,4) the basis state (a,b,c) sits at flat index
/// (a*2 + b)*4 + c.  This convention makes merging adjacent subsystems a
/// pure reinterpretation of the amplitude vector.
class DimRegister {
 public:
  explicit DimRegister(std::vector<int> dims,
                       std::vector<std::string> labels = {},
                       int dimension_cap = kDefaultDimensionCap);

  int size() const { return static_cast<int>(dims_.size()); }
  int dim(int subsystem) const;
  int total_dim() const { return total_; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Row-major stride of a subsystem (product of all dims after it).
  int stride(int subsystem) const;

  int flat_index(std::span<const int> digits) const;
  std::vector<int> digits(int flat) const;

  /// Dimension equality; labels are metadata and do not participate.
  bool same_dims(const DimRegister& other) const;

  /// Register made of the picked subsystems, in the order given.
  DimRegister subset(std::span<const int> subsystems) const;
  /// Register with the given subsystems removed (order preserved).
  DimRegister erased(std::span<const int> subsystems) const;

  static DimRegister concat(const DimRegister& a, const DimRegister& b);

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  std::vector<int> strides_;
  int total_ = 0;
};

}  // namespace hdsim
