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

#include "hdsim/dim_register.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdsim {

DimRegister::DimRegister(std::vector<int> dims, std::vector<std::string> labels,
                         int dimension_cap)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) {
    throw std::invalid_argument("DimRegister: dims must be non-empty");
  }
  if (!labels_.empty() && labels_.size() != dims_.size()) {
    throw std::invalid_argument("DimRegister: label count must match dims");
  }
  long long total = 1;
  for (int d : dims_) {
    if (d < 2) {
      throw std::invalid_argument("DimRegister: every dimension must be >= 2");
    }
    total *= d;
    if (total > dimension_cap) {
      throw std::invalid_argument("DimRegister: total dimension exceeds cap of " +
                                  std::to_string(dimension_cap));
    }
  }
  total_ = static_cast<int>(total);
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * dims_[i + 1];
  }
}

int DimRegister::dim(int subsystem) const {
  if (subsystem < 0 || subsystem >= size()) {
    throw std::invalid_argument("DimRegister: subsystem index out of range");
  }
  return dims_[subsystem];
}

int DimRegister::stride(int subsystem) const {
  if (subsystem < 0 || subsystem >= size()) {
    throw std::invalid_argument("DimRegister: subsystem index out of range");
  }
  return strides_[subsystem];
}

int DimRegister::flat_index(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != size()) {
    throw std::invalid_argument("DimRegister: digit count must match register size");
  }
  int flat = 0;
  for (int i = 0; i < size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i]) {
      throw std::invalid_argument("DimRegister: digit out of range");
    }
    flat += digits[i] * strides_[i];
  }
  return flat;
}

std::vector<int> DimRegister::digits(int flat) const {
  if (flat < 0 || flat >= total_) {
    throw std::invalid_argument("DimRegister: flat index out of range");
  }
  std::vector<int> out(dims_.size());
  for (int i = 0; i < size(); ++i) {
    out[i] = (flat / strides_[i]) % dims_[i];
  }
  return out;
}

bool DimRegister::same_dims(const DimRegister& other) const {
  return dims_ == other.dims_;
}

DimRegister DimRegister::subset(std::span<const int> subsystems) const {
  std::vector<int> dims;
  std::vector<std::string> labels;
  dims.reserve(subsystems.size());
  for (int s : subsystems) {
    dims.push_back(dim(s));
    if (!labels_.empty()) labels.push_back(labels_[s]);
  }
  return DimRegister(std::move(dims), std::move(labels));
}

DimRegister DimRegister::erased(std::span<const int> subsystems) const {
  std::vector<int> dims;
  std::vector<std::string> labels;
  for (int i = 0; i < size(); ++i) {
    if (std::find(subsystems.begin(), subsystems.end(), i) == subsystems.end()) {
      dims.push_back(dims_[i]);
      if (!labels_.empty()) labels.push_back(labels_[i]);
    }
  }
  return DimRegister(std::move(dims), std::move(labels));
}

DimRegister DimRegister::concat(const DimRegister& a, const DimRegister& b) {
  std::vector<int> dims = a.dims_;
  dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
  std::vector<std::string> labels;
  if (!a.labels_.empty() || !b.labels_.empty()) {
    labels = a.labels_.empty() ? std::vector<std::string>(a.dims_.size()) : a.labels_;
    if (b.labels_.empty()) {
      labels.insert(labels.end(), b.dims_.size(), std::string());
    } else {
      labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
    }
  }
  return DimRegister(std::move(dims), std::move(labels));
}

}  // namespace hdsim
