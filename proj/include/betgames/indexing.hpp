// Copyright 2026 The betgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BETGAMES_INDEXING_HPP
#define BETGAMES_INDEXING_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace betgames {

// Mixed-radix index over a product space (action profiles, type profiles).
// Row-major: dimension 0 is the slowest, the last dimension the fastest.
class ProfileSpace {
 public:
  ProfileSpace() = default;

  explicit ProfileSpace(std::vector<int> radices) : radices_(std::move(radices)) {
    strides_.assign(radices_.size(), 1);
    size_ = 1;
    for (int d = static_cast<int>(radices_.size()) - 1; d >= 0; --d) {
      if (radices_[d] <= 0) throw std::invalid_argument("ProfileSpace: radix must be positive");
      strides_[d] = size_;
      size_ *= static_cast<std::size_t>(radices_[d]);
    }
  }

  std::size_t size() const { return size_; }
  int dims() const { return static_cast<int>(radices_.size()); }
  int radix(int d) const { return radices_[d]; }
  std::size_t stride(int d) const { return strides_[d]; }
  const std::vector<int>& radices() const { return radices_; }

  std::size_t index_of(std::span<const int> digits) const {
    std::size_t idx = 0;
    for (int d = 0; d < dims(); ++d) idx += strides_[d] * static_cast<std::size_t>(digits[d]);
    return idx;
  }

  void decode(std::size_t index, std::span<int> out) const {
    for (int d = 0; d < dims(); ++d) {
      out[d] = static_cast<int>((index / strides_[d]) % static_cast<std::size_t>(radices_[d]));
    }
  }

  std::vector<int> decode(std::size_t index) const {
    std::vector<int> out(static_cast<std::size_t>(dims()));
    decode(index, out);
    return out;
  }

  int digit(std::size_t index, int d) const {
    return static_cast<int>((index / strides_[d]) % static_cast<std::size_t>(radices_[d]));
  }

  // Space with dimension `skip` removed (profiles of "all players but i").
  ProfileSpace without(int skip) const {
    std::vector<int> r;
    r.reserve(radices_.size() - 1);
    for (int d = 0; d < dims(); ++d)
      if (d != skip) r.push_back(radices_[d]);
    return ProfileSpace(std::move(r));
  }

  // Index of the full profile assembled from an index into without(skip) plus
  // the digit for the skipped dimension.
  std::size_t embed(const ProfileSpace& others, std::size_t others_index, int skip,
                    int skip_digit) const {
    std::size_t idx = strides_[skip] * static_cast<std::size_t>(skip_digit);
    int od = 0;
    for (int d = 0; d < dims(); ++d) {
      if (d == skip) continue;
      idx += strides_[d] * static_cast<std::size_t>(others.digit(others_index, od));
      ++od;
    }
    return idx;
  }

  // Index into without(skip) obtained by dropping dimension `skip`.
  std::size_t project(const ProfileSpace& others, std::size_t full_index, int skip) const {
    std::size_t idx = 0;
    int od = 0;
    for (int d = 0; d < dims(); ++d) {
      if (d == skip) continue;
      idx += others.stride(od) * static_cast<std::size_t>(digit(full_index, d));
      ++od;
    }
    return idx;
  }

 private:
  std::vector<int> radices_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace betgames

#endif  // BETGAMES_INDEXING_HPP
