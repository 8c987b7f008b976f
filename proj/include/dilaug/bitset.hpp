// Copyright 2026 The dilaug Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DILAUG_BITSET_HPP
#define DILAUG_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dilaug {

/// Fixed-size bitset sized at runtime, just enough for greedy set cover.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool all() const noexcept { return count() == bits_; }

  /// |this \ other|
  std::size_t count_without(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    }
    return c;
  }

  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dilaug

#endif  // DILAUG_BITSET_HPP
