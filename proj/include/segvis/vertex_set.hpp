// Copyright 2026 The segvis Authors.
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

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace segvis {

using VertexId = int;

// Fixed-capacity bitset over graph vertices. 256 bits covers every point set
// with n <= 23.
class VertexSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = kWords * 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) set(v);
  }

  static VertexSet full(int count) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (count >= lo + 64)
        s.words_[w] = ~std::uint64_t{0};
      else if (count > lo)
        s.words_[w] = (std::uint64_t{1} << (count - lo)) - 1;
    }
    return s;
  }

  void set(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  // Smallest member, or -1.
  VertexId first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  static VertexSet from(const std::vector<VertexId>& vs) {
    VertexSet s;
    for (VertexId v : vs) s.set(v);
    return s;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace segvis
