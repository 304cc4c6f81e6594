// Copyright 2026 The jcontainers Authors
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

#ifndef JC_VERTEX_SET_HPP_
#define JC_VERTEX_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace jc {

inline constexpr int kMaxVertices = 64;

// A subset of [0, 64) packed into one machine word. Ordering is numeric on
// the bit pattern, which is the enumeration order used everywhere.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= std::uint64_t{1} << v;
  }

  static VertexSet from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.bits_ |= std::uint64_t{1} << v;
    return s;
  }
  // {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }
  std::string to_string() const;

  class Iterator {
   public:
    constexpr explicit Iterator(std::uint64_t b) : b_(b) {}
    constexpr int operator*() const { return std::countr_zero(b_); }
    constexpr Iterator& operator++() { b_ &= b_ - 1; return *this; }
    constexpr bool operator!=(const Iterator& o) const { return b_ != o.b_; }

   private:
    std::uint64_t b_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

// Calls fn(subset) for every subset of `s`, in increasing numeric order.
template <class Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
  const std::uint64_t mask = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(VertexSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

// Calls fn(subset) for every k-subset of [0, n), in increasing numeric order.
// Returns early when fn returns false.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(VertexSet());
    return;
  }
  std::uint64_t x = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit_bit = n >= 64 ? 0 : (std::uint64_t{1} << n);
  while (true) {
    if (!fn(VertexSet(x))) return;
    // Gosper's hack.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) return;  // overflow past bit 63
    x = (((r ^ x) >> 2) / c) | r;
    if (limit_bit != 0 && x >= limit_bit) return;
    if (limit_bit == 0 && r < c) return;
  }
}

}  // namespace jc

#endif  // JC_VERTEX_SET_HPP_
