// Copyright 2026 The painfacets Authors.
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

#ifndef PAINFACETS_RNG_H_
#define PAINFACETS_RNG_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace painfacets {

// SplitMix64. Used instead of the <random> engines/distributions so that
// every draw is bit-identical across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % n;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return UINT64_MAX; }
  result_type operator()() { return Next(); }

 private:
  std::uint64_t state_;
};

// Fisher-Yates with the portable generator above.
template <typename T>
void Shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.Below(i);
    std::swap(items[i - 1], items[j]);
  }
}

// Order-sensitive 64-bit hash combiner for deriving independent streams.
class StreamKey {
 public:
  explicit StreamKey(std::uint64_t seed) : h_(Mix(seed ^ 0x6A09E667F3BCC908ULL)) {}

  StreamKey& Add(std::uint64_t v) {
    h_ = Mix(h_ ^ (v + 0x9E3779B97F4A7C15ULL + (h_ << 6) + (h_ >> 2)));
    return *this;
  }

  StreamKey& Add(std::string_view s) {
    // FNV-1a over the bytes, then fold in with the length as a separator.
    std::uint64_t f = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
      f ^= c;
      f *= 0x100000001B3ULL;
    }
    return Add(f).Add(static_cast<std::uint64_t>(s.size()));
  }

  std::uint64_t value() const { return h_; }
  Rng MakeRng() const { return Rng(h_); }

 private:
  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t h_;
};

}  // namespace painfacets

#endif  // PAINFACETS_RNG_H_
