// Copyright 2026 The speclab Authors.
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

#include "core/rng.hpp"

#include <cmath>

#include "core/matlin.hpp"

namespace speclab {

namespace {

constexpr std::array<std::string_view, 11> kNames = {
    "orthogonal", "so",  "so_minus", "unitary", "su",            "symplectic",
    "coe",        "cse", "gue",      "compression", "randomized_sum"};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_key(const StreamKey& k) {
  std::uint64_t h = splitmix64(k.master_seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(k.ensemble));
  h = splitmix64(h ^ k.n);
  h = splitmix64(h ^ k.replicate);
  return h;
}

}  // namespace

std::string_view ensemble_name(EnsembleTag tag) {
  return kNames[static_cast<std::size_t>(tag)];
}

std::optional<EnsembleTag> ensemble_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<EnsembleTag>(i);
  }
  return std::nullopt;
}

bool is_circle_ensemble(EnsembleTag tag) {
  switch (tag) {
    case EnsembleTag::kGueWigner:
    case EnsembleTag::kCompression:
    case EnsembleTag::kRandomizedSum:
      return false;
    default:
      return true;
  }
}

std::uint64_t ambient_dim(EnsembleTag tag, std::uint64_t n) {
  return (tag == EnsembleTag::kSymplectic || tag == EnsembleTag::kCse) ? 2 * n
                                                                       : n;
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  constexpr std::uint64_t kM0 = 0xD2511F53u;
  constexpr std::uint64_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = kM0 * ctr[0];
    const std::uint64_t p1 = kM1 * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

RandomStream::RandomStream(const StreamKey& key) : lane_(key.substream) {
  const std::uint64_t h = hash_key(key);
  key_ = {static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
}

void RandomStream::refill() {
  buf_ = philox4x32_10({static_cast<std::uint32_t>(block_),
                        static_cast<std::uint32_t>(block_ >> 32), lane_, 0u},
                       key_);
  ++block_;
  used_ = 0;
}

std::uint64_t RandomStream::next_u64() {
  if (used_ > 2) refill();
  const std::uint64_t v = (static_cast<std::uint64_t>(buf_[used_]) << 32) |
                          buf_[used_ + 1];
  used_ += 2;
  return v;
}

double RandomStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() {
  if (spare_normal_) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_normal_ = r * std::sin(kTwoPi * u2);
  return r * std::cos(kTwoPi * u2);
}

}  // namespace speclab
