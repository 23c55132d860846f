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

#ifndef SPECLAB_CORE_RNG_HPP
#define SPECLAB_CORE_RNG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace speclab {

enum class EnsembleTag : int {
  kOrthogonal = 0,
  kSo = 1,
  kSoMinus = 2,
  kUnitary = 3,
  kSu = 4,
  kSymplectic = 5,
  kCoe = 6,
  kCse = 7,
  kGueWigner = 8,
  kCompression = 9,
  kRandomizedSum = 10,
};

inline constexpr std::array<EnsembleTag, 11> kAllEnsembles = {
    EnsembleTag::kOrthogonal, EnsembleTag::kSo,        EnsembleTag::kSoMinus,
    EnsembleTag::kUnitary,    EnsembleTag::kSu,        EnsembleTag::kSymplectic,
    EnsembleTag::kCoe,        EnsembleTag::kCse,       EnsembleTag::kGueWigner,
    EnsembleTag::kCompression, EnsembleTag::kRandomizedSum};

// Lower-case CLI names: orthogonal, so, so_minus, unitary, su, symplectic,
// coe, cse, gue, compression, randomized_sum.
std::string_view ensemble_name(EnsembleTag tag);
std::optional<EnsembleTag> ensemble_from_name(std::string_view name);

// Group and circular ensembles live on the unit circle; the rest are
// Hermitian models on the line.
bool is_circle_ensemble(EnsembleTag tag);

// Matrix dimension for parameter n: 2n for SYMPLECTIC and CSE, else n.
std::uint64_t ambient_dim(EnsembleTag tag, std::uint64_t n);

struct StreamKey {
  std::uint64_t master_seed = 0;
  EnsembleTag ensemble = EnsembleTag::kUnitary;
  std::uint64_t n = 1;
  std::uint64_t replicate = 0;
  // Independent lane inside one key, for models built from several draws.
  std::uint32_t substream = 0;

  StreamKey with_substream(std::uint32_t s) const {
    StreamKey k = *this;
    k.substream = s;
    return k;
  }
  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

// Counter-based stream keyed by a hash of StreamKey. Every variate is a pure
// function of (key, position in stream).
class RandomStream {
 public:
  explicit RandomStream(const StreamKey& key);

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1).
  double next_uniform();
  // Standard normal via Box-Muller.
  double next_normal();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_{};
  std::uint32_t lane_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;
  std::optional<double> spare_normal_;
};

}  // namespace speclab

#endif  // SPECLAB_CORE_RNG_HPP
