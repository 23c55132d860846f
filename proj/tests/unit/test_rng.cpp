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

#include <doctest.h>

#include <cmath>

#include "core/rng.hpp"

using namespace speclab;

TEST_SUITE("rng") {

// Known-answer vectors of the reference Philox4x32-10 implementation.
TEST_CASE("philox known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
        A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                      {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                      {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("ensemble names round-trip") {
  for (EnsembleTag t : kAllEnsembles) {
    CHECK(ensemble_from_name(ensemble_name(t)) == t);
  }
  CHECK_FALSE(ensemble_from_name("gaussian").has_value());
  CHECK(ensemble_name(EnsembleTag::kSoMinus) == "so_minus");
  CHECK(ambient_dim(EnsembleTag::kCse, 3) == 6);
  CHECK(ambient_dim(EnsembleTag::kSymplectic, 4) == 8);
  CHECK(ambient_dim(EnsembleTag::kSu, 4) == 4);
  CHECK(is_circle_ensemble(EnsembleTag::kCoe));
  CHECK_FALSE(is_circle_ensemble(EnsembleTag::kGueWigner));
}

TEST_CASE("streams are pure functions of the key") {
  const StreamKey k{42, EnsembleTag::kUnitary, 8, 3, 0};
  RandomStream a(k), b(k);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RandomStream c(k), d(StreamKey{42, EnsembleTag::kUnitary, 8, 4, 0});
  RandomStream e(k.with_substream(1));
  RandomStream f(StreamKey{43, EnsembleTag::kUnitary, 8, 3, 0});
  const std::uint64_t x = c.next_u64();
  CHECK(x != d.next_u64());
  CHECK(x != e.next_u64());
  CHECK(x != f.next_u64());
}

TEST_CASE("uniform and normal variates") {
  RandomStream rs(StreamKey{1, EnsembleTag::kGueWigner, 1, 0, 0});
  const int n = 200000;
  double su = 0.0, sn = 0.0, sn2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rs.next_uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    su += u;
    const double z = rs.next_normal();
    sn += z;
    sn2 += z * z;
  }
  // Tolerances are 5 standard errors.
  CHECK(std::abs(su / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(sn / n) < 5.0 / std::sqrt(n));
  CHECK(std::abs(sn2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

}  // TEST_SUITE
