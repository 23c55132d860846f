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

// Seeded samplers. Each sampler is a pure function of its StreamKey: the
// key selects the random stream, the arguments select the model.

#ifndef SPECLAB_CORE_ENSEMBLES_HPP
#define SPECLAB_CORE_ENSEMBLES_HPP

#include <cstddef>

#include "core/matlin.hpp"
#include "core/rng.hpp"

namespace speclab {

// The 2n x 2n form with n diagonal blocks [[0, -1], [1, 0]].
struct SymplecticForm {
  static ComplexMatrix matrix(std::size_t half_n);
};

// Entries i.i.d. complex normal, real and imaginary parts N(0, 1/2).
ComplexMatrix ginibre_complex(std::size_t n, const StreamKey& key);
// Entries i.i.d. real N(0, 1).
ComplexMatrix ginibre_real(std::size_t n, const StreamKey& key);

UnitaryView haar_unitary(std::size_t n, const StreamKey& key);
UnitaryView haar_orthogonal(std::size_t n, const StreamKey& key);
UnitaryView haar_so(std::size_t n, const StreamKey& key);
UnitaryView haar_so_minus(std::size_t n, const StreamKey& key);
UnitaryView haar_su(std::size_t n, const StreamKey& key);
// Dimension 2 * half_n.
UnitaryView haar_symplectic(std::size_t half_n, const StreamKey& key);

UnitaryView sample_coe(std::size_t n, const StreamKey& key);
// Dimension 2 * half_n.
UnitaryView sample_cse(std::size_t half_n, const StreamKey& key);

// (G + G*) / sqrt(2n): every entry has variance 1/n.
HermitianView gue_wigner(std::size_t n, const StreamKey& key);

// Top-left k x k block of U A U*.
HermitianView compress(const HermitianView& a, const UnitaryView& u,
                       std::size_t k);
// U A U* + B.
HermitianView randomized_sum(const HermitianView& a, const HermitianView& b,
                             const UnitaryView& u);

// Composite models drawn from one key: GUE input on substream 0 and Haar
// unitary on substream 1 (compression); GUEs on substreams 0 and 1 and Haar
// unitary on substream 2 (randomized sum).
HermitianView sample_compression(std::size_t n, std::size_t k,
                                 const StreamKey& key);
HermitianView sample_randomized_sum(std::size_t n, const StreamKey& key);

// U A U*, symmetrized.
HermitianView conjugate(const HermitianView& a, const ComplexMatrix& u);

}  // namespace speclab

#endif  // SPECLAB_CORE_ENSEMBLES_HPP
