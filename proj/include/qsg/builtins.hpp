// Copyright 2026 The qsg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qsg/semigroup.hpp"

namespace qsg {

/// Universal quantum family of all maps on an n-point space. Generators
/// a_ij (row i, column j) form one projection partition per row; the
/// comultiplication is matrix-style composition, the counit picks the
/// identity map, and the action on functions sends e_j to sum_i e_i (x) a_ij.
QuantumSemigroup qmap_Xn(size_t n);

/// Name of the generator in row i, column j (1-based) of qmap_Xn(n).
std::string xn_gen_name(size_t n, size_t i, size_t j);

/// Universal quantum family of all maps on the quantum space underlying the
/// 2x2 matrix algebra. Four generators alpha, beta, gamma, delta; relations
/// are the matrix entries of N^2 = 0 and NN* + N*N = 1 for the generator
/// image matrix N; the action sends n to nn* (x) alpha + n (x) beta +
/// n* (x) gamma + n*n (x) delta.
QuantumSemigroup qmap_M2();

/// The quantum commutant of the flip automorphism of the 2x2 matrix algebra
/// (conjugation by the basis-exchange unitary), presented directly on three
/// generators alpha, beta = beta*, gamma = gamma*. Cross-checked elsewhere
/// against the quotient of qmap_M2 by the flip's commutant ideal.
QuantumSemigroup m2_commutant_phi();

}  // namespace qsg
