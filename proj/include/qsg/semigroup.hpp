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

#include <memory>
#include <optional>
#include <vector>

#include "qsg/engine.hpp"
#include "qsg/report.hpp"

namespace qsg {

/// A finite dimensional C*-algebra given by a fixed linear basis with
/// multiplication and involution structure constants. Two kinds are
/// supported: functions on n points (basis of minimal projections) and the
/// 2x2 matrix algebra (basis of matrix units written via the generator n).
class FDCStar {
  public:
    enum class Kind {
        FunctionsOnPoints,
        MatrixAlgebra2,
    };

    static FDCStar points(size_t n);
    static FDCStar matrix2();

    Kind kind() const { return kind_; }
    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// b_i b_j = sum_k mult(i,j)[k] b_k
    const std::vector<Scalar>& mult(size_t i, size_t j) const { return mult_[i * dim() + j]; }
    /// b_i* = sum_k star(i)[k] b_k
    const std::vector<Scalar>& star(size_t i) const { return star_[i]; }
    /// 1 = sum_k unit()[k] b_k
    const std::vector<Scalar>& unit() const { return unit_; }

  private:
    FDCStar() = default;
    void validate() const;  // associativity and *-compatibility, throws on failure

    Kind kind_ = Kind::FunctionsOnPoints;
    std::vector<std::string> names_;
    std::vector<std::vector<Scalar>> mult_;
    std::vector<std::vector<Scalar>> star_;
    std::vector<Scalar> unit_;
};

/// An element of M (x) <polynomial algebra>: one coefficient per basis
/// element of M. Coefficients may live on any tensor legs of the algebra
/// side; multiplication only touches the M side via structure constants.
struct MElement {
    std::vector<NCPoly> coeff;
};

MElement m_mul(const FDCStar& m, const MElement& x, const MElement& y);
MElement m_star(const FDCStar& m, const MElement& x);
MElement m_unit(const FDCStar& m);
MElement m_sub(const MElement& x, const MElement& y);

/// An action Phi: M -> M (x) A in column form: q[i][j] is the coefficient
/// of b_i in Phi(b_j), a polynomial over the algebra (leg 0).
struct SemigroupAction {
    FDCStar m;
    std::vector<std::vector<NCPoly>> q;

    MElement column(size_t j) const;
};

/// A presented algebra together with comultiplication, counit, and an
/// optional action on a finite dimensional C*-algebra. The presentation is
/// shared so generator maps can hold stable pointers across copies.
struct QuantumSemigroup {
    std::shared_ptr<const Presentation> algebra;
    GeneratorMap delta;   ///< into tensor(algebra, algebra)
    GeneratorMap counit;  ///< into scalars (arity-0 space)
    std::optional<SemigroupAction> action;

    const Presentation& pres() const { return *algebra; }
};

/// Bundles a semigroup. `delta_images` live over two tensor legs of
/// `algebra`; `counit_images` must be scalar polynomials.
QuantumSemigroup make_semigroup(Presentation algebra, std::vector<NCPoly> delta_images,
                                std::vector<NCPoly> counit_images,
                                std::optional<SemigroupAction> action = std::nullopt);

/// The identity generator map of a presentation (g -> g on leg 0).
GeneratorMap identity_map(const Presentation& p);

/// Applies one generator map per source leg: the leg-k block of each word
/// is mapped through maps[k] and the image is shifted to start at target
/// leg offsets[k]. Images of distinct legs must not collide.
NCPoly apply_legs(const NCPoly& p, const std::vector<const GeneratorMap*>& maps,
                  const std::vector<uint8_t>& offsets);

/// Checks that the delta images satisfy every algebra relation in A (x) A.
Report verify_comultiplication(const QuantumSemigroup& s, Engine& eng, int cap = 0);

/// Checks (delta (x) id) o delta = (id (x) delta) o delta per generator in
/// the threefold tensor.
Report verify_coassociativity(const QuantumSemigroup& s, Engine& eng, int cap = 0);

/// Checks the counit is a morphism and both counit laws on generators.
Report verify_counit(const QuantumSemigroup& s, Engine& eng, int cap = 0);

/// Checks that the columns of q (coefficients over `space`) satisfy the
/// structural relations of m: self-adjoint orthogonal idempotents summing
/// to the unit for a point algebra; N^2 = 0, NN* + N*N = 1 and forced
/// product columns for the 2x2 matrix algebra.
Report verify_structure_map(const FDCStar& m, const std::vector<std::vector<NCPoly>>& q,
                            const Space& space, Engine& eng, int cap = 0);

/// Checks the action: (i) the structural relations of M hold for the image
/// (partition of unity for points; N^2 = 0 and NN* + N*N = 1 for the
/// matrix algebra), (ii) (Phi (x) id) o Phi = (id (x) delta) o Phi,
/// (iii) (id (x) counit) o Phi = id_M.
Report verify_action(const QuantumSemigroup& s, Engine& eng, int cap = 0);

/// All four verifiers merged (action checks skipped when absent).
Report verify_semigroup(const QuantumSemigroup& s, Engine& eng, int cap = 0);

}  // namespace qsg
