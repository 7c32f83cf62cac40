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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsg/semigroup.hpp"

namespace qsg {

/// A permutation of {1..n}, stored 0-based: img[i] is the image of i.
struct Perm {
    std::vector<uint32_t> img;

    static Perm identity(size_t n);
    size_t n() const { return img.size(); }
    uint32_t operator()(uint32_t i) const { return img.at(i); }
    Perm inverse() const;
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// Composition acting right to left: compose(s, t)(i) = s(t(i)).
Perm compose(const Perm& s, const Perm& t);

/// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
/// Cycles are applied right to left; "()", "e" and "id" name the identity.
/// A point may appear at most once per cycle and must lie in 1..n.
Perm parse_cycles(const std::string& text, size_t n);

/// Cycle-notation rendering with 1-based points; identity prints as "()".
std::string to_cycles(const Perm& p);

/// A finite set of permutations of an n-point space.
struct PermFamily {
    size_t n = 0;
    std::vector<Perm> perms;  // sorted, deduplicated
};

PermFamily make_perm_family(size_t n, std::vector<Perm> perms);

/// Closure under composition. The empty family closes to {identity};
/// inverses arise as powers, so no separate inversion step is needed.
PermFamily group_closure(const PermFamily& f);

/// A *-automorphism of the 2x2 matrix algebra given by conjugation with an
/// exact unitary: m -> u m u*.
struct M2Automorphism {
    std::array<std::array<Scalar, 2>, 2> u;

    /// Conjugation by the basis-exchange matrix [[0,1],[1,0]]; sends the
    /// generator n to n*.
    static M2Automorphism swap_conjugation();
    /// Validates u*u = 1 exactly; throws Error otherwise.
    static M2Automorphism conjugation(const std::array<std::array<Scalar, 2>, 2>& u);

    /// Action on the basis {nn*, n, n*, n*n}: entry [i][j] is the
    /// coefficient of basis element i in the image of basis element j.
    std::array<std::array<Scalar, 4>, 4> basis_action() const;
};

/// A quantum family of maps on M: a morphism M -> M (x) (legs), stored as
/// the matrix q with q[i][j] = coefficient of basis element i in the image
/// of basis element j.
struct QuantumFamily {
    FDCStar m;
    Space legs;
    std::vector<std::vector<NCPoly>> q;
};

/// The family carried by a quantum semigroup's action, over the single leg
/// of its own algebra.
QuantumFamily action_family(const QuantumSemigroup& s);

/// Composition (f (x) id) o g over the concatenated legs:
/// q[i][j] = sum_k f.q[i][k] * shift(g.q[k][j]).
QuantumFamily compose_families(const QuantumFamily& f, const QuantumFamily& g);

/// Structural check of a family (projection columns summing to the unit,
/// or the matrix-generator relations), over the family's own legs.
Report verify_family(const QuantumFamily& f, Engine& eng, int cap = 0);

/// A classical family: finitely many *-endomorphisms of M given by exact
/// scalar basis actions, plus the encoding over B = functions on the family
/// (the j-th basis element maps to sum over members of image (x) member's
/// indicator).
struct ClassicalFamily {
    FDCStar m;
    std::vector<std::string> labels;                        // one per member
    std::vector<std::vector<std::vector<Scalar>>> members;  // dim x dim basis actions
    std::shared_ptr<const Presentation> b;                  // functions on the family
    std::optional<PermFamily> perm_source;  // set when built from permutations

    /// The encoding as a quantum family over {b}.
    QuantumFamily psi() const;
};

ClassicalFamily family_of(const PermFamily& f);
ClassicalFamily family_of(const M2Automorphism& a);

/// Generators of the commutant ideal: for each member action P and basis
/// pair (i, j), the element sum_k P[k][j] q[i][k] - sum_k P[i][k] q[k][j]
/// of the semigroup's algebra. Zeros dropped, duplicates removed, output
/// sorted by (degree, canonical text).
std::vector<NCPoly> commutant_ideal(const QuantumSemigroup& s, const ClassicalFamily& f);

/// Residues of the same differences for an arbitrary quantum family over
/// its own legs; all zero means the family commutes with f member-wise.
std::vector<NCPoly> invariance_residues(const QuantumFamily& fam, const ClassicalFamily& f);

/// The commutant quantum semigroup: quotient by the commutant ideal with
/// the comultiplication, counit, and action pushed through, re-verified,
/// and (for permutation families) checked invariant under group closure.
struct CommutantResult {
    QuantumSemigroup semigroup;
    std::vector<NCPoly> ideal;
    bool inconsistent = false;  // the ideal contains the unit
    Report report;
};

CommutantResult build_commutant(const QuantumSemigroup& s, const ClassicalFamily& f, Engine& eng,
                                int cap = 0);

/// Mechanized analysis of the commutant of the transposition (n-1 n) on an
/// n-point space, n >= 3: builds the commutant, checks the forced
/// identifications (corner entries coincide, off-corner columns vanish),
/// checks the upper-left block against the relations of the (n-2)-point
/// family semigroup, and compares the commutant against the free product
/// of that block algebra with the n-point corner algebra via generator
/// correspondences verified in both directions.
struct TranspositionAnalysis {
    QuantumSemigroup parent;    // the full family semigroup on n points
    QuantumSemigroup sub;       // the (n-2)-point family semigroup
    CommutantResult commutant;
    std::shared_ptr<const Presentation> free_pres;  // block algebra * corner algebra
    Report checks;
};

TranspositionAnalysis analyze_transposition(size_t n, Engine& eng, int cap = 0);

}  // namespace qsg
