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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsg/poly.hpp"

namespace qsg {

/// A defining relation (polynomial understood as "= 0") with a tag saying
/// where it came from: "input:<name>", "closure:<desc>", "quotient:<desc>".
struct Relation {
    NCPoly poly;
    std::string tag;
};

/// Declares a list of generators to be mutually orthogonal self-adjoint
/// idempotents summing to the unit. Orthogonality and the unit sum are
/// injected as explicit relations when the presentation is built; for three
/// or more members they are not formal consequences of the rest.
struct ClosureAnnotation {
    std::vector<uint32_t> members;
};

/// A finitely presented *-algebra.
struct Presentation {
    std::string name;
    Alphabet alphabet;
    std::vector<Relation> relations;
    std::vector<ClosureAnnotation> closures;
    /// FNV-1a of the canonical serialization; identifies the presentation
    /// in caches and reports.
    uint64_t hash = 0;
};

/// Builds a presentation: validates generator names, expands closure
/// annotations into relations, and computes the hash.
Presentation make_presentation(std::string name, std::vector<GenDecl> gens,
                               std::vector<Relation> relations,
                               std::vector<ClosureAnnotation> closures = {});

/// Same algebra plus extra relations. Tags them "quotient:<tag>";
/// quotienting by nothing returns a hash-identical presentation.
Presentation quotient(const Presentation& p, const std::vector<NCPoly>& extra,
                      const std::string& tag);

/// Coproduct presentation: disjoint generators, united relations.
/// Generator name collisions are rejected.
Presentation free_product(std::string name, const Presentation& a, const Presentation& b);

/// Generators sorted by name, then relation text lines sorted and deduped.
/// Two presentations of the same data serialize identically.
std::string canonical_serialization(const Presentation& p);

uint64_t fnv1a(const std::string& s);

/// A tensor product of presentations; letters carry the factor index in
/// their leg. Zero factors is the scalar algebra. Cross-leg letters commute
/// by word normalization, so no stored relations are needed for that.
struct Space {
    std::vector<const Presentation*> factors;

    Space() = default;
    Space(std::initializer_list<const Presentation*> fs) : factors(fs) {}
    explicit Space(std::vector<const Presentation*> fs) : factors(std::move(fs)) {}
    static Space tensor_power(const Presentation& p, size_t k);

    size_t arity() const { return factors.size(); }
    std::vector<const Alphabet*> alphabets() const;
};

/// A unital *-homomorphism candidate defined on generators. Stars are
/// forced: the image of g* is image(g)*.
struct GeneratorMap {
    const Presentation* source = nullptr;
    Space target;
    std::vector<NCPoly> images;  // one per source generator, over `target`
    bool verified = false;
};

/// Homomorphic extension of a generator map to a polynomial.
NCPoly apply(const GeneratorMap& f, const NCPoly& p);

}  // namespace qsg
