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

#include <optional>
#include <vector>

#include "qsg/presentation.hpp"

namespace qsg {

/// One oriented relation lhs -> rhs: lhs is a single word, deglex-greater
/// than every word of rhs, with its coefficient normalized away.
struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

enum class SystemStatus {
    /// Every overlap ambiguity of combined degree <= degree_cap resolves
    /// to zero. Nothing is claimed above the cap.
    CompleteUpToCap,
    /// The ideal contains the unit; every polynomial rewrites to zero.
    Inconsistent,
};

/// An inter-reduced rewrite system for one presentation at a fixed cap.
/// Rules are kept sorted by ascending deglex of their left-hand sides.
struct RewriteSystem {
    std::vector<RewriteRule> rules;
    int degree_cap = 8;
    SystemStatus status = SystemStatus::CompleteUpToCap;
    uint64_t presentation_hash = 0;
};

/// Reduction strategies. Completed systems give the same normal form under
/// either; the pair exists so tests can check that.
enum class Strategy {
    LeftmostInnermost,
    RightmostOutermost,
};

/// One rewrite event: `word` (the deglex-maximal word of the working
/// polynomial at that moment, with coefficient `coeff`) was rewritten by
/// `rule` at position `pos`.
struct TraceStep {
    size_t rule;
    size_t pos;
    Word word;
    Scalar coeff;
};

/// Orients a single relation: largest word becomes the left-hand side.
/// Throws InconsistentPresentation if the relation is a nonzero scalar.
RewriteRule orient(const NCPoly& relation);

/// Orients a batch: zero relations are dropped, every nonzero relation
/// contributes its own rule and (when different) the rule of its adjoint.
std::vector<RewriteRule> orient(const std::vector<NCPoly>& relations);

/// Fully reduces `p`. Each step strictly decreases the deglex-maximal word
/// of the remaining (not yet irreducible) part, so this terminates.
/// Throws DegreeOverflow when deg(p) exceeds the system's cap.
NCPoly normal_form(const RewriteSystem& sys, const NCPoly& p,
                   Strategy strategy = Strategy::LeftmostInnermost,
                   std::vector<TraceStep>* trace = nullptr);

/// Re-runs a recorded reduction step by step; used to audit soundness.
NCPoly replay(const RewriteSystem& sys, const NCPoly& p, const std::vector<TraceStep>& trace);

struct ZeroCheck {
    bool zero;
    NCPoly residue;  ///< normal form; meaningful when not zero
};

/// Semi-decision for ideal membership at the cap: zero is a proof,
/// a nonzero residue only says "not settled at this cap".
ZeroCheck is_zero_mod_ideal(const RewriteSystem& sys, const NCPoly& p);

/// Knuth-Bendix/Buchberger completion up to `degree_cap`, deterministic.
/// Input relations are star-closed before orientation. Throws
/// InconsistentPresentation when a relation reduces to a nonzero scalar and
/// CapExceeded when an input relation itself exceeds the cap.
RewriteSystem complete(const Presentation& pres, int degree_cap);

/// The system describing the zero algebra: everything reduces to zero.
RewriteSystem inconsistent_system(uint64_t presentation_hash, int degree_cap);

}  // namespace qsg
