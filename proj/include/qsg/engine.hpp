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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qsg/rewrite.hpp"

namespace qsg {

/// Completion front end: memoizes completed systems by (presentation hash,
/// cap) and optionally persists them to a cache directory. Also extends
/// normal forms to tensor spaces, reducing each leg against its own factor.
class Engine {
  public:
    /// Cache directory from the QSG_CACHE_DIR environment variable, if set.
    Engine();
    /// Explicit cache directory; empty string disables disk caching.
    explicit Engine(std::string cache_dir);

    int default_cap() const { return default_cap_; }
    void set_default_cap(int cap) { default_cap_ = cap; }
    const std::string& cache_dir() const { return cache_dir_; }

    /// Completed system for `pres` at `cap` (0 means the default cap).
    /// Propagates InconsistentPresentation; the failure is memoized so
    /// repeated queries stay cheap.
    std::shared_ptr<const RewriteSystem> system(const Presentation& pres, int cap = 0);

    NCPoly nf(const Presentation& pres, const NCPoly& p, int cap = 0,
              Strategy strategy = Strategy::LeftmostInnermost);
    ZeroCheck zero(const Presentation& pres, const NCPoly& p, int cap = 0);

    /// Normal form over a tensor space: each term's leg blocks reduce
    /// independently against their factor's system, then recombine.
    /// Throws MismatchedSpace when a letter's leg has no factor.
    NCPoly nf(const Space& space, const NCPoly& p, int cap = 0);
    ZeroCheck zero(const Space& space, const NCPoly& p, int cap = 0);

  private:
    std::string cache_dir_;
    int default_cap_ = 8;
    std::map<std::pair<uint64_t, int>, std::shared_ptr<const RewriteSystem>> memo_;
};

enum class MorphismStatus {
    Verified,
    Violations,
    /// A relation image overflowed the cap, so nothing could be decided.
    Inconclusive,
};

struct MorphismViolation {
    std::string tag;   ///< tag of the offending source relation
    NCPoly relation;   ///< the source relation
    NCPoly residue;    ///< normal form of its image (nonzero)
};

struct MorphismReport {
    MorphismStatus status = MorphismStatus::Verified;
    std::vector<MorphismViolation> violations;
    std::string note;

    bool ok() const { return status == MorphismStatus::Verified; }
};

/// Checks that a generator map is a well-defined unital *-homomorphism:
/// the image of every source relation must reduce to zero over the target
/// space. Marks `f.verified` on success. A nonzero residue is reported as
/// a violation at this cap; a DegreeOverflow makes the result Inconclusive.
MorphismReport check_morphism(GeneratorMap& f, Engine& eng, int cap = 0);

}  // namespace qsg
