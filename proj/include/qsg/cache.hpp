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

#include <string>

#include "qsg/rewrite.hpp"

namespace qsg {

/// Serializes a completed system. Format: one header line
/// `qsg-rewrite v1 <presentation-hash-hex16> <degree-cap>` followed by one
/// `LHS -> RHS` line per rule in canonical text form. Byte-exact round-trip.
std::string cache_text(const RewriteSystem& rs, const Alphabet& alpha);

void cache_save(const RewriteSystem& rs, const std::string& path, const Alphabet& alpha);

/// Loads and validates: header shape, hash match against `pres`
/// (HashMismatch otherwise), parseable rules over the presentation's
/// alphabet, and inter-reducedness of every lhs (CorruptCache otherwise).
RewriteSystem cache_load(const std::string& path, const Presentation& pres);

}  // namespace qsg
