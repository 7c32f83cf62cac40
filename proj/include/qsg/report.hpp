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
#include <vector>

namespace qsg {

enum class CheckStatus {
    Pass,
    Fail,
    Inconclusive,
};

/// One verified fact: a stable kebab-case name, an outcome, and, for
/// failures, a certificate (usually a residue in canonical text form).
struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

/// An ordered list of checks with two renderings: human-readable lines and
/// a flat `key=value` form whose bytes are stable across runs.
struct Report {
    std::vector<CheckLine> lines;

    void pass(const std::string& name, const std::string& detail = "");
    void fail(const std::string& name, const std::string& detail);
    void inconclusive(const std::string& name, const std::string& detail);
    void merge(const Report& other);

    bool ok() const;
    /// 0 when everything passed, 1 on any failure, else 2 when something
    /// was inconclusive.
    int exit_code() const;

    std::string render_human() const;
    std::string render_machine() const;
};

}  // namespace qsg
