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

#include "qsg/report.hpp"

namespace qsg {

namespace {

const char* status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "PASS";
        case CheckStatus::Fail:
            return "FAIL";
        default:
            return "INCONCLUSIVE";
    }
}

const char* status_key(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        default:
            return "inconclusive";
    }
}

}  // namespace

void Report::pass(const std::string& name, const std::string& detail) {
    lines.push_back(CheckLine{name, CheckStatus::Pass, detail});
}

void Report::fail(const std::string& name, const std::string& detail) {
    lines.push_back(CheckLine{name, CheckStatus::Fail, detail});
}

void Report::inconclusive(const std::string& name, const std::string& detail) {
    lines.push_back(CheckLine{name, CheckStatus::Inconclusive, detail});
}

void Report::merge(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

bool Report::ok() const {
    for (const CheckLine& l : lines) {
        if (l.status != CheckStatus::Pass) {
            return false;
        }
    }
    return true;
}

int Report::exit_code() const {
    bool inconclusive = false;
    for (const CheckLine& l : lines) {
        if (l.status == CheckStatus::Fail) {
            return 1;
        }
        if (l.status == CheckStatus::Inconclusive) {
            inconclusive = true;
        }
    }
    return inconclusive ? 2 : 0;
}

std::string Report::render_human() const {
    std::string out;
    for (const CheckLine& l : lines) {
        out += l.name;
        out += ": ";
        out += status_word(l.status);
        if (!l.detail.empty()) {
            out += "  ";
            out += l.detail;
        }
        out += "\n";
    }
    return out;
}

std::string Report::render_machine() const {
    std::string out;
    for (const CheckLine& l : lines) {
        out += l.name;
        out += "=";
        out += status_key(l.status);
        out += "\n";
        if (!l.detail.empty()) {
            out += l.name;
            out += ".detail=";
            out += l.detail;
            out += "\n";
        }
    }
    return out;
}

}  // namespace qsg
