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

#include "qsg/word.hpp"

#include <algorithm>

namespace qsg {

namespace {
void leg_normalize(std::vector<Letter>& ls) {
    std::stable_sort(ls.begin(), ls.end(),
                     [](const Letter& a, const Letter& b) { return a.leg < b.leg; });
}
}  // namespace

Word::Word(std::vector<Letter> letters) : ls(std::move(letters)) { leg_normalize(ls); }

Word Word::concat(const Word& a, const Word& b) {
    std::vector<Letter> ls;
    ls.reserve(a.ls.size() + b.ls.size());
    ls.insert(ls.end(), a.ls.begin(), a.ls.end());
    ls.insert(ls.end(), b.ls.begin(), b.ls.end());
    leg_normalize(ls);
    Word w;
    w.ls = std::move(ls);
    return w;
}

Word Word::star() const {
    std::vector<Letter> ls;
    ls.reserve(this->ls.size());
    for (auto it = this->ls.rbegin(); it != this->ls.rend(); ++it) ls.push_back(it->star());
    leg_normalize(ls);
    Word w;
    w.ls = std::move(ls);
    return w;
}

Word Word::shifted(uint8_t leg) const {
    Word w = *this;
    for (auto& l : w.ls) l.leg = static_cast<uint8_t>(l.leg + leg);
    return w;
}

Word Word::leg_block(uint8_t leg) const {
    Word w;
    for (const auto& l : ls)
        if (l.leg == leg) {
            Letter c = l;
            c.leg = 0;
            w.ls.push_back(c);
        }
    return w;
}

size_t Word::leg_degree(uint8_t leg) const {
    size_t n = 0;
    for (const auto& l : ls) n += (l.leg == leg);
    return n;
}

int deglex_cmp(const Word& a, const Word& b) {
    if (a.ls.size() != b.ls.size()) return a.ls.size() < b.ls.size() ? -1 : 1;
    for (size_t i = 0; i < a.ls.size(); ++i) {
        auto c = a.ls[i] <=> b.ls[i];
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

Alphabet::Alphabet(std::vector<GenDecl> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i].name == gens_[j].name)
                throw DuplicateGenerator("generator declared twice: " + gens_[i].name);
}

uint32_t Alphabet::index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<uint32_t>(i);
    throw UnknownLetter("unknown generator: " + name);
}

bool Alphabet::has(const std::string& name) const {
    for (const auto& g : gens_)
        if (g.name == name) return true;
    return false;
}

Letter Alphabet::letter(uint32_t gen, bool starred, uint8_t leg) const {
    const GenDecl& d = gens_.at(gen);
    Letter l;
    l.gen = gen;
    l.leg = leg;
    l.self_adjoint = d.self_adjoint;
    l.starred = starred && !d.self_adjoint;
    return l;
}

}  // namespace qsg
