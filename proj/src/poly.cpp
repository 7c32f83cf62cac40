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

#include "qsg/poly.hpp"

namespace qsg {

NCPoly NCPoly::term(const Word& w, const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
}

bool NCPoly::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const std::pair<const Word, Scalar>& NCPoly::leading() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return *terms_.rbegin();
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
}

NCPoly NCPoly::star() const {
    NCPoly p;
    for (const auto& [w, c] : terms_) p.add_term(w.star(), c.conj());
    return p;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly p;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) p.add_term(Word::concat(wa, wb), ca * cb);
    return p;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly q;
    if (c.is_zero()) return q;
    for (const auto& [w, k] : p.terms_) q.terms_.emplace(w, c * k);
    return q;
}

NCPoly NCPoly::shifted(uint8_t leg) const {
    NCPoly p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w.shifted(leg), c);
    return p;
}

namespace {

std::string letter_text(const Letter& l, const std::vector<const Alphabet*>& legs) {
    std::string s = legs.at(l.leg)->decl(l.gen).name;
    if (l.starred) s += "*";
    return s;
}

std::string block_text(const Word& w, uint8_t leg, const std::vector<const Alphabet*>& legs) {
    std::string s;
    for (const auto& l : w.ls) {
        if (l.leg != leg) continue;
        if (!s.empty()) s += ".";
        s += letter_text(l, legs);
    }
    return s.empty() ? "1" : s;
}

std::string word_text(const Word& w, const std::vector<const Alphabet*>& legs) {
    std::string s;
    for (uint8_t leg = 0; leg < legs.size(); ++leg) {
        if (leg) s += " (*) ";
        s += block_text(w, leg, legs);
    }
    return s;
}

/// |c| with the printed sign factored out: sign is the sign of the real
/// part, or of the imaginary part for purely imaginary values.
bool is_negative(const Scalar& c) {
    if (c.re() != 0) return c.re() < 0;
    return c.im() < 0;
}

}  // namespace

std::string to_text(const Word& w, const std::vector<const Alphabet*>& legs) {
    return word_text(w, legs);
}

std::string to_text(const Word& w, const Alphabet& alphabet) {
    return word_text(w, {&alphabet});
}

std::string to_text(const NCPoly& p, const std::vector<const Alphabet*>& legs) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Word& w = it->first;
        Scalar c = it->second;
        bool neg = is_negative(c);
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (w.empty()) {
            s += c.is_one() ? "1" : "(" + c.str() + ")1";
        } else {
            if (!c.is_one()) s += "(" + c.str() + ")";
            s += word_text(w, legs);
        }
    }
    return s;
}

std::string to_text(const NCPoly& p, const Alphabet& alphabet) {
    return to_text(p, std::vector<const Alphabet*>{&alphabet});
}

}  // namespace qsg
