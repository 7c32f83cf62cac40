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
#include <string>
#include <vector>

#include "qsg/scalar.hpp"
#include "qsg/word.hpp"

namespace qsg {

/// Noncommutative *-polynomial: a finite sum of scalar-weighted words.
///
/// Terms are kept in a deglex-ordered map and zero coefficients are removed
/// immediately, so equal polynomials have identical representations.
class NCPoly {
  public:
    using Terms = std::map<Word, Scalar, WordDeglexLess>;

    NCPoly() = default;

    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit() { return term(Word(), Scalar(1)); }
    static NCPoly scalar(const Scalar& c) { return term(Word(), c); }
    static NCPoly term(const Word& w, const Scalar& c);
    static NCPoly letter(const Letter& l) {
        Word w;
        w.ls.push_back(l);
        return term(w, Scalar(1));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    size_t size() const { return terms_.size(); }
    size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
    const Terms& terms() const { return terms_; }

    /// Deglex-maximal term; throws ZeroPolynomial on the zero polynomial.
    const std::pair<const Word, Scalar>& leading() const;

    /// Coefficient of a word (zero if absent).
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    NCPoly operator-() const;
    NCPoly star() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Scalar& c, const NCPoly& p);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Re-tag all letters by `leg` legs upward (tensor embedding).
    NCPoly shifted(uint8_t leg) const;

  private:
    Terms terms_;
};

/// Canonical text form. Terms are printed in descending deglex order,
/// non-unit coefficients parenthesized, letters joined with `.`, adjoints
/// as a postfix `*`, and tensor legs separated by ` (*) `. `legs` supplies
/// one alphabet per tensor position; its size fixes how many leg blocks are
/// printed. The output parses back to an equal polynomial.
std::string to_text(const NCPoly& p, const std::vector<const Alphabet*>& legs);
std::string to_text(const NCPoly& p, const Alphabet& alphabet);
std::string to_text(const Word& w, const std::vector<const Alphabet*>& legs);
std::string to_text(const Word& w, const Alphabet& alphabet);

}  // namespace qsg
