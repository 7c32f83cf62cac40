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

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "qsg/errors.hpp"

namespace qsg {

/// One occurrence of a generator or its adjoint inside a word.
///
/// `leg` is the tensor position (0 for plain algebras). A self-adjoint
/// generator is never stored starred: star() returns it unchanged.
struct Letter {
    uint32_t gen = 0;
    uint8_t leg = 0;
    bool starred = false;
    bool self_adjoint = false;

    Letter star() const {
        Letter l = *this;
        if (!l.self_adjoint) l.starred = !l.starred;
        return l;
    }

    /// Order key: legs are major so tensor factors form contiguous blocks;
    /// within a leg, declaration order with each generator's star right
    /// after it.
    std::tuple<uint8_t, uint32_t, bool> rank() const { return {leg, gen, starred}; }

    friend bool operator==(const Letter& a, const Letter& b) { return a.rank() == b.rank(); }
    friend auto operator<=>(const Letter& a, const Letter& b) { return a.rank() <=> b.rank(); }
};

/// A product of letters; the empty word is the unit.
///
/// Letters of distinct legs commute, so words are kept leg-normalized:
/// letters stably sorted by leg. Within a leg the order of letters is
/// meaningful (the algebra is free there).
struct Word {
    std::vector<Letter> ls;

    Word() = default;
    explicit Word(std::vector<Letter> letters);

    size_t degree() const { return ls.size(); }
    bool empty() const { return ls.empty(); }

    /// Product of two leg-normalized words.
    static Word concat(const Word& a, const Word& b);

    /// Involution: reverses the word and stars every letter.
    Word star() const;

    /// Re-tag every letter into leg `leg` + its current leg.
    Word shifted(uint8_t leg) const;

    /// Letters of one leg, as a leg-0 word over that factor.
    Word leg_block(uint8_t leg) const;
    size_t leg_degree(uint8_t leg) const;

    friend bool operator==(const Word& a, const Word& b) { return a.ls == b.ls; }
};

/// Degree-lexicographic comparison: shorter words first, ties broken
/// letter by letter by Letter::rank. Total, and compatible with
/// multiplication on both sides.
int deglex_cmp(const Word& a, const Word& b);

inline bool operator<(const Word& a, const Word& b) { return deglex_cmp(a, b) < 0; }

struct WordDeglexLess {
    bool operator()(const Word& a, const Word& b) const { return deglex_cmp(a, b) < 0; }
};

/// A generator declaration. Declaration order fixes the monomial order.
struct GenDecl {
    std::string name;
    bool self_adjoint = false;

    friend bool operator==(const GenDecl&, const GenDecl&) = default;
};

/// The generator set of one presentation, with name lookup.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<GenDecl> gens);

    size_t size() const { return gens_.size(); }
    const GenDecl& decl(uint32_t gen) const { return gens_.at(gen); }
    const std::vector<GenDecl>& decls() const { return gens_; }

    /// Index of a declared name; throws UnknownLetter otherwise.
    uint32_t index(const std::string& name) const;
    bool has(const std::string& name) const;

    /// A letter for generator `gen`; stars of self-adjoint generators
    /// collapse at construction.
    Letter letter(uint32_t gen, bool starred = false, uint8_t leg = 0) const;

  private:
    std::vector<GenDecl> gens_;
};

}  // namespace qsg
