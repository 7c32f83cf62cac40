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

#include "qsg/presentation.hpp"

#include <algorithm>
#include <set>

namespace qsg {

namespace {

/// Expansion of one partition closure: members become self-adjoint
/// idempotents, pairwise orthogonal, summing to the unit. p* = p is a
/// stored relation only for members not already flagged self-adjoint.
void expand_closure(const Alphabet& a, const ClosureAnnotation& cl,
                    std::vector<Relation>& out) {
    std::string who;
    for (uint32_t g : cl.members) who += (who.empty() ? "" : ",") + a.decl(g).name;
    for (uint32_t g : cl.members) {
        const std::string& n = a.decl(g).name;
        NCPoly p = NCPoly::letter(a.letter(g));
        if (!a.decl(g).self_adjoint) {
            NCPoly ps = NCPoly::letter(a.letter(g, true));
            out.push_back({ps - p, "closure:star(" + n + ")"});
        }
        out.push_back({p * p - p, "closure:idem(" + n + ")"});
    }
    for (uint32_t g : cl.members)
        for (uint32_t h : cl.members) {
            if (g == h) continue;
            NCPoly p = NCPoly::letter(a.letter(g));
            NCPoly q = NCPoly::letter(a.letter(h));
            out.push_back({p * q, "closure:orth(" + a.decl(g).name + "," + a.decl(h).name + ")"});
        }
    NCPoly sum;
    for (uint32_t g : cl.members) sum += NCPoly::letter(a.letter(g));
    out.push_back({sum - NCPoly::unit(), "closure:sum(" + who + ")"});
}

void validate_poly(const Alphabet& a, const NCPoly& p) {
    for (const auto& t : p.terms())
        for (const auto& l : t.first.ls) {
            if (l.leg != 0) throw UnknownLetter("relation letter carries a tensor leg");
            if (l.gen >= a.size()) throw UnknownLetter("letter index out of range");
        }
}

}  // namespace

Presentation make_presentation(std::string name, std::vector<GenDecl> gens,
                               std::vector<Relation> relations,
                               std::vector<ClosureAnnotation> closures) {
    Presentation p;
    p.name = std::move(name);
    p.alphabet = Alphabet(std::move(gens));
    for (const auto& r : relations) validate_poly(p.alphabet, r.poly);
    p.relations = std::move(relations);
    for (const auto& cl : closures) {
        for (uint32_t g : cl.members)
            if (g >= p.alphabet.size()) throw UnknownLetter("closure member out of range");
        expand_closure(p.alphabet, cl, p.relations);
    }
    p.closures = std::move(closures);
    p.hash = fnv1a(canonical_serialization(p));
    return p;
}

Presentation quotient(const Presentation& p, const std::vector<NCPoly>& extra,
                      const std::string& tag) {
    Presentation q = p;
    for (size_t i = 0; i < extra.size(); ++i) {
        validate_poly(q.alphabet, extra[i]);
        q.relations.push_back({extra[i], "quotient:" + tag + "[" + std::to_string(i) + "]"});
    }
    q.hash = fnv1a(canonical_serialization(q));
    return q;
}

namespace {
NCPoly reindex(const NCPoly& p, uint32_t offset) {
    NCPoly q;
    for (const auto& [w, c] : p.terms()) {
        Word v = w;
        for (auto& l : v.ls) l.gen += offset;
        q.add_term(v, c);
    }
    return q;
}
}  // namespace

Presentation free_product(std::string name, const Presentation& a, const Presentation& b) {
    std::vector<GenDecl> gens = a.alphabet.decls();
    gens.insert(gens.end(), b.alphabet.decls().begin(), b.alphabet.decls().end());
    uint32_t off = static_cast<uint32_t>(a.alphabet.size());
    std::vector<Relation> rels = a.relations;
    for (const auto& r : b.relations) rels.push_back({reindex(r.poly, off), r.tag});
    std::vector<ClosureAnnotation> cls = a.closures;
    for (const auto& cl : b.closures) {
        ClosureAnnotation c2 = cl;
        for (auto& g : c2.members) g += off;
        cls.push_back(c2);
    }
    // Closures were already expanded in the factors; rebuild without
    // re-expanding by passing no closures and reattaching the annotations.
    Presentation p;
    p.name = std::move(name);
    p.alphabet = Alphabet(std::move(gens));
    p.relations = std::move(rels);
    p.closures = std::move(cls);
    p.hash = fnv1a(canonical_serialization(p));
    return p;
}

std::string canonical_serialization(const Presentation& p) {
    std::vector<std::string> gens;
    for (const auto& g : p.alphabet.decls())
        gens.push_back("gen " + g.name + (g.self_adjoint ? " sa" : ""));
    std::sort(gens.begin(), gens.end());
    std::set<std::string> rels;
    for (const auto& r : p.relations) rels.insert(to_text(r.poly, p.alphabet));
    std::string s;
    for (const auto& g : gens) s += g + "\n";
    for (const auto& r : rels) s += "rel " + r + "\n";
    return s;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Space Space::tensor_power(const Presentation& p, size_t k) {
    Space s;
    s.factors.assign(k, &p);
    return s;
}

std::vector<const Alphabet*> Space::alphabets() const {
    std::vector<const Alphabet*> as;
    as.reserve(factors.size());
    for (const auto* f : factors) as.push_back(&f->alphabet);
    return as;
}

NCPoly apply(const GeneratorMap& f, const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly img = NCPoly::scalar(c);
        for (const auto& l : w.ls) {
            const NCPoly& base = f.images.at(l.gen);
            img = img * (l.starred ? base.star() : base);
        }
        out += img;
    }
    return out;
}

}  // namespace qsg
