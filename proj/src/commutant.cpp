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

#include "qsg/commutant.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "qsg/builtins.hpp"
#include "qsg/errors.hpp"

namespace qsg {

Perm Perm::identity(size_t n) {
    Perm p;
    for (size_t i = 0; i < n; ++i) {
        p.img.push_back(static_cast<uint32_t>(i));
    }
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img.assign(img.size(), 0);
    for (uint32_t i = 0; i < img.size(); ++i) {
        p.img.at(img[i]) = i;
    }
    return p;
}

Perm compose(const Perm& s, const Perm& t) {
    if (s.n() != t.n()) {
        throw std::invalid_argument("permutation sizes differ");
    }
    Perm p;
    for (uint32_t i = 0; i < t.n(); ++i) {
        p.img.push_back(s(t(i)));
    }
    return p;
}

Perm parse_cycles(const std::string& text, size_t n) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.compare(pos, 2, "id") == 0 || text.compare(pos, 1, "e") == 0) {
        pos += text.compare(pos, 2, "id") == 0 ? 2 : 1;
        skip_ws();
        if (pos != text.size()) {
            throw ParseError(1, pos + 1, "trailing text after identity permutation");
        }
        return Perm::identity(n);
    }
    std::vector<std::vector<uint32_t>> cycles;
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw ParseError(1, pos + 1, "expected '(' in cycle notation");
        }
        ++pos;
        std::vector<uint32_t> cycle;
        std::set<uint32_t> seen;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError(1, pos + 1, "expected a point index in cycle notation");
            }
            uint32_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<uint32_t>(text[pos] - '0');
                ++pos;
            }
            if (v < 1 || v > n) {
                throw ParseError(1, pos, "point " + std::to_string(v) + " outside 1.." +
                                             std::to_string(n));
            }
            if (!seen.insert(v - 1).second) {
                throw ParseError(1, pos, "point " + std::to_string(v) + " repeated in a cycle");
            }
            cycle.push_back(v - 1);
            skip_ws();
        }
        if (pos >= text.size()) {
            throw ParseError(1, pos + 1, "unterminated cycle");
        }
        ++pos;  // ')'
        if (!cycle.empty()) {
            cycles.push_back(std::move(cycle));
        }
        skip_ws();
    }
    // Cycles apply right to left, matching function composition.
    Perm p = Perm::identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        Perm c = Perm::identity(n);
        const auto& cy = *it;
        for (size_t i = 0; i < cy.size(); ++i) {
            c.img[cy[i]] = cy[(i + 1) % cy.size()];
        }
        p = compose(c, p);
    }
    return p;
}

std::string to_cycles(const Perm& p) {
    std::string out;
    std::vector<bool> done(p.n(), false);
    for (uint32_t i = 0; i < p.n(); ++i) {
        if (done[i] || p(i) == i) {
            done[i] = true;
            continue;
        }
        out += "(";
        uint32_t j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j + 1);
            done[j] = true;
            j = p(j);
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

PermFamily make_perm_family(size_t n, std::vector<Perm> perms) {
    for (const Perm& p : perms) {
        if (p.n() != n) {
            throw std::invalid_argument("permutation size differs from the point count");
        }
        Perm check = p;
        std::sort(check.img.begin(), check.img.end());
        for (uint32_t i = 0; i < n; ++i) {
            if (check.img[i] != i) {
                throw std::invalid_argument("not a bijection: " + to_cycles(p));
            }
        }
    }
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return PermFamily{n, std::move(perms)};
}

PermFamily group_closure(const PermFamily& f) {
    std::set<Perm> closed(f.perms.begin(), f.perms.end());
    closed.insert(Perm::identity(f.n));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> current(closed.begin(), closed.end());
        for (const Perm& a : current) {
            for (const Perm& b : current) {
                if (closed.insert(compose(a, b)).second) {
                    grew = true;
                }
            }
        }
    }
    return PermFamily{f.n, std::vector<Perm>(closed.begin(), closed.end())};
}

M2Automorphism M2Automorphism::swap_conjugation() {
    return conjugation({{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}});
}

M2Automorphism M2Automorphism::conjugation(const std::array<std::array<Scalar, 2>, 2>& u) {
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            Scalar dot(0);
            for (size_t k = 0; k < 2; ++k) {
                dot += u[k][i].conj() * u[k][j];
            }
            if (dot != (i == j ? Scalar(1) : Scalar(0))) {
                throw Error("conjugating matrix is not unitary");
            }
        }
    }
    return M2Automorphism{u};
}

std::array<std::array<Scalar, 4>, 4> M2Automorphism::basis_action() const {
    // Basis {nn*, n, n*, n*n} = matrix units {E11, E12, E21, E22}; the image
    // of E_ab under m -> u m u* has E_cd coefficient u[c][a] * conj(u[d][b]).
    std::array<std::array<Scalar, 4>, 4> p;
    for (size_t a = 0; a < 2; ++a) {
        for (size_t b = 0; b < 2; ++b) {
            for (size_t c = 0; c < 2; ++c) {
                for (size_t d = 0; d < 2; ++d) {
                    p[c * 2 + d][a * 2 + b] = u[c][a] * u[d][b].conj();
                }
            }
        }
    }
    return p;
}

QuantumFamily action_family(const QuantumSemigroup& s) {
    if (!s.action) {
        throw std::invalid_argument("the semigroup carries no action");
    }
    return QuantumFamily{s.action->m, Space{s.algebra.get()}, s.action->q};
}

QuantumFamily compose_families(const QuantumFamily& f, const QuantumFamily& g) {
    if (f.m.kind() != g.m.kind() || f.m.dim() != g.m.dim()) {
        throw MismatchedSpace("families act on different algebras");
    }
    const size_t d = f.m.dim();
    const uint8_t shift = static_cast<uint8_t>(f.legs.arity());
    QuantumFamily out{f.m, Space{}, {}};
    out.legs.factors = f.legs.factors;
    out.legs.factors.insert(out.legs.factors.end(), g.legs.factors.begin(),
                            g.legs.factors.end());
    out.q.assign(d, std::vector<NCPoly>(d));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            NCPoly entry;
            for (size_t k = 0; k < d; ++k) {
                entry += f.q[i][k] * g.q[k][j].shifted(shift);
            }
            out.q[i][j] = entry;
        }
    }
    return out;
}

Report verify_family(const QuantumFamily& f, Engine& eng, int cap) {
    return verify_structure_map(f.m, f.q, f.legs, eng, cap);
}

QuantumFamily ClassicalFamily::psi() const {
    const size_t d = m.dim();
    QuantumFamily out{m, Space{b.get()}, {}};
    out.q.assign(d, std::vector<NCPoly>(d));
    for (size_t s = 0; s < members.size(); ++s) {
        NCPoly indicator = NCPoly::letter(b->alphabet.letter(static_cast<uint32_t>(s)));
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) {
                if (!members[s][i][j].is_zero()) {
                    out.q[i][j] += members[s][i][j] * indicator;
                }
            }
        }
    }
    return out;
}

namespace {

/// The algebra of functions on a k-member family: one self-adjoint
/// idempotent indicator per member, orthogonal, summing to the unit.
std::shared_ptr<const Presentation> family_points(size_t k) {
    std::vector<GenDecl> gens;
    ClosureAnnotation all;
    for (size_t s = 0; s < k; ++s) {
        gens.push_back({"s" + std::to_string(s + 1), true});
        all.members.push_back(static_cast<uint32_t>(s));
    }
    return std::make_shared<const Presentation>(
        make_presentation("family_points" + std::to_string(k), std::move(gens), {}, {all}));
}

}  // namespace

ClassicalFamily family_of(const PermFamily& f) {
    PermFamily use = f;
    if (use.perms.empty()) {
        use.perms.push_back(Perm::identity(f.n));
    }
    ClassicalFamily out{FDCStar::points(f.n), {}, {}, family_points(use.perms.size()), use};
    for (const Perm& p : use.perms) {
        out.labels.push_back(to_cycles(p));
        std::vector<std::vector<Scalar>> action(f.n, std::vector<Scalar>(f.n, Scalar(0)));
        for (uint32_t j = 0; j < f.n; ++j) {
            action[p(j)][j] = Scalar(1);
        }
        out.members.push_back(std::move(action));
    }
    return out;
}

ClassicalFamily family_of(const M2Automorphism& a) {
    ClassicalFamily out{FDCStar::matrix2(), {}, {}, family_points(1), std::nullopt};
    auto p = a.basis_action();
    std::vector<std::vector<Scalar>> action(4, std::vector<Scalar>(4));
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            action[i][j] = p[i][j];
        }
    }
    bool is_swap = a.u == M2Automorphism::swap_conjugation().u;
    out.labels.push_back(is_swap ? "swap" : "unitary");
    out.members.push_back(std::move(action));
    return out;
}

std::vector<NCPoly> invariance_residues(const QuantumFamily& fam, const ClassicalFamily& f) {
    if (fam.m.kind() != f.m.kind() || fam.m.dim() != f.m.dim()) {
        throw MismatchedSpace("family and classical family act on different algebras");
    }
    const size_t d = fam.m.dim();
    std::vector<NCPoly> out;
    for (const auto& p : f.members) {
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) {
                NCPoly g;
                for (size_t k = 0; k < d; ++k) {
                    if (!p[k][j].is_zero()) {
                        g += p[k][j] * fam.q[i][k];
                    }
                    if (!p[i][k].is_zero()) {
                        g -= p[i][k] * fam.q[k][j];
                    }
                }
                out.push_back(g);
            }
        }
    }
    return out;
}

std::vector<NCPoly> commutant_ideal(const QuantumSemigroup& s, const ClassicalFamily& f) {
    std::vector<NCPoly> raw = invariance_residues(action_family(s), f);
    std::map<std::string, NCPoly> unique;
    for (NCPoly& g : raw) {
        if (g.is_zero()) {
            continue;
        }
        unique.emplace(to_text(g, s.pres().alphabet), std::move(g));
    }
    std::vector<std::pair<size_t, std::string>> order;
    for (const auto& [text, g] : unique) {
        order.push_back({g.degree(), text});
    }
    std::sort(order.begin(), order.end());
    std::vector<NCPoly> out;
    for (const auto& [deg, text] : order) {
        out.push_back(unique.at(text));
    }
    return out;
}

namespace {

/// Normal form of p in the quotient of `pres`; an inconsistent quotient
/// reduces everything to zero and sets the flag.
NCPoly nf_or_zero(Engine& eng, const Presentation& pres, const NCPoly& p, int cap,
                  bool& inconsistent) {
    try {
        return eng.nf(pres, p, cap);
    } catch (const InconsistentPresentation&) {
        inconsistent = true;
        return NCPoly::zero();
    }
}

}  // namespace

CommutantResult build_commutant(const QuantumSemigroup& s, const ClassicalFamily& f, Engine& eng,
                                int cap) {
    CommutantResult res;
    res.ideal = commutant_ideal(s, f);
    Presentation q = quotient(s.pres(), res.ideal, "commutant");
    std::optional<SemigroupAction> action;
    if (s.action) {
        action = *s.action;
    }
    res.semigroup =
        make_semigroup(std::move(q), s.delta.images, s.counit.images, std::move(action));

    try {
        eng.system(res.semigroup.pres(), cap);
        res.report.pass("quotient-consistent");
    } catch (const InconsistentPresentation& e) {
        res.inconsistent = true;
        res.report.fail("quotient-consistent",
                        std::string("the commutant ideal contains the unit: ") + e.what());
        return res;
    }

    res.report.merge(verify_semigroup(res.semigroup, eng, cap));

    if (f.perm_source) {
        PermFamily closed = group_closure(*f.perm_source);
        std::vector<NCPoly> ideal2 = commutant_ideal(s, family_of(closed));
        Presentation q2 = quotient(s.pres(), ideal2, "commutant");
        bool bad1 = false;
        bool bad2 = false;
        bool same = true;
        std::string witness;
        for (uint32_t g = 0; g < s.pres().alphabet.size(); ++g) {
            NCPoly letter = NCPoly::letter(s.pres().alphabet.letter(g));
            NCPoly n1 = nf_or_zero(eng, res.semigroup.pres(), letter, cap, bad1);
            NCPoly n2 = nf_or_zero(eng, q2, letter, cap, bad2);
            if (!(n1 == n2)) {
                same = false;
                witness = s.pres().alphabet.decl(g).name;
                break;
            }
        }
        if (bad1 != bad2) {
            same = false;
            witness = "(consistency differs)";
        }
        if (same) {
            res.report.pass("closure-invariance");
        } else {
            res.report.fail("closure-invariance",
                            "normal forms differ under the group closure at " + witness);
        }
    }
    return res;
}

TranspositionAnalysis analyze_transposition(size_t n, Engine& eng, int cap) {
    if (n < 3) {
        throw std::invalid_argument("the transposition analysis needs at least three points");
    }
    const size_t k = n - 2;
    TranspositionAnalysis out{qmap_Xn(n), qmap_Xn(k), {}, nullptr, {}};

    Perm sigma = Perm::identity(n);
    sigma.img[n - 2] = static_cast<uint32_t>(n - 1);
    sigma.img[n - 1] = static_cast<uint32_t>(n - 2);
    ClassicalFamily fam = family_of(make_perm_family(n, {sigma}));
    out.commutant = build_commutant(out.parent, fam, eng, cap);
    if (out.commutant.inconsistent) {
        out.checks.fail("commutant-consistent", "unexpected collapse to the zero algebra");
        return out;
    }

    const Presentation& qp = out.commutant.semigroup.pres();
    const Alphabet& pa = qp.alphabet;
    auto gen = [&](size_t i, size_t j) {
        return NCPoly::letter(pa.letter(pa.index(xn_gen_name(n, i, j))));
    };
    auto check_zero = [&](const std::string& name, const NCPoly& p) {
        try {
            ZeroCheck z = eng.zero(Space{&qp}, p, cap);
            if (z.zero) {
                out.checks.pass(name);
            } else {
                out.checks.fail(name, "residue " + to_text(z.residue, pa));
            }
        } catch (const DegreeOverflow& e) {
            out.checks.inconclusive(name, e.what());
        }
    };

    // Forced identifications in the commutant: the 2x2 corner is symmetric
    // and the two right-hand columns of the upper block vanish.
    check_zero("ident-corner-e", gen(n - 1, n - 1) - gen(n, n));
    check_zero("ident-corner-f", gen(n - 1, n) - gen(n, n - 1));
    for (size_t j = 1; j <= k; ++j) {
        check_zero("ident-c:" + std::to_string(j), gen(n - 1, j) - gen(n, j));
        check_zero("ident-d:" + std::to_string(j), gen(j, n - 1) - gen(j, n));
        check_zero("vanish-d:" + std::to_string(j), gen(j, n - 1));
        check_zero("vanish-d':" + std::to_string(j), gen(j, n));
    }

    // The upper-left block satisfies all relations of the (n-2)-point
    // family semigroup.
    {
        GeneratorMap block;
        block.source = &out.sub.pres();
        block.target = Space{&qp};
        for (size_t i = 1; i <= k; ++i) {
            for (size_t j = 1; j <= k; ++j) {
                block.images.push_back(gen(i, j));
            }
        }
        MorphismReport mr = check_morphism(block, eng, cap);
        if (mr.status == MorphismStatus::Verified) {
            out.checks.pass("block-morphism");
        } else if (mr.status == MorphismStatus::Inconclusive) {
            out.checks.inconclusive("block-morphism", mr.note);
        } else {
            for (const auto& v : mr.violations) {
                out.checks.fail("block-morphism:" + v.tag,
                                "residue " + to_text(v.residue, {&pa}));
            }
        }
    }

    // Free product of the block algebra and the corner algebra, with the
    // candidate family over it.
    std::vector<GenDecl> bgens;
    std::vector<ClosureAnnotation> bclosures;
    for (size_t i = 1; i <= k; ++i) {
        ClosureAnnotation row;
        for (size_t j = 1; j <= k; ++j) {
            bgens.push_back({"b" + std::to_string(i) + std::to_string(j), true});
            row.members.push_back(static_cast<uint32_t>((i - 1) * k + (j - 1)));
        }
        bclosures.push_back(std::move(row));
    }
    Presentation bpres =
        make_presentation("block", std::move(bgens), {}, std::move(bclosures));
    std::vector<GenDecl> cgens;
    ClosureAnnotation call;
    for (size_t j = 1; j <= k; ++j) {
        cgens.push_back({"c" + std::to_string(j), true});
        call.members.push_back(static_cast<uint32_t>(j - 1));
    }
    cgens.push_back({"e", true});
    cgens.push_back({"f", true});
    call.members.push_back(static_cast<uint32_t>(k));
    call.members.push_back(static_cast<uint32_t>(k + 1));
    Presentation cpres = make_presentation("corner", std::move(cgens), {}, {call});
    out.free_pres = std::make_shared<const Presentation>(
        free_product("block_corner_free", bpres, cpres));
    const Presentation& fp = *out.free_pres;
    auto fgen = [&](const std::string& name) {
        return NCPoly::letter(fp.alphabet.letter(fp.alphabet.index(name)));
    };

    QuantumFamily cand{FDCStar::points(n), Space{&fp}, {}};
    cand.q.assign(n, std::vector<NCPoly>(n));
    for (size_t j = 1; j <= k; ++j) {
        for (size_t i = 1; i <= k; ++i) {
            cand.q[i - 1][j - 1] = fgen("b" + std::to_string(i) + std::to_string(j));
        }
        cand.q[n - 2][j - 1] = fgen("c" + std::to_string(j));
        cand.q[n - 1][j - 1] = fgen("c" + std::to_string(j));
    }
    cand.q[n - 2][n - 2] = fgen("e");
    cand.q[n - 1][n - 2] = fgen("f");
    cand.q[n - 2][n - 1] = fgen("f");
    cand.q[n - 1][n - 1] = fgen("e");

    out.checks.merge(verify_family(cand, eng, cap));
    {
        std::vector<NCPoly> residues = invariance_residues(cand, fam);
        bool all_zero = true;
        for (const NCPoly& r : residues) {
            try {
                ZeroCheck z = eng.zero(fp, r, cap);
                if (!z.zero) {
                    out.checks.fail("free-invariance",
                                    "residue " + to_text(z.residue, fp.alphabet));
                    all_zero = false;
                    break;
                }
            } catch (const DegreeOverflow& e) {
                out.checks.inconclusive("free-invariance", e.what());
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            out.checks.pass("free-invariance");
        }
    }

    // Generator correspondences in both directions, checked as morphisms,
    // plus round trips on generators.
    GeneratorMap fwd;  // free product -> commutant
    fwd.source = &fp;
    fwd.target = Space{&qp};
    for (size_t i = 1; i <= k; ++i) {
        for (size_t j = 1; j <= k; ++j) {
            fwd.images.push_back(gen(i, j));
        }
    }
    for (size_t j = 1; j <= k; ++j) {
        fwd.images.push_back(gen(n - 1, j));
    }
    fwd.images.push_back(gen(n - 1, n - 1));
    fwd.images.push_back(gen(n - 1, n));

    GeneratorMap bwd;  // commutant -> free product
    bwd.source = &qp;
    bwd.target = Space{&fp};
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            bwd.images.push_back(cand.q[i - 1][j - 1]);
        }
    }

    auto morphism_lines = [&](const char* name, GeneratorMap& f2,
                              const std::vector<const Alphabet*>& legs) {
        MorphismReport mr = check_morphism(f2, eng, cap);
        if (mr.status == MorphismStatus::Verified) {
            out.checks.pass(name);
        } else if (mr.status == MorphismStatus::Inconclusive) {
            out.checks.inconclusive(name, mr.note);
        } else {
            for (const auto& v : mr.violations) {
                out.checks.fail(std::string(name) + ":" + v.tag,
                                "residue " + to_text(v.residue, legs));
            }
        }
    };
    morphism_lines("iso-forward", fwd, {&pa});
    morphism_lines("iso-backward", bwd, {&fp.alphabet});

    {
        bool ok = true;
        for (uint32_t g = 0; g < fp.alphabet.size() && ok; ++g) {
            NCPoly letter = NCPoly::letter(fp.alphabet.letter(g));
            NCPoly back = apply(bwd, apply(fwd, letter));
            try {
                ZeroCheck z = eng.zero(fp, back - letter, cap);
                if (!z.zero) {
                    out.checks.fail("iso-roundtrip-free",
                                    fp.alphabet.decl(g).name + " residue " +
                                        to_text(z.residue, fp.alphabet));
                    ok = false;
                }
            } catch (const DegreeOverflow& e) {
                out.checks.inconclusive("iso-roundtrip-free", e.what());
                ok = false;
            }
        }
        if (ok) {
            out.checks.pass("iso-roundtrip-free");
        }
    }
    {
        bool ok = true;
        for (uint32_t g = 0; g < pa.size() && ok; ++g) {
            NCPoly letter = NCPoly::letter(pa.letter(g));
            NCPoly back = apply(fwd, apply(bwd, letter));
            try {
                ZeroCheck z = eng.zero(qp, back - letter, cap);
                if (!z.zero) {
                    out.checks.fail("iso-roundtrip-commutant",
                                    pa.decl(g).name + " residue " + to_text(z.residue, pa));
                    ok = false;
                }
            } catch (const DegreeOverflow& e) {
                out.checks.inconclusive("iso-roundtrip-commutant", e.what());
                ok = false;
            }
        }
        if (ok) {
            out.checks.pass("iso-roundtrip-commutant");
        }
    }
    return out;
}

}  // namespace qsg
