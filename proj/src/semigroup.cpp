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

#include "qsg/semigroup.hpp"

#include <stdexcept>
#include <string>

#include "qsg/errors.hpp"

namespace qsg {

namespace {

std::vector<Scalar> zero_vec(size_t d) {
    return std::vector<Scalar>(d, Scalar(0));
}

}  // namespace

FDCStar FDCStar::points(size_t n) {
    if (n < 1) {
        throw std::invalid_argument("a point algebra needs at least one point");
    }
    FDCStar m;
    m.kind_ = Kind::FunctionsOnPoints;
    for (size_t i = 0; i < n; ++i) {
        m.names_.push_back("e" + std::to_string(i + 1));
    }
    m.mult_.assign(n * n, zero_vec(n));
    for (size_t i = 0; i < n; ++i) {
        m.mult_[i * n + i][i] = Scalar(1);
    }
    m.star_.assign(n, zero_vec(n));
    for (size_t i = 0; i < n; ++i) {
        m.star_[i][i] = Scalar(1);
    }
    m.unit_.assign(n, Scalar(1));
    m.validate();
    return m;
}

FDCStar FDCStar::matrix2() {
    // Basis written via the generator n: {nn*, n, n*, n*n}, which is the
    // matrix-unit basis {E11, E12, E21, E22} for n = E12.
    FDCStar m;
    m.kind_ = Kind::MatrixAlgebra2;
    m.names_ = {"nn*", "n", "n*", "n*n"};
    const size_t row[4] = {0, 0, 1, 1};
    const size_t col[4] = {0, 1, 0, 1};
    auto index_of = [&](size_t r, size_t c) { return r * 2 + c; };  // E_rc position in basis
    m.mult_.assign(16, zero_vec(4));
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            if (col[i] == row[j]) {
                m.mult_[i * 4 + j][index_of(row[i], col[j])] = Scalar(1);
            }
        }
    }
    m.star_.assign(4, zero_vec(4));
    for (size_t i = 0; i < 4; ++i) {
        m.star_[i][index_of(col[i], row[i])] = Scalar(1);
    }
    m.unit_ = zero_vec(4);
    m.unit_[index_of(0, 0)] = Scalar(1);
    m.unit_[index_of(1, 1)] = Scalar(1);
    m.validate();
    return m;
}

void FDCStar::validate() const {
    const size_t d = dim();
    auto mul_vec = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        std::vector<Scalar> z = zero_vec(d);
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) {
                if (x[i].is_zero() || y[j].is_zero()) {
                    continue;
                }
                const std::vector<Scalar>& c = mult(i, j);
                for (size_t k = 0; k < d; ++k) {
                    z[k] += x[i] * y[j] * c[k];
                }
            }
        }
        return z;
    };
    auto basis_vec = [&](size_t i) {
        std::vector<Scalar> v = zero_vec(d);
        v[i] = Scalar(1);
        return v;
    };
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            for (size_t k = 0; k < d; ++k) {
                auto lhs = mul_vec(mul_vec(basis_vec(i), basis_vec(j)), basis_vec(k));
                auto rhs = mul_vec(basis_vec(i), mul_vec(basis_vec(j), basis_vec(k)));
                if (lhs != rhs) {
                    throw Error("structure constants are not associative");
                }
            }
        }
    }
    auto star_vec = [&](const std::vector<Scalar>& x) {
        std::vector<Scalar> z = zero_vec(d);
        for (size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) {
                continue;
            }
            for (size_t k = 0; k < d; ++k) {
                z[k] += x[i].conj() * star_[i][k];
            }
        }
        return z;
    };
    for (size_t i = 0; i < d; ++i) {
        if (star_vec(star_vec(basis_vec(i))) != basis_vec(i)) {
            throw Error("involution is not involutive");
        }
        for (size_t j = 0; j < d; ++j) {
            // (b_i b_j)* must equal b_j* b_i*.
            auto lhs = star_vec(mul_vec(basis_vec(i), basis_vec(j)));
            auto rhs = mul_vec(star_vec(basis_vec(j)), star_vec(basis_vec(i)));
            if (lhs != rhs) {
                throw Error("involution is not anti-multiplicative");
            }
        }
        if (mul_vec(unit_, basis_vec(i)) != basis_vec(i) ||
            mul_vec(basis_vec(i), unit_) != basis_vec(i)) {
            throw Error("unit vector is not a unit");
        }
    }
}

MElement m_mul(const FDCStar& m, const MElement& x, const MElement& y) {
    const size_t d = m.dim();
    if (x.coeff.size() != d || y.coeff.size() != d) {
        throw DimensionMismatch("element coefficient count does not match the basis");
    }
    MElement z;
    z.coeff.assign(d, NCPoly::zero());
    for (size_t i = 0; i < d; ++i) {
        if (x.coeff[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < d; ++j) {
            if (y.coeff[j].is_zero()) {
                continue;
            }
            NCPoly prod = x.coeff[i] * y.coeff[j];
            const std::vector<Scalar>& c = m.mult(i, j);
            for (size_t k = 0; k < d; ++k) {
                if (!c[k].is_zero()) {
                    z.coeff[k] += c[k] * prod;
                }
            }
        }
    }
    return z;
}

MElement m_star(const FDCStar& m, const MElement& x) {
    const size_t d = m.dim();
    if (x.coeff.size() != d) {
        throw DimensionMismatch("element coefficient count does not match the basis");
    }
    MElement z;
    z.coeff.assign(d, NCPoly::zero());
    for (size_t i = 0; i < d; ++i) {
        if (x.coeff[i].is_zero()) {
            continue;
        }
        NCPoly xs = x.coeff[i].star();
        const std::vector<Scalar>& s = m.star(i);
        for (size_t k = 0; k < d; ++k) {
            if (!s[k].is_zero()) {
                z.coeff[k] += s[k] * xs;
            }
        }
    }
    return z;
}

MElement m_unit(const FDCStar& m) {
    MElement z;
    const std::vector<Scalar>& u = m.unit();
    for (size_t k = 0; k < m.dim(); ++k) {
        z.coeff.push_back(NCPoly::scalar(u[k]));
    }
    return z;
}

MElement m_sub(const MElement& x, const MElement& y) {
    if (x.coeff.size() != y.coeff.size()) {
        throw DimensionMismatch("element sizes differ");
    }
    MElement z = x;
    for (size_t k = 0; k < z.coeff.size(); ++k) {
        z.coeff[k] -= y.coeff[k];
    }
    return z;
}

MElement SemigroupAction::column(size_t j) const {
    MElement v;
    for (size_t i = 0; i < q.size(); ++i) {
        v.coeff.push_back(q[i][j]);
    }
    return v;
}

QuantumSemigroup make_semigroup(Presentation algebra, std::vector<NCPoly> delta_images,
                                std::vector<NCPoly> counit_images,
                                std::optional<SemigroupAction> action) {
    QuantumSemigroup s;
    s.algebra = std::make_shared<const Presentation>(std::move(algebra));
    const Presentation* p = s.algebra.get();
    const size_t ngen = p->alphabet.size();
    if (delta_images.size() != ngen || counit_images.size() != ngen) {
        throw std::invalid_argument("image count does not match generator count");
    }
    for (const NCPoly& img : delta_images) {
        for (const auto& t : img.terms()) {
            for (const Letter& l : t.first.ls) {
                if (l.leg > 1 || l.gen >= ngen) {
                    throw MismatchedSpace("comultiplication image outside the twofold tensor");
                }
            }
        }
    }
    for (const NCPoly& img : counit_images) {
        if (!img.is_zero() && !img.is_scalar()) {
            throw MismatchedSpace("counit image is not scalar");
        }
    }
    s.delta.source = p;
    s.delta.target = Space{p, p};
    s.delta.images = std::move(delta_images);
    s.counit.source = p;
    s.counit.target = Space{};
    s.counit.images = std::move(counit_images);
    if (action) {
        const size_t d = action->m.dim();
        if (action->q.size() != d) {
            throw DimensionMismatch("action matrix row count differs from basis size");
        }
        for (const auto& row : action->q) {
            if (row.size() != d) {
                throw DimensionMismatch("action matrix is not square");
            }
        }
        s.action = std::move(action);
    }
    return s;
}

GeneratorMap identity_map(const Presentation& p) {
    GeneratorMap f;
    f.source = &p;
    f.target = Space{&p};
    for (uint32_t g = 0; g < p.alphabet.size(); ++g) {
        f.images.push_back(NCPoly::letter(p.alphabet.letter(g)));
    }
    return f;
}

NCPoly apply_legs(const NCPoly& p, const std::vector<const GeneratorMap*>& maps,
                  const std::vector<uint8_t>& offsets) {
    if (maps.size() != offsets.size()) {
        throw std::invalid_argument("one offset required per leg map");
    }
    NCPoly result = NCPoly::zero();
    for (const auto& t : p.terms()) {
        for (const Letter& l : t.first.ls) {
            if (l.leg >= maps.size()) {
                throw MismatchedSpace("letter on leg " + std::to_string(l.leg) +
                                      " has no map assigned");
            }
        }
        NCPoly prod = NCPoly::scalar(t.second);
        for (size_t k = 0; k < maps.size(); ++k) {
            Word block = t.first.leg_block(static_cast<uint8_t>(k));
            if (block.empty()) {
                continue;
            }
            NCPoly img = apply(*maps[k], NCPoly::term(block, Scalar(1)));
            prod = prod * img.shifted(offsets[k]);
        }
        result += prod;
    }
    return result;
}

namespace {

/// Shared shape for the verifier loops: run `body` for each item, turning
/// DegreeOverflow into an inconclusive line.
template <typename F>
void guarded(Report& rep, const std::string& name, F body) {
    try {
        body();
    } catch (const DegreeOverflow& e) {
        rep.inconclusive(name, e.what());
    }
}

void check_zero(Report& rep, Engine& eng, const Space& space, const std::string& name,
                const NCPoly& p, int cap) {
    guarded(rep, name, [&] {
        ZeroCheck z = eng.zero(space, p, cap);
        if (z.zero) {
            rep.pass(name);
        } else {
            rep.fail(name, "residue " + to_text(z.residue, space.alphabets()));
        }
    });
}

}  // namespace

Report verify_comultiplication(const QuantumSemigroup& s, Engine& eng, int cap) {
    Report rep;
    GeneratorMap delta = s.delta;
    guarded(rep, "delta-morphism", [&] {
        MorphismReport mr = check_morphism(delta, eng, cap);
        if (mr.status == MorphismStatus::Verified) {
            rep.pass("delta-morphism");
        } else if (mr.status == MorphismStatus::Inconclusive) {
            rep.inconclusive("delta-morphism", mr.note);
        } else {
            for (const MorphismViolation& v : mr.violations) {
                rep.fail("delta-respects:" + v.tag,
                         "residue " + to_text(v.residue, delta.target.alphabets()));
            }
        }
    });
    return rep;
}

Report verify_coassociativity(const QuantumSemigroup& s, Engine& eng, int cap) {
    Report rep;
    const Presentation& p = s.pres();
    GeneratorMap id = identity_map(p);
    Space triple{&p, &p, &p};
    for (uint32_t g = 0; g < p.alphabet.size(); ++g) {
        const std::string name = "coassoc:" + p.alphabet.decl(g).name;
        guarded(rep, name, [&] {
            const NCPoly& dg = s.delta.images[g];
            NCPoly lhs = apply_legs(dg, {&s.delta, &id}, {0, 2});
            NCPoly rhs = apply_legs(dg, {&id, &s.delta}, {0, 1});
            check_zero(rep, eng, triple, name, lhs - rhs, cap);
        });
    }
    return rep;
}

Report verify_counit(const QuantumSemigroup& s, Engine& eng, int cap) {
    Report rep;
    const Presentation& p = s.pres();
    GeneratorMap counit = s.counit;
    guarded(rep, "counit-morphism", [&] {
        MorphismReport mr = check_morphism(counit, eng, cap);
        if (mr.status == MorphismStatus::Verified) {
            rep.pass("counit-morphism");
        } else if (mr.status == MorphismStatus::Inconclusive) {
            rep.inconclusive("counit-morphism", mr.note);
        } else {
            for (const MorphismViolation& v : mr.violations) {
                rep.fail("counit-respects:" + v.tag, "residue " + to_text(v.residue, std::vector<const Alphabet*>{}));
            }
        }
    });
    GeneratorMap id = identity_map(p);
    Space single{&p};
    for (uint32_t g = 0; g < p.alphabet.size(); ++g) {
        const NCPoly& dg = s.delta.images[g];
        NCPoly gen = NCPoly::letter(p.alphabet.letter(g));
        const std::string lname = "counit-left:" + p.alphabet.decl(g).name;
        guarded(rep, lname, [&] {
            NCPoly lhs = apply_legs(dg, {&s.counit, &id}, {0, 0});
            check_zero(rep, eng, single, lname, lhs - gen, cap);
        });
        const std::string rname = "counit-right:" + p.alphabet.decl(g).name;
        guarded(rep, rname, [&] {
            NCPoly rhs = apply_legs(dg, {&id, &s.counit}, {0, 0});
            check_zero(rep, eng, single, rname, rhs - gen, cap);
        });
    }
    return rep;
}

namespace {

/// True when every coefficient of `v` reduces to zero over `space`; on
/// failure appends one fail line naming the offending basis slot.
void check_melement_zero(Report& rep, Engine& eng, const Space& space, const FDCStar& m,
                         const std::string& name, const MElement& v, int cap) {
    guarded(rep, name, [&] {
        for (size_t k = 0; k < v.coeff.size(); ++k) {
            ZeroCheck z = eng.zero(space, v.coeff[k], cap);
            if (!z.zero) {
                rep.fail(name, "basis slot " + m.basis_names()[k] + " residue " +
                                   to_text(z.residue, space.alphabets()));
                return;
            }
        }
        rep.pass(name);
    });
}

}  // namespace

Report verify_structure_map(const FDCStar& m, const std::vector<std::vector<NCPoly>>& q,
                            const Space& space, Engine& eng, int cap) {
    Report rep;
    const size_t d = m.dim();
    if (q.size() != d) {
        throw DimensionMismatch("column matrix row count differs from basis size");
    }
    auto column = [&](size_t j) {
        MElement v;
        for (size_t i = 0; i < d; ++i) {
            v.coeff.push_back(q[i].at(j));
        }
        return v;
    };
    if (m.kind() == FDCStar::Kind::FunctionsOnPoints) {
        for (size_t j = 0; j < d; ++j) {
            check_melement_zero(rep, eng, space, m, "structure-sa:" + m.basis_names()[j],
                                m_sub(m_star(m, column(j)), column(j)), cap);
        }
        for (size_t j = 0; j < d; ++j) {
            for (size_t k = 0; k < d; ++k) {
                MElement prod = m_mul(m, column(j), column(k));
                if (j == k) {
                    prod = m_sub(prod, column(j));
                }
                check_melement_zero(rep, eng, space, m,
                                    "structure-proj:" + std::to_string(j + 1) + "," +
                                        std::to_string(k + 1),
                                    prod, cap);
            }
        }
        MElement total;
        total.coeff.assign(d, NCPoly::zero());
        for (size_t j = 0; j < d; ++j) {
            for (size_t k = 0; k < d; ++k) {
                total.coeff[k] += column(j).coeff[k];
            }
        }
        check_melement_zero(rep, eng, space, m, "structure-partition-sum",
                            m_sub(total, m_unit(m)), cap);
    } else {
        MElement n_img = column(1);  // basis order {nn*, n, n*, n*n}
        check_melement_zero(rep, eng, space, m, "structure-n-squared",
                            m_mul(m, n_img, n_img), cap);
        MElement star_img = m_star(m, n_img);
        MElement full = m_sub(m_mul(m, n_img, star_img), m_unit(m));
        MElement second = m_mul(m, star_img, n_img);
        for (size_t k = 0; k < d; ++k) {
            full.coeff[k] += second.coeff[k];
        }
        check_melement_zero(rep, eng, space, m, "structure-n-star-sum", full, cap);
        // Remaining columns are the images of nn*, n*, n*n and must agree
        // with the products of the n column.
        check_melement_zero(rep, eng, space, m, "structure-column-nn*",
                            m_sub(column(0), m_mul(m, n_img, star_img)), cap);
        check_melement_zero(rep, eng, space, m, "structure-column-n*",
                            m_sub(column(2), star_img), cap);
        check_melement_zero(rep, eng, space, m, "structure-column-n*n",
                            m_sub(column(3), m_mul(m, star_img, n_img)), cap);
    }
    return rep;
}

Report verify_action(const QuantumSemigroup& s, Engine& eng, int cap) {
    Report rep;
    if (!s.action) {
        rep.pass("action-absent");
        return rep;
    }
    const SemigroupAction& act = *s.action;
    const FDCStar& m = act.m;
    const size_t d = m.dim();
    const Presentation& p = s.pres();
    Space single{&p};
    Space twofold{&p, &p};

    // (i) The image satisfies M's structural relations over the algebra.
    rep.merge(verify_structure_map(m, act.q, single, eng, cap));

    // (ii) (Phi (x) id) o Phi = (id (x) delta) o Phi, entrywise.
    for (size_t k = 0; k < d; ++k) {
        for (size_t j = 0; j < d; ++j) {
            const std::string name =
                "action-compat:" + std::to_string(k + 1) + "," + std::to_string(j + 1);
            guarded(rep, name, [&] {
                NCPoly lhs = NCPoly::zero();
                for (size_t i = 0; i < d; ++i) {
                    lhs += act.q[k][i] * act.q[i][j].shifted(1);
                }
                NCPoly rhs = apply(s.delta, act.q[k][j]);
                check_zero(rep, eng, twofold, name, lhs - rhs, cap);
            });
        }
    }

    // (iii) (id (x) counit) o Phi = id_M.
    guarded(rep, "action-counit", [&] {
        for (size_t k = 0; k < d; ++k) {
            for (size_t j = 0; j < d; ++j) {
                NCPoly e = apply(s.counit, act.q[k][j]);
                NCPoly want = (k == j) ? NCPoly::unit() : NCPoly::zero();
                if (!(e == want)) {
                    rep.fail("action-counit", "entry " + std::to_string(k + 1) + "," +
                                                  std::to_string(j + 1) + " evaluates to " +
                                                  to_text(e, std::vector<const Alphabet*>{}));
                    return;
                }
            }
        }
        rep.pass("action-counit");
    });
    return rep;
}

Report verify_semigroup(const QuantumSemigroup& s, Engine& eng, int cap) {
    Report rep;
    rep.merge(verify_comultiplication(s, eng, cap));
    rep.merge(verify_coassociativity(s, eng, cap));
    rep.merge(verify_counit(s, eng, cap));
    if (s.action) {
        rep.merge(verify_action(s, eng, cap));
    }
    return rep;
}

}  // namespace qsg
