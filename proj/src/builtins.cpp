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

#include "qsg/builtins.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsg {

std::string xn_gen_name(size_t n, size_t i, size_t j) {
    // Single-digit indices concatenate without a separator; larger spaces
    // need one to stay unambiguous.
    if (n <= 9) {
        return "a" + std::to_string(i) + std::to_string(j);
    }
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

QuantumSemigroup qmap_Xn(size_t n) {
    if (n < 1) {
        throw std::invalid_argument("the point space needs at least one point");
    }
    std::vector<GenDecl> gens;
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            gens.push_back({xn_gen_name(n, i, j), true});
        }
    }
    auto gen_index = [n](size_t i, size_t j) {
        return static_cast<uint32_t>((i - 1) * n + (j - 1));
    };
    std::vector<ClosureAnnotation> closures;
    for (size_t i = 1; i <= n; ++i) {
        ClosureAnnotation row;
        for (size_t j = 1; j <= n; ++j) {
            row.members.push_back(gen_index(i, j));
        }
        closures.push_back(std::move(row));
    }
    Presentation p =
        make_presentation("qmap_x" + std::to_string(n), std::move(gens), {}, std::move(closures));

    std::vector<NCPoly> delta;
    std::vector<NCPoly> counit;
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            NCPoly d;
            for (size_t k = 1; k <= n; ++k) {
                NCPoly left = NCPoly::letter(p.alphabet.letter(gen_index(i, k)));
                NCPoly right = NCPoly::letter(p.alphabet.letter(gen_index(k, j), false, 1));
                d += left * right;
            }
            delta.push_back(d);
            counit.push_back(i == j ? NCPoly::unit() : NCPoly::zero());
        }
    }

    SemigroupAction act{FDCStar::points(n), {}};
    act.q.assign(n, std::vector<NCPoly>(n));
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            act.q[i - 1][j - 1] = NCPoly::letter(p.alphabet.letter(gen_index(i, j)));
        }
    }
    return make_semigroup(std::move(p), std::move(delta), std::move(counit), std::move(act));
}

namespace {

/// Fills the q matrix of an action on the 2x2 matrix algebra from the image
/// of the generator n alone; the other basis columns are the forced products
/// nn*, n*, n*n of that image.
SemigroupAction matrix2_action(std::vector<NCPoly> n_column) {
    SemigroupAction act{FDCStar::matrix2(), {}};
    MElement n_img;
    n_img.coeff = std::move(n_column);
    MElement star_img = m_star(act.m, n_img);
    std::vector<MElement> cols = {m_mul(act.m, n_img, star_img), n_img, star_img,
                                  m_mul(act.m, star_img, n_img)};
    const size_t d = act.m.dim();
    act.q.assign(d, std::vector<NCPoly>(d));
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) {
            act.q[i][j] = cols[j].coeff[i];
        }
    }
    return act;
}

}  // namespace

QuantumSemigroup qmap_M2() {
    std::vector<GenDecl> gens = {{"alpha", false}, {"beta", false}, {"gamma", false},
                                 {"delta", false}};
    Presentation probe = make_presentation("qmap_m2", gens, {});
    NCPoly a = NCPoly::letter(probe.alphabet.letter(0));
    NCPoly b = NCPoly::letter(probe.alphabet.letter(1));
    NCPoly c = NCPoly::letter(probe.alphabet.letter(2));
    NCPoly d = NCPoly::letter(probe.alphabet.letter(3));
    NCPoly as = NCPoly::letter(probe.alphabet.letter(0, true));
    NCPoly bs = NCPoly::letter(probe.alphabet.letter(1, true));
    NCPoly cs = NCPoly::letter(probe.alphabet.letter(2, true));
    NCPoly ds = NCPoly::letter(probe.alphabet.letter(3, true));
    NCPoly one = NCPoly::unit();

    // Entries of NN* + N*N = 1 (self-adjoint, so three independent entries)
    // and of N^2 = 0 for N = [[alpha, beta], [gamma, delta]].
    std::vector<Relation> rels = {
        {as * a + cs * c + a * as + b * bs - one, "input:nsum11"},
        {as * b + cs * d + a * cs + b * ds, "input:nsum12"},
        {bs * b + ds * d + c * cs + d * ds - one, "input:nsum22"},
        {a * a + b * c, "input:nsq11"},
        {a * b + b * d, "input:nsq12"},
        {c * a + d * c, "input:nsq21"},
        {c * b + d * d, "input:nsq22"},
    };
    Presentation pres = make_presentation("qmap_m2", gens, std::move(rels));

    auto lift = [&pres](uint32_t g, bool star, uint8_t leg) {
        return NCPoly::letter(pres.alphabet.letter(g, star, leg));
    };
    NCPoly A0 = lift(0, false, 0), B0 = lift(1, false, 0), C0 = lift(2, false, 0),
           D0 = lift(3, false, 0);
    NCPoly As0 = lift(0, true, 0), Bs0 = lift(1, true, 0), Cs0 = lift(2, true, 0),
           Ds0 = lift(3, true, 0);
    NCPoly A1 = lift(0, false, 1), B1 = lift(1, false, 1), C1 = lift(2, false, 1),
           D1 = lift(3, false, 1);

    std::vector<NCPoly> delta_images = {
        A0 * As0 * A1 + B0 * Bs0 * A1 + A0 * B1 + As0 * C1 + As0 * A0 * D1 + Cs0 * C0 * D1,
        A0 * Cs0 * A1 + B0 * Ds0 * A1 + B0 * B1 + Cs0 * C1 + As0 * B0 * D1 + Cs0 * D0 * D1,
        C0 * As0 * A1 + D0 * Bs0 * A1 + C0 * B1 + Bs0 * C1 + Bs0 * A0 * D1 + Ds0 * C0 * D1,
        C0 * Cs0 * A1 + D0 * Ds0 * A1 + D0 * B1 + Ds0 * C1 + Bs0 * B0 * D1 + Ds0 * D0 * D1,
    };
    std::vector<NCPoly> counit_images = {NCPoly::zero(), NCPoly::unit(), NCPoly::zero(),
                                         NCPoly::zero()};
    SemigroupAction act = matrix2_action(
        {lift(0, false, 0), lift(1, false, 0), lift(2, false, 0), lift(3, false, 0)});
    return make_semigroup(std::move(pres), std::move(delta_images), std::move(counit_images),
                          std::move(act));
}

QuantumSemigroup m2_commutant_phi() {
    std::vector<GenDecl> gens = {{"alpha", false}, {"beta", true}, {"gamma", true}};
    Presentation probe = make_presentation("m2_commutant_phi", gens, {});
    NCPoly a = NCPoly::letter(probe.alphabet.letter(0));
    NCPoly b = NCPoly::letter(probe.alphabet.letter(1));
    NCPoly c = NCPoly::letter(probe.alphabet.letter(2));
    NCPoly as = NCPoly::letter(probe.alphabet.letter(0, true));
    NCPoly one = NCPoly::unit();

    std::vector<Relation> rels = {
        {as * a + c * c + a * as + b * b - one, "input:norm"},
        {as * b + c * as + a * c + b * a, "input:cross"},
        {a * a + b * c, "input:sq"},
        {a * b + b * as, "input:swap-b"},
        {c * a + as * c, "input:swap-c"},
    };
    Presentation pres = make_presentation("m2_commutant_phi", gens, std::move(rels));

    auto lift = [&pres](uint32_t g, bool star, uint8_t leg) {
        return NCPoly::letter(pres.alphabet.letter(g, star, leg));
    };
    NCPoly A0 = lift(0, false, 0), B0 = lift(1, false, 0), C0 = lift(2, false, 0);
    NCPoly As0 = lift(0, true, 0);
    NCPoly A1 = lift(0, false, 1), B1 = lift(1, false, 1), C1 = lift(2, false, 1);
    NCPoly As1 = lift(0, true, 1);

    std::vector<NCPoly> delta_images = {
        A1 + (As0 * A0 + C0 * C0) * (As1 - A1) + A0 * B1 + As0 * C1,
        (A0 * C0 + B0 * A0) * (A1 - As1) + B0 * B1 + C0 * C1,
        (B0 * A0 + A0 * C0) * (As1 - A1) + C0 * B1 + B0 * C1,
    };
    std::vector<NCPoly> counit_images = {NCPoly::zero(), NCPoly::unit(), NCPoly::zero()};
    SemigroupAction act = matrix2_action(
        {lift(0, false, 0), lift(1, false, 0), lift(2, false, 0), lift(0, true, 0)});
    return make_semigroup(std::move(pres), std::move(delta_images), std::move(counit_images),
                          std::move(act));
}

}  // namespace qsg
