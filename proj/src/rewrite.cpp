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

#include "qsg/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qsg/errors.hpp"

namespace qsg {

namespace {

bool occurs_at(const Word& w, const Word& pat, size_t pos) {
    if (pat.ls.empty() || pos + pat.ls.size() > w.ls.size()) {
        return false;
    }
    for (size_t k = 0; k < pat.ls.size(); ++k) {
        if (!(w.ls[pos + k] == pat.ls[k])) {
            return false;
        }
    }
    return true;
}

bool contains(const Word& w, const Word& pat) {
    if (pat.ls.size() > w.ls.size()) {
        return false;
    }
    for (size_t pos = 0; pos + pat.ls.size() <= w.ls.size(); ++pos) {
        if (occurs_at(w, pat, pos)) {
            return true;
        }
    }
    return false;
}

/// (rule index, position) of the redex chosen by the strategy, if any.
std::optional<std::pair<size_t, size_t>> find_redex(const Word& w,
                                                    const std::vector<RewriteRule>& rules,
                                                    Strategy strategy) {
    const size_t n = w.ls.size();
    if (strategy == Strategy::LeftmostInnermost) {
        for (size_t pos = 0; pos < n; ++pos) {
            for (size_t ri = 0; ri < rules.size(); ++ri) {
                if (occurs_at(w, rules[ri].lhs, pos)) {
                    return std::make_pair(ri, pos);
                }
            }
        }
    } else {
        for (size_t pos = n; pos-- > 0;) {
            for (size_t ri = rules.size(); ri-- > 0;) {
                if (occurs_at(w, rules[ri].lhs, pos)) {
                    return std::make_pair(ri, pos);
                }
            }
        }
    }
    return std::nullopt;
}

NCPoly segment(const Word& w, size_t begin, size_t end) {
    Word s;
    s.ls.assign(w.ls.begin() + static_cast<long>(begin), w.ls.begin() + static_cast<long>(end));
    return NCPoly::term(s, Scalar(1));
}

/// Replaces the occurrence of `rule.lhs` at `pos` inside c*w.
NCPoly step_result(const Word& w, const Scalar& c, const RewriteRule& rule, size_t pos) {
    NCPoly u = segment(w, 0, pos);
    NCPoly v = segment(w, pos + rule.lhs.ls.size(), w.ls.size());
    return c * (u * rule.rhs * v);
}

bool rule_lhs_less(const RewriteRule& a, const RewriteRule& b) {
    return deglex_cmp(a.lhs, b.lhs) < 0;
}

}  // namespace

RewriteRule orient(const NCPoly& relation) {
    auto lead = relation.leading();  // throws ZeroPolynomial on 0
    const Word& w = lead.first;
    const Scalar& c = lead.second;
    if (w.empty()) {
        throw InconsistentPresentation(
            "relation is a nonzero scalar, so the ideal contains the unit");
    }
    // lhs -> lhs - relation/c
    NCPoly rhs = NCPoly::term(w, Scalar(1)) - c.inverse() * relation;
    return RewriteRule{w, rhs};
}

std::vector<RewriteRule> orient(const std::vector<NCPoly>& relations) {
    std::vector<RewriteRule> out;
    for (const NCPoly& p : relations) {
        if (p.is_zero()) {
            continue;
        }
        out.push_back(orient(p));
        NCPoly q = p.star();
        if (!(q == p)) {
            out.push_back(orient(q));
        }
    }
    return out;
}

NCPoly normal_form(const RewriteSystem& sys, const NCPoly& p, Strategy strategy,
                   std::vector<TraceStep>* trace) {
    if (sys.status == SystemStatus::Inconsistent) {
        return NCPoly::zero();
    }
    if (static_cast<long>(p.degree()) > sys.degree_cap) {
        throw DegreeOverflow("polynomial degree " + std::to_string(p.degree()) +
                             " exceeds rewrite cap " + std::to_string(sys.degree_cap));
    }
    NCPoly work = p;
    NCPoly result = NCPoly::zero();
    while (!work.is_zero()) {
        auto lead = work.leading();
        const Word w = lead.first;
        const Scalar c = lead.second;
        auto hit = find_redex(w, sys.rules, strategy);
        work -= NCPoly::term(w, c);
        if (!hit) {
            result.add_term(w, c);
            continue;
        }
        // Every word produced here is deglex-smaller than w, so the
        // deglex-maximal word of `work` strictly decreases.
        if (trace != nullptr) {
            trace->push_back(TraceStep{hit->first, hit->second, w, c});
        }
        work += step_result(w, c, sys.rules[hit->first], hit->second);
    }
    return result;
}

NCPoly replay(const RewriteSystem& sys, const NCPoly& p, const std::vector<TraceStep>& trace) {
    NCPoly work = p;
    NCPoly result = NCPoly::zero();
    size_t ti = 0;
    while (!work.is_zero()) {
        auto lead = work.leading();
        const Word w = lead.first;
        const Scalar c = lead.second;
        work -= NCPoly::term(w, c);
        if (ti < trace.size() && trace[ti].word == w) {
            const TraceStep& st = trace[ti++];
            if (st.rule >= sys.rules.size() || !occurs_at(w, sys.rules[st.rule].lhs, st.pos)) {
                throw Error("trace replay: recorded step does not match any redex");
            }
            if (!(st.coeff == c)) {
                throw Error("trace replay: recorded coefficient diverged");
            }
            work += step_result(w, c, sys.rules[st.rule], st.pos);
        } else {
            result.add_term(w, c);
        }
    }
    if (ti != trace.size()) {
        throw Error("trace replay: unused steps remain");
    }
    return result;
}

ZeroCheck is_zero_mod_ideal(const RewriteSystem& sys, const NCPoly& p) {
    NCPoly nf = normal_form(sys, p);
    return ZeroCheck{nf.is_zero(), nf};
}

RewriteSystem inconsistent_system(uint64_t presentation_hash, int degree_cap) {
    RewriteSystem sys;
    sys.degree_cap = degree_cap;
    sys.status = SystemStatus::Inconsistent;
    sys.presentation_hash = presentation_hash;
    return sys;
}

namespace {

struct OverlapKey {
    Word a;
    Word b;
    size_t o;

    bool operator<(const OverlapKey& k) const {
        if (int c = deglex_cmp(a, k.a); c != 0) {
            return c < 0;
        }
        if (int c = deglex_cmp(b, k.b); c != 0) {
            return c < 0;
        }
        return o < k.o;
    }
};

/// Suffix of `a` of length o equals prefix of `b` of length o.
bool boundary_overlap(const Word& a, const Word& b, size_t o) {
    const size_t na = a.ls.size();
    for (size_t k = 0; k < o; ++k) {
        if (!(a.ls[na - o + k] == b.ls[k])) {
            return false;
        }
    }
    return true;
}

struct Completion {
    RewriteSystem sys;
    // Queue keyed by the leading word at enqueue time; multimap keeps
    // insertion order among equal keys, so processing is deterministic.
    std::multimap<Word, NCPoly, WordDeglexLess> pending;
    std::set<OverlapKey> resolved;
    size_t steps = 0;

    void enqueue(const NCPoly& q) {
        if (!q.is_zero()) {
            pending.emplace(q.leading().first, q);
        }
    }

    /// Inserts a rule keeping rules sorted by lhs; any other rule whose lhs
    /// contains the new lhs is dissolved back into the queue, so the live
    /// set stays inter-reduced and inclusion ambiguities never persist.
    void insert_rule(RewriteRule r) {
        const Word lhs = r.lhs;
        auto it = std::lower_bound(sys.rules.begin(), sys.rules.end(), r, rule_lhs_less);
        sys.rules.insert(it, std::move(r));
        std::vector<RewriteRule> keep;
        keep.reserve(sys.rules.size());
        for (RewriteRule& rr : sys.rules) {
            if (!(rr.lhs == lhs) && contains(rr.lhs, lhs)) {
                enqueue(NCPoly::term(rr.lhs, Scalar(1)) - rr.rhs);
            } else {
                keep.push_back(std::move(rr));
            }
        }
        sys.rules = std::move(keep);
    }

    void drain() {
        while (!pending.empty()) {
            if (++steps > 500000) {
                throw Error("completion did not stabilize within the step budget");
            }
            auto it = pending.begin();
            NCPoly q = std::move(it->second);
            pending.erase(it);
            NCPoly nf = normal_form(sys, q);
            if (nf.is_zero()) {
                continue;
            }
            if (nf.is_scalar()) {
                throw InconsistentPresentation(
                    "ideal contains the unit: a relation reduced to a nonzero scalar");
            }
            NCPoly starred = nf.star();
            insert_rule(orient(nf));
            // The adjoint of every derived relation is also a consequence;
            // enqueue it so the star-closure of the ideal stays covered.
            enqueue(starred);
        }
    }

    /// One pass over all boundary overlaps of the current rules, processed
    /// by (combined degree, lhs pair, offset). Returns true if any
    /// unresolved ambiguity produced a new pending relation.
    bool overlap_round(bool ignore_resolved) {
        struct Cand {
            size_t deg;
            size_t i;
            size_t j;
            size_t o;
        };
        std::vector<Cand> cands;
        const size_t n = sys.rules.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                const Word& a = sys.rules[i].lhs;
                const Word& b = sys.rules[j].lhs;
                for (size_t o = 1; o < a.ls.size() && o < b.ls.size(); ++o) {
                    const size_t deg = a.ls.size() + b.ls.size() - o;
                    if (deg > static_cast<size_t>(sys.degree_cap)) {
                        continue;
                    }
                    if (boundary_overlap(a, b, o)) {
                        cands.push_back(Cand{deg, i, j, o});
                    }
                }
            }
        }
        std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
            if (x.deg != y.deg) {
                return x.deg < y.deg;
            }
            if (int c = deglex_cmp(sys.rules[x.i].lhs, sys.rules[y.i].lhs); c != 0) {
                return c < 0;
            }
            if (int c = deglex_cmp(sys.rules[x.j].lhs, sys.rules[y.j].lhs); c != 0) {
                return c < 0;
            }
            return x.o < y.o;
        });
        bool produced = false;
        for (const Cand& cd : cands) {
            const RewriteRule& ra = sys.rules[cd.i];
            const RewriteRule& rb = sys.rules[cd.j];
            if (!ignore_resolved && !resolved.insert(OverlapKey{ra.lhs, rb.lhs, cd.o}).second) {
                continue;
            }
            // w = a·v = u·b reduces two ways; their difference must vanish.
            NCPoly u = segment(ra.lhs, 0, ra.lhs.ls.size() - cd.o);
            NCPoly v = segment(rb.lhs, cd.o, rb.lhs.ls.size());
            NCPoly s = ra.rhs * v - u * rb.rhs;
            NCPoly snf = normal_form(sys, s);
            if (!snf.is_zero()) {
                enqueue(snf);
                produced = true;
                if (ignore_resolved) {
                    // The verification sweep only needs one witness.
                    return true;
                }
            }
        }
        return produced;
    }

    void normalize_rhs() {
        // A rule's lhs never occurs in its own rhs (every rhs word is
        // deglex-smaller), so reducing rhs against the full system is safe.
        for (RewriteRule& r : sys.rules) {
            r.rhs = normal_form(sys, r.rhs);
        }
    }
};

}  // namespace

RewriteSystem complete(const Presentation& pres, int degree_cap) {
    if (degree_cap < 1) {
        throw std::invalid_argument("degree cap must be positive");
    }
    Completion c;
    c.sys.degree_cap = degree_cap;
    c.sys.presentation_hash = pres.hash;

    for (const Relation& rel : pres.relations) {
        if (rel.poly.is_zero()) {
            continue;
        }
        if (static_cast<long>(rel.poly.degree()) > degree_cap) {
            throw CapExceeded("input relation of degree " + std::to_string(rel.poly.degree()) +
                              " exceeds cap " + std::to_string(degree_cap) +
                              ": the completed system would be incomplete at this cap");
        }
        c.enqueue(rel.poly);
        c.enqueue(rel.poly.star());
    }

    for (int rounds = 0;; ++rounds) {
        if (rounds > 10000) {
            throw Error("completion did not stabilize within the round budget");
        }
        c.drain();
        if (!c.overlap_round(/*ignore_resolved=*/false) && c.pending.empty()) {
            break;
        }
    }
    c.normalize_rhs();
    // Full verification sweep over every overlap of the final rules; the
    // loop above already resolved them, this re-checks after rhs cleanup.
    if (c.overlap_round(/*ignore_resolved=*/true)) {
        for (int rounds = 0;; ++rounds) {
            if (rounds > 10000) {
                throw Error("completion did not stabilize within the round budget");
            }
            c.drain();
            if (!c.overlap_round(/*ignore_resolved=*/false) && c.pending.empty()) {
                break;
            }
        }
        c.normalize_rhs();
        if (c.overlap_round(/*ignore_resolved=*/true)) {
            throw Error("completion verification sweep failed to stabilize");
        }
    }
    c.sys.status = SystemStatus::CompleteUpToCap;
    return c.sys;
}

}  // namespace qsg
