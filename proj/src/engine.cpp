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

#include "qsg/engine.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "qsg/cache.hpp"
#include "qsg/errors.hpp"

namespace qsg {

namespace {

std::string hex16(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace

Engine::Engine() {
    if (const char* dir = std::getenv("QSG_CACHE_DIR"); dir != nullptr) {
        cache_dir_ = dir;
    }
}

Engine::Engine(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const RewriteSystem> Engine::system(const Presentation& pres, int cap) {
    if (cap <= 0) {
        cap = default_cap_;
    }
    const auto key = std::make_pair(pres.hash, cap);
    if (auto it = memo_.find(key); it != memo_.end()) {
        if (it->second->status == SystemStatus::Inconsistent) {
            throw InconsistentPresentation("ideal contains the unit (memoized)");
        }
        return it->second;
    }
    std::string path;
    if (!cache_dir_.empty()) {
        path = cache_dir_ + "/" + hex16(pres.hash) + "-c" + std::to_string(cap) + ".rules";
        std::error_code ec;
        if (std::filesystem::exists(path, ec)) {
            try {
                RewriteSystem rs = cache_load(path, pres);
                if (rs.degree_cap == cap) {
                    auto sp = std::make_shared<const RewriteSystem>(std::move(rs));
                    memo_.emplace(key, sp);
                    return sp;
                }
            } catch (const Error&) {
                // Unusable cache entry: fall through and recompute.
            }
        }
    }
    try {
        RewriteSystem rs = complete(pres, cap);
        auto sp = std::make_shared<const RewriteSystem>(std::move(rs));
        memo_.emplace(key, sp);
        if (!path.empty()) {
            try {
                std::error_code ec;
                std::filesystem::create_directories(cache_dir_, ec);
                cache_save(*sp, path, pres.alphabet);
            } catch (...) {
                // Disk cache is best effort only.
            }
        }
        return sp;
    } catch (const InconsistentPresentation&) {
        memo_.emplace(key, std::make_shared<const RewriteSystem>(
                               inconsistent_system(pres.hash, cap)));
        throw;
    }
}

NCPoly Engine::nf(const Presentation& pres, const NCPoly& p, int cap, Strategy strategy) {
    return normal_form(*system(pres, cap), p, strategy);
}

ZeroCheck Engine::zero(const Presentation& pres, const NCPoly& p, int cap) {
    return is_zero_mod_ideal(*system(pres, cap), p);
}

NCPoly Engine::nf(const Space& space, const NCPoly& p, int cap) {
    const size_t arity = space.arity();
    for (const auto& t : p.terms()) {
        for (const Letter& l : t.first.ls) {
            if (l.leg >= arity) {
                throw MismatchedSpace("letter on leg " + std::to_string(l.leg) +
                                      " in a space of arity " + std::to_string(arity));
            }
        }
    }
    std::vector<std::shared_ptr<const RewriteSystem>> systems;
    systems.reserve(arity);
    for (const Presentation* f : space.factors) {
        systems.push_back(system(*f, cap));
    }
    NCPoly result = NCPoly::zero();
    for (const auto& t : p.terms()) {
        NCPoly prod = NCPoly::scalar(t.second);
        for (size_t leg = 0; leg < arity; ++leg) {
            Word block = t.first.leg_block(static_cast<uint8_t>(leg));
            if (block.empty()) {
                continue;
            }
            NCPoly reduced = normal_form(*systems[leg], NCPoly::term(block, Scalar(1)));
            prod = prod * reduced.shifted(static_cast<uint8_t>(leg));
        }
        result += prod;
    }
    return result;
}

ZeroCheck Engine::zero(const Space& space, const NCPoly& p, int cap) {
    NCPoly r = nf(space, p, cap);
    return ZeroCheck{r.is_zero(), r};
}

MorphismReport check_morphism(GeneratorMap& f, Engine& eng, int cap) {
    MorphismReport rep;
    if (f.source == nullptr) {
        throw std::invalid_argument("generator map has no source presentation");
    }
    if (f.images.size() != f.source->alphabet.size()) {
        throw std::invalid_argument("generator map image count does not match source generators");
    }
    f.verified = false;
    for (const Relation& rel : f.source->relations) {
        NCPoly image = apply(f, rel.poly);
        try {
            ZeroCheck z = eng.zero(f.target, image, cap);
            if (!z.zero) {
                rep.status = MorphismStatus::Violations;
                rep.violations.push_back(MorphismViolation{rel.tag, rel.poly, z.residue});
            }
        } catch (const DegreeOverflow& e) {
            rep.status = MorphismStatus::Inconclusive;
            rep.note = std::string("degree overflow while checking '") + rel.tag + "': " + e.what();
            return rep;
        }
    }
    if (rep.status == MorphismStatus::Verified) {
        f.verified = true;
        rep.note = "all relation images reduce to zero";
    }
    return rep;
}

}  // namespace qsg
