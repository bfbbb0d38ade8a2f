// Copyright 2026 The update-structures Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "updstruct/lens.hpp"

#include <algorithm>
#include <numeric>

namespace updstruct {

void VwbLens::validate() const {
    if (get_fn.dom() != system || get_fn.cod() != view) {
        throw TypeMismatch("lens get must be S -> V");
    }
    if (put_fn.dom() != system * view || put_fn.cod() != system) {
        throw TypeMismatch("lens put must be S x V -> S");
    }
}

LensLawReport check_vwb(const VwbLens &lens) {
    lens.validate();
    const auto &S = lens.system;
    const auto &V = lens.view;
    auto id_s = identity(S);
    auto id_v = identity(V);
    const auto &p = lens.put_fn;
    const auto &g = lens.get_fn;
    LensLawReport r;
    r.put_put = compare(compose(p, tensor(p, id_v)), compose(p, tensor(id_s, project_second(V, V))));
    r.put_get = compare(compose(g, p), project_second(S, V));
    r.get_put = compare(compose(p, pair(id_s, g)), id_s);
    return r;
}

SetUpdate lens_to_update(const VwbLens &lens) {
    lens.validate();
    SetUpdate u{Backend::set,
                lens.system,
                lens.view,
                lens.put_fn,
                pair(identity(lens.system), lens.get_fn),
                project_second(lens.view, lens.view),
                diagonal(lens.view),
                std::nullopt,
                discard(lens.view),
                std::nullopt};
    u.validate();
    return u;
}

VwbLens update_to_lens(const SetUpdate &u) {
    u.validate();
    if (u.backend != Backend::set) {
        throw PreconditionError("update_to_lens needs the set backend");
    }
    if (u.mult != project_second(u.property, u.property)) {
        throw PreconditionError("update_to_lens needs mult = pi_2");
    }
    if (u.comult != diagonal(u.property)) {
        throw PreconditionError("update_to_lens needs comult = delta");
    }
    // In a cartesian category the only effect p -> 1 is the discard.
    auto outcome = compose(tensor(identity(u.system), discard(u.property)), u.get);
    if (!compare(outcome, identity(u.system)).holds) {
        throw PreconditionError("update_to_lens needs a trivial outcome");
    }
    return VwbLens{u.system, u.property, compose(project_second(u.system, u.property), u.get), u.put};
}

std::vector<std::size_t> trivial_updates(const VwbLens &lens) {
    lens.validate();
    std::vector<std::size_t> out;
    auto id_s = identity(lens.system);
    for (std::size_t v = 0; v < lens.view.size(); v++) {
        if (compare(compose(lens.put_fn, tensor(id_s, element(lens.view, v))), id_s).holds) {
            out.push_back(v);
        }
    }
    return out;
}

Separability trivial_update_separability(const VwbLens &lens) {
    Separability r;
    r.vwb = check_vwb(lens).vwb();
    auto found = trivial_updates(lens);
    if (!r.vwb || found.empty()) {
        return r;
    }
    r.trivial_update = found.front();
    r.witness = compare(lens.put_fn, project_first(lens.system, lens.view));
    r.separable = r.witness.holds;
    return r;
}

VwbLens constant_complement_lens(const FinSetObject &view, const FinSetObject &complement) {
    SetType V{view};
    SetType S{view, complement};
    auto get = project_first(V, SetType{complement});
    auto put = FinFunction::tabulate(S * V, S, [](const std::vector<std::size_t> &x) {
        return std::vector<std::size_t>{x[2], x[1]};
    });
    return VwbLens{S, V, get, put};
}

VwbLens identity_lens(const SetType &s) {
    return VwbLens{s, s, identity(s), project_second(s, s)};
}

VwbLens random_vwb_lens(std::mt19937_64 &rng, std::size_t view_size, std::size_t complement_size) {
    std::size_t n = view_size * complement_size;
    // relabel[(v, r)] = s
    std::vector<std::size_t> relabel(n);
    std::iota(relabel.begin(), relabel.end(), std::size_t{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; k++) {
        inverse[relabel[k]] = k;
    }
    SetType S{FinSetObject::numbered(n, "s")};
    SetType V{FinSetObject::numbered(view_size, "v")};
    std::vector<std::size_t> get(n);
    std::vector<std::size_t> put(n * view_size);
    for (std::size_t s = 0; s < n; s++) {
        std::size_t r = inverse[s] % complement_size;
        get[s] = inverse[s] / complement_size;
        for (std::size_t v = 0; v < view_size; v++) {
            put[s * view_size + v] = relabel[v * complement_size + r];
        }
    }
    return VwbLens{S, V, FinFunction(S, V, std::move(get)), FinFunction(S * V, S, std::move(put))};
}

VwbLens random_lens(std::mt19937_64 &rng, std::size_t system_size, std::size_t view_size) {
    SetType S{FinSetObject::numbered(system_size, "s")};
    SetType V{FinSetObject::numbered(view_size, "v")};
    std::uniform_int_distribution<std::size_t> pick_s(0, system_size - 1);
    std::uniform_int_distribution<std::size_t> pick_v(0, view_size - 1);
    std::vector<std::size_t> get(system_size);
    std::vector<std::size_t> put(system_size * view_size);
    for (auto &x : get) {
        x = pick_v(rng);
    }
    for (auto &x : put) {
        x = pick_s(rng);
    }
    return VwbLens{S, V, FinFunction(S, V, std::move(get)), FinFunction(S * V, S, std::move(put))};
}

FinSetObject breach_flags() {
    return FinSetObject{"safe", "breached"};
}

SetUpdate security_db(const FinSetObject &p) {
    if (p.size() == 0) {
        throw std::invalid_argument("security database needs a nonempty entry set");
    }
    SetType P{p};
    SetType S{p, breach_flags()};
    constexpr std::size_t breached = 1;
    auto put = FinFunction::tabulate(S * P, S, [](const std::vector<std::size_t> &x) {
        return std::vector<std::size_t>{x[2], breached};
    });
    auto get = FinFunction::tabulate(S, S * P, [](const std::vector<std::size_t> &x) {
        return std::vector<std::size_t>{x[0], breached, x[0]};
    });
    SetUpdate u{Backend::set, S,       P, put, get, project_second(P, P), diagonal(P), std::nullopt, discard(P),
                std::nullopt};
    u.validate();
    return u;
}

std::vector<std::size_t> safe_stratum(const FinSetObject &p) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < p.size(); q++) {
        out.push_back(q * 2);
    }
    return out;
}

VwbLens security_db_update_flag(const FinSetObject &p) {
    if (p.size() == 0) {
        throw std::invalid_argument("security database needs a nonempty entry set");
    }
    SetType P{p};
    SetType S{p, FinSetObject{"untouched", "updated"}};
    constexpr std::size_t updated = 1;
    auto put = FinFunction::tabulate(S * P, S, [](const std::vector<std::size_t> &x) {
        return std::vector<std::size_t>{x[2], updated};
    });
    return VwbLens{S, P, project_first(P, SetType{S.factors()[1]}), put};
}

}  // namespace updstruct
