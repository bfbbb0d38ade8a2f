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

#ifndef UPDSTRUCT_LENS_HPP
#define UPDSTRUCT_LENS_HPP

#include <optional>
#include <random>

#include "updstruct/category.hpp"
#include "updstruct/update.hpp"

namespace updstruct {

/// A lens (S, V, get : S -> V, put : S x V -> S). Well-behavedness is
/// checked, never assumed.
struct VwbLens {
    SetType system;
    SetType view;
    FinFunction get_fn;
    FinFunction put_fn;

    void validate() const;
};

struct LensLawReport {
    Comparison put_put;  // p(p(s,v1),v2) = p(s,v2)
    Comparison put_get;  // g(p(s,v)) = v
    Comparison get_put;  // p(s,g(s)) = s

    bool vwb() const { return put_put.holds && put_get.holds && get_put.holds; }
};

/// Exhaustive over all s, v, v1, v2.
LensLawReport check_vwb(const VwbLens &lens);

/// put stays put, get(s) = (s, g(s)), mult = pi_2, comult = delta_V, and the
/// trivial outcome is the unique map V -> 1.
SetUpdate lens_to_update(const VwbLens &lens);

/// Raised by update_to_lens; the message names the violated condition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inverse of lens_to_update: g = pi_V . get, p = put. Requires the set
/// backend, mult = pi_2, comult = delta and a holding trivial outcome.
VwbLens update_to_lens(const SetUpdate &u);

/// Every v0 with put(s, v0) = s for all s.
std::vector<std::size_t> trivial_updates(const VwbLens &lens);

struct Separability {
    bool vwb = false;
    std::optional<std::size_t> trivial_update;
    /// put == pi_S (throws the new view away), checked only when a trivial
    /// update exists on a vwb lens.
    bool separable = false;
    Comparison witness;
};

Separability trivial_update_separability(const VwbLens &lens);

/// S = V x R, get = pi_1, put((v, r), v') = (v', r).
VwbLens constant_complement_lens(const FinSetObject &view, const FinSetObject &complement);
/// V = S, get = id, put = pi_2.
VwbLens identity_lens(const SetType &s);
/// A constant-complement lens seen through a random relabelling of S.
VwbLens random_vwb_lens(std::mt19937_64 &rng, std::size_t view_size, std::size_t complement_size);
/// Uniformly random get and put tables; usually not well behaved.
VwbLens random_lens(std::mt19937_64 &rng, std::size_t system_size, std::size_t view_size);

/// Flag set F = {safe, breached}.
FinSetObject breach_flags();

/// S = p x F: put(<q,x>, q') = <q', breached>, get(<w,x>) = (<w,breached>, w),
/// mult = pi_2, comult = delta_p, trivial outcome the unique map p -> 1.
SetUpdate security_db(const FinSetObject &p);
/// Indices of S = p x F whose flag is `safe`.
std::vector<std::size_t> safe_stratum(const FinSetObject &p);

/// The restricted variant whose flag only records that a put happened:
/// S = p x {untouched, updated}, get = pi_1, put(<q,x>, q') = <q', updated>.
/// A lens, but GetPut fails on untouched states.
VwbLens security_db_update_flag(const FinSetObject &p);

}  // namespace updstruct

#endif
