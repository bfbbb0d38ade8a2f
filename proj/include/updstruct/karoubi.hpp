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

#ifndef UPDSTRUCT_KAROUBI_HPP
#define UPDSTRUCT_KAROUBI_HPP

#include "updstruct/update.hpp"

namespace updstruct {

/// An object (A, pi) of the idempotent completion.
template <class M>
struct SplitObject {
    ObjectOf<M> base;
    M idempotent;

    /// Throws std::invalid_argument unless pi . pi = pi.
    void validate(const Tolerance &tol = {}) const;
};

template <class M>
struct SplitMorphism {
    SplitObject<M> dom;
    SplitObject<M> cod;
    M map;
};

struct AbsorptionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Wraps f after checking sigma . f = f = f . pi.
template <class M>
SplitMorphism<M> split_wrap(const M &f, const SplitObject<M> &dom, const SplitObject<M> &cod,
                            const Tolerance &tol = {});

/// Composition in the envelope (underlying composite, outer split objects).
template <class M>
SplitMorphism<M> compose(const SplitMorphism<M> &g, const SplitMorphism<M> &f);

/// ([d, d], deco_d).
SplitObject<Morphism> classical_object(std::size_t d);

/// Dimension of the image of a linear idempotent; number of fixed points of a set one.
std::size_t fixed_point_rank(const Morphism &e, const Tolerance &tol = {});
std::size_t fixed_point_rank(const FinFunction &e, const Tolerance &tol = {});

template <class M>
struct Restriction {
    UpdateStructure<M> structure;
    /// e = put . get.
    M idempotent;
    LawCheckResult idempotence;
    /// True when e is the identity and `structure` is the input unchanged.
    bool unchanged = false;
    /// True when the one-sided get' = (e (x) id) . get was needed.
    bool one_sided_get = false;
    Classification classification;
};

/// GetPut restriction onto (S, put . get): put' = e . put . (e (x) id),
/// get' = (e (x) id) . get . e, tagged `split`. Throws PremiseError if
/// RepeatUpdate or idempotence of e fails, or if neither get' candidate
/// makes the result strong.
template <class M>
Restriction<M> getput_restriction(const UpdateStructure<M> &u, const Tolerance &tol = {});

}  // namespace updstruct

#endif
