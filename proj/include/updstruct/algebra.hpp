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

#ifndef UPDSTRUCT_ALGEBRA_HPP
#define UPDSTRUCT_ALGEBRA_HPP

#include <optional>
#include <string_view>
#include <type_traits>

#include "updstruct/category.hpp"
#include "updstruct/check_result.hpp"

namespace updstruct {

/// Object type of a backend's morphisms (TensorType or SetType).
template <class M>
using ObjectOf = std::remove_cvref_t<decltype(std::declval<const M &>().dom())>;

template <class M>
struct Magma {
    ObjectOf<M> carrier;
    M mult;
    std::optional<M> unit;

    void validate() const;
};

template <class M>
struct Comagma {
    ObjectOf<M> carrier;
    M comult;
    std::optional<M> counit;

    void validate() const;
};

template <class M>
struct FrobeniusAlgebra {
    ObjectOf<M> carrier;
    M mult;
    M unit;
    M comult;
    M counit;

    void validate() const;
    Magma<M> magma() const { return {carrier, mult, unit}; }
    Comagma<M> comagma() const { return {carrier, comult, counit}; }
};

enum class AlgebraLaw { assoc, coassoc, unit, counit, comm, cocomm, special, frobenius, dagger_frobenius };

std::string_view algebra_law_name(AlgebraLaw law);

/// Checks one law. Throws std::invalid_argument if the law does not apply to
/// the kind of algebra, MissingComponent if a needed (co)unit is absent.
///
/// On the set backend a magma without a stored unit is searched exhaustively
/// for one; the residual is the smallest disagreement count over candidates.
template <class M>
LawCheckResult check_algebra(const Magma<M> &a, AlgebraLaw law, const Tolerance &tol = {});
template <class M>
LawCheckResult check_algebra(const Comagma<M> &a, AlgebraLaw law, const Tolerance &tol = {});
template <class M>
LawCheckResult check_algebra(const FrobeniusAlgebra<M> &a, AlgebraLaw law, const Tolerance &tol = {});

/// Computational-basis spider algebra: copy |i> -> |ii>, delete |i> -> 1,
/// match |ij> -> delta_ij |i>, unit sum_i |i>.
FrobeniusAlgebra<Morphism> scfa_from_dimension(std::size_t d);
/// The spider algebra of the orthonormal basis given by the columns of `u`.
FrobeniusAlgebra<Morphism> scfa_from_basis(const Morphism &u);

/// pi_2 : V x V -> V, the "keep the newest" magma. It has no unit once |V| > 1.
Magma<FinFunction> left_delete(const SetType &v);
/// delta_V with counit the unique map to the point.
Comagma<FinFunction> set_diagonal(const SetType &v);
/// Exhaustive search for a two-sided unit element.
std::optional<std::size_t> find_unit(const Magma<FinFunction> &m);

/// Composition of operators on carrier [d, d], read as |j*, k> = |k><j|:
/// sigma(|j*,k> (x) |l*,m>) = delta_kl |j*,m>. Unit cup(d); comult
/// (1/d) sigma-dagger and counit d cap(d), the scalars for which the counit
/// law holds and sigma . comult = id.
FrobeniusAlgebra<Morphism> pair_of_pants(std::size_t d);

}  // namespace updstruct

#endif
