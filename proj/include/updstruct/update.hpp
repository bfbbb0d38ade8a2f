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

#ifndef UPDSTRUCT_UPDATE_HPP
#define UPDSTRUCT_UPDATE_HPP

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "updstruct/algebra.hpp"
#include "updstruct/category.hpp"
#include "updstruct/check_result.hpp"

namespace updstruct {

/// Which category a structure lives in. `doubled` is the CPM image of the
/// linear backend; `split` means the system is a Karoubi object (S, e) and
/// every system-wire identity in a law is replaced by `e`.
enum class Backend { set, linear, doubled, split };

std::string_view backend_name(Backend b);

/// The tuple (S, p, Put, Get, mult, comult) with optional trivial update
/// (a state I -> p) and trivial outcome (an effect p -> I).
template <class M>
struct UpdateStructure {
    using Object = ObjectOf<M>;

    Backend backend;
    Object system;
    Object property;
    M put;     // S (x) p -> S
    M get;     // S -> S (x) p
    M mult;    // p (x) p -> p
    M comult;  // p -> p (x) p
    std::optional<M> trivial_update;
    std::optional<M> trivial_outcome;
    /// Idempotent on S; present exactly when backend == split.
    std::optional<M> system_idempotent;

    /// Throws TypeMismatch / std::invalid_argument on any ill-typed component.
    void validate() const;
    /// identity(S), or the split idempotent.
    M system_identity() const;
    Magma<M> magma() const { return {property, mult, trivial_update}; }
    Comagma<M> comagma() const { return {property, comult, trivial_outcome}; }
};

using LinearUpdate = UpdateStructure<Morphism>;
using SetUpdate = UpdateStructure<FinFunction>;
using AnyUpdate = std::variant<LinearUpdate, SetUpdate>;

enum class Law {
    PutPut,
    GetGet,
    PutGet,
    GetPut,
    RepeatUpdate,
    PutGetA,
    PutGetB,
    PutGetC,
    TrivialUpdate,
    TrivialOutcome,
    Faithful,
    CommutativePut,
    CommutativeGet,
};

inline constexpr std::array<Law, 13> kAllLaws = {
    Law::PutPut,        Law::GetGet,         Law::PutGet,     Law::GetPut,         Law::RepeatUpdate,
    Law::PutGetA,       Law::PutGetB,        Law::PutGetC,    Law::TrivialUpdate,  Law::TrivialOutcome,
    Law::Faithful,      Law::CommutativePut, Law::CommutativeGet,
};

std::string_view law_name(Law law);
std::optional<Law> parse_law(std::string_view name);

/// False when the law needs an optional component that is absent.
template <class M>
bool law_applicable(const UpdateStructure<M> &u, Law law);

/// Builds both sides of the law as concrete morphisms and compares them.
///
/// PutGet and PutGetB are the same equation
///   get . put = (put (x) id) . (id (x) comult);
/// PutGetA is get . put = id and PutGetC is
///   get . put = (id (x) mult) . (get (x) id).
/// Faithful is injectivity of v -> put . (id (x) v): rank deficiency on the
/// linear backend, number of colliding property values on the set backend.
template <class M>
LawCheckResult check_law(const UpdateStructure<M> &u, Law law, const Tolerance &tol = {});

enum class ClassKind { strong, weak_only, neither };

std::string_view class_kind_name(ClassKind k);

struct Classification {
    ClassKind kind = ClassKind::neither;
    /// Results for PutPut, GetGet, PutGet, GetPut, RepeatUpdate in that order.
    std::vector<LawCheckResult> checked;
    std::vector<LawCheckResult> failing;
};

template <class M>
Classification classify(const UpdateStructure<M> &u, const Tolerance &tol = {});

enum class DerivedProp {
    weak_trivial_implies_strong,
    putget_idem,
    coassoc_under_put_from_B,
    assoc_under_get_from_C,
    frobenius_under_put_from_BC,
    comm_under_put,
    unit_under_put,
    coassoc_under_faithful_putget,
};

inline constexpr std::array<DerivedProp, 8> kAllDerivedProps = {
    DerivedProp::weak_trivial_implies_strong, DerivedProp::putget_idem,
    DerivedProp::coassoc_under_put_from_B,    DerivedProp::assoc_under_get_from_C,
    DerivedProp::frobenius_under_put_from_BC, DerivedProp::comm_under_put,
    DerivedProp::unit_under_put,              DerivedProp::coassoc_under_faithful_putget,
};

std::string_view derived_name(DerivedProp p);
std::optional<DerivedProp> parse_derived(std::string_view name);

enum class Verdict { holds, fails, vacuous };

std::string_view verdict_name(Verdict v);

/// An implication check. `vacuous` when some premise fails (or a needed
/// component is missing); otherwise the conclusion decides holds/fails.
struct DerivedResult {
    DerivedProp prop;
    Verdict verdict = Verdict::vacuous;
    double residual = 0;
    double threshold = 0;
    std::vector<LawCheckResult> premises;
};

template <class M>
DerivedResult verify_derived(const UpdateStructure<M> &u, DerivedProp prop, const Tolerance &tol = {});

/// Laws each derived proposition assumes.
std::vector<Law> derived_premises(DerivedProp prop);

}  // namespace updstruct

#endif
