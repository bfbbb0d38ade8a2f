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

#include "updstruct/update.hpp"

#include <set>

namespace updstruct {

namespace {

template <class M>
void require(const M &f, const ObjectOf<M> &dom, const ObjectOf<M> &cod, const char *what) {
    if (f.dom() != dom || f.cod() != cod) {
        throw TypeMismatch(std::string(what) + " does not have the type its update structure requires");
    }
}

// Right-to-left composition of three maps.
template <class M>
M compose_all(const M &h, const M &g, const M &f) {
    return compose(h, compose(g, f));
}

// Rank deficiency of the curried put on the linear backend.
Comparison faithful_comparison(const LinearUpdate &u, const Tolerance &tol) {
    std::size_t ds = u.system.dim();
    std::size_t dp = u.property.dim();
    const Matrix &put = u.put.matrix();
    Matrix curried(ds * ds, dp);
    for (std::size_t j = 0; j < dp; j++) {
        for (std::size_t s = 0; s < ds; s++) {
            curried.block(s * ds, j, ds, 1) = put.col(s * dp + j);
        }
    }
    Comparison out;
    if (dp == 0 || ds == 0) {
        out.holds = true;
        return out;
    }
    Eigen::JacobiSVD<Matrix> svd(curried);
    const auto &sv = svd.singularValues();
    double cutoff = tol.absolute + tol.relative * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); k++) {
        if (sv(k) > cutoff) {
            rank++;
        }
    }
    out.residual = static_cast<double>(dp - rank);
    out.threshold = 0;
    out.holds = rank == dp;
    return out;
}

// Number of property values whose curried put coincides with an earlier one.
Comparison faithful_comparison(const SetUpdate &u, const Tolerance &) {
    std::size_t ns = u.system.size();
    std::size_t np = u.property.size();
    std::set<std::vector<std::size_t>> seen;
    Comparison out;
    for (std::size_t v = 0; v < np; v++) {
        std::vector<std::size_t> column(ns);
        for (std::size_t s = 0; s < ns; s++) {
            column[s] = u.put(s * np + v);
        }
        if (!seen.insert(column).second) {
            out.witnesses.push_back(v);
        }
    }
    out.residual = static_cast<double>(out.witnesses.size());
    out.holds = out.witnesses.empty();
    return out;
}

template <class M>
struct Wires {
    const UpdateStructure<M> &u;
    M id_s;
    M id_p;

    explicit Wires(const UpdateStructure<M> &u)
        : u(u), id_s(u.system_identity()), id_p(identity(u.property)) {
    }

    M sp(const M &f) const { return tensor(id_s, f); }
    M pp(const M &f) const { return tensor(f, id_p); }
    // sp(f) . x and pp(f) . x, avoiding the Kronecker product when possible.
    M sp_then(const M &f, const M &x) const {
        return u.system_idempotent ? compose(sp(f), x) : compose_id_tensor(u.system, f, x);
    }
    M pp_then(const M &f, const M &x) const { return compose_tensor_id(f, u.property, x); }
};

template <class M>
Comparison law_comparison(const UpdateStructure<M> &u, Law law, const Tolerance &tol) {
    Wires<M> w(u);
    const M &put = u.put;
    const M &get = u.get;
    switch (law) {
        case Law::PutPut:
            return compare(compose(put, w.pp(put)), compose(put, w.sp(u.mult)), tol);
        case Law::GetGet:
            return compare(compose(w.pp(get), get), compose(w.sp(u.comult), get), tol);
        case Law::PutGet:
        case Law::PutGetB:
            return compare(compose(get, put), compose(w.pp(put), w.sp(u.comult)), tol);
        case Law::GetPut:
            return compare(compose(put, get), w.id_s, tol);
        case Law::RepeatUpdate:
            return compare(compose_all(put, w.pp(put), w.sp(u.comult)), put, tol);
        case Law::PutGetA:
            return compare(compose(get, put), tensor(w.id_s, w.id_p), tol);
        case Law::PutGetC:
            return compare(compose(get, put), compose(w.sp(u.mult), w.pp(get)), tol);
        case Law::TrivialUpdate:
            if (!u.trivial_update) {
                throw MissingComponent("structure has no trivial update");
            }
            return compare(compose(put, w.sp(*u.trivial_update)), w.id_s, tol);
        case Law::TrivialOutcome:
            if (!u.trivial_outcome) {
                throw MissingComponent("structure has no trivial outcome");
            }
            return compare(compose(w.sp(*u.trivial_outcome), get), w.id_s, tol);
        case Law::Faithful:
            return faithful_comparison(u, tol);
        case Law::CommutativePut: {
            auto twice = compose(put, w.pp(put));
            return compare(compose(twice, w.sp(swap(u.property, u.property))), twice, tol);
        }
        case Law::CommutativeGet: {
            auto twice = compose(w.pp(get), get);
            return compare(compose(w.sp(swap(u.property, u.property)), twice), twice, tol);
        }
    }
    throw std::invalid_argument("unknown law");
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::set:
            return "set";
        case Backend::linear:
            return "linear";
        case Backend::doubled:
            return "doubled";
        case Backend::split:
            return "split";
    }
    return "?";
}

template <class M>
void UpdateStructure<M>::validate() const {
    constexpr bool is_set = std::is_same_v<M, FinFunction>;
    if (is_set && (backend == Backend::linear || backend == Backend::doubled)) {
        throw std::invalid_argument("cartesian structure tagged with a linear backend");
    }
    if (!is_set && backend == Backend::set) {
        throw std::invalid_argument("linear structure tagged with the set backend");
    }
    require(put, system * property, system, "put");
    require(get, system, system * property, "get");
    require(mult, property * property, property, "mult");
    require(comult, property, property * property, "comult");
    if (trivial_update) {
        require(*trivial_update, Object{}, property, "trivial update");
    }
    if (trivial_outcome) {
        require(*trivial_outcome, property, Object{}, "trivial outcome");
    }
    if ((backend == Backend::split) != system_idempotent.has_value()) {
        throw std::invalid_argument("a system idempotent is present exactly on the split backend");
    }
    if (system_idempotent) {
        require(*system_idempotent, system, system, "system idempotent");
    }
}

template <class M>
M UpdateStructure<M>::system_identity() const {
    return system_idempotent ? *system_idempotent : identity(system);
}

std::string_view law_name(Law law) {
    switch (law) {
        case Law::PutPut:
            return "PutPut";
        case Law::GetGet:
            return "GetGet";
        case Law::PutGet:
            return "PutGet";
        case Law::GetPut:
            return "GetPut";
        case Law::RepeatUpdate:
            return "RepeatUpdate";
        case Law::PutGetA:
            return "PutGetA";
        case Law::PutGetB:
            return "PutGetB";
        case Law::PutGetC:
            return "PutGetC";
        case Law::TrivialUpdate:
            return "TrivialUpdate";
        case Law::TrivialOutcome:
            return "TrivialOutcome";
        case Law::Faithful:
            return "Faithful";
        case Law::CommutativePut:
            return "CommutativePut";
        case Law::CommutativeGet:
            return "CommutativeGet";
    }
    return "?";
}

std::optional<Law> parse_law(std::string_view name) {
    for (auto law : kAllLaws) {
        if (law_name(law) == name) {
            return law;
        }
    }
    return std::nullopt;
}

template <class M>
bool law_applicable(const UpdateStructure<M> &u, Law law) {
    if (law == Law::TrivialUpdate) {
        return u.trivial_update.has_value();
    }
    if (law == Law::TrivialOutcome) {
        return u.trivial_outcome.has_value();
    }
    return true;
}

template <class M>
LawCheckResult check_law(const UpdateStructure<M> &u, Law law, const Tolerance &tol) {
    u.validate();
    return LawCheckResult::from(std::string(law_name(law)), law_comparison(u, law, tol));
}

std::string_view class_kind_name(ClassKind k) {
    switch (k) {
        case ClassKind::strong:
            return "strong";
        case ClassKind::weak_only:
            return "weak_only";
        case ClassKind::neither:
            return "neither";
    }
    return "?";
}

template <class M>
Classification classify(const UpdateStructure<M> &u, const Tolerance &tol) {
    Classification out;
    for (auto law : {Law::PutPut, Law::GetGet, Law::PutGet, Law::GetPut, Law::RepeatUpdate}) {
        out.checked.push_back(check_law(u, law, tol));
        if (!out.checked.back().holds) {
            out.failing.push_back(out.checked.back());
        }
    }
    bool modules = out.checked[0].holds && out.checked[1].holds && out.checked[2].holds;
    if (modules && out.checked[3].holds) {
        out.kind = ClassKind::strong;
    } else if (modules && out.checked[4].holds) {
        out.kind = ClassKind::weak_only;
    } else {
        out.kind = ClassKind::neither;
    }
    return out;
}

std::string_view derived_name(DerivedProp p) {
    switch (p) {
        case DerivedProp::weak_trivial_implies_strong:
            return "weak_trivial_implies_strong";
        case DerivedProp::putget_idem:
            return "putget_idem";
        case DerivedProp::coassoc_under_put_from_B:
            return "coassoc_under_put_from_B";
        case DerivedProp::assoc_under_get_from_C:
            return "assoc_under_get_from_C";
        case DerivedProp::frobenius_under_put_from_BC:
            return "frobenius_under_put_from_BC";
        case DerivedProp::comm_under_put:
            return "comm_under_put";
        case DerivedProp::unit_under_put:
            return "unit_under_put";
        case DerivedProp::coassoc_under_faithful_putget:
            return "coassoc_under_faithful_putget";
    }
    return "?";
}

std::optional<DerivedProp> parse_derived(std::string_view name) {
    for (auto p : kAllDerivedProps) {
        if (derived_name(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds:
            return "holds";
        case Verdict::fails:
            return "fails";
        case Verdict::vacuous:
            return "vacuous";
    }
    return "?";
}

std::vector<Law> derived_premises(DerivedProp prop) {
    switch (prop) {
        case DerivedProp::weak_trivial_implies_strong:
            return {Law::PutPut, Law::GetGet, Law::PutGet, Law::RepeatUpdate, Law::TrivialUpdate};
        case DerivedProp::putget_idem:
            return {Law::PutGet, Law::RepeatUpdate};
        case DerivedProp::coassoc_under_put_from_B:
            return {Law::PutGetB, Law::GetGet};
        case DerivedProp::assoc_under_get_from_C:
            return {Law::PutGetC, Law::PutPut};
        case DerivedProp::frobenius_under_put_from_BC:
            return {Law::PutGetB, Law::PutGetC, Law::PutPut};
        case DerivedProp::comm_under_put:
            return {Law::CommutativePut, Law::PutPut};
        case DerivedProp::unit_under_put:
            return {Law::TrivialUpdate, Law::PutPut};
        case DerivedProp::coassoc_under_faithful_putget:
            return {Law::PutPut, Law::GetGet, Law::Faithful};
    }
    return {};
}

namespace {

template <class M>
Comparison derived_conclusion(const UpdateStructure<M> &u, DerivedProp prop, const Tolerance &tol) {
    Wires<M> w(u);
    const M &put = u.put;
    const M &get = u.get;
    const M &id_p = w.id_p;
    const auto &p = u.property;
    auto mult3_left = [&] { return compose(u.mult, tensor(u.mult, id_p)); };
    auto mult3_right = [&] { return compose(u.mult, tensor(id_p, u.mult)); };
    auto comult3_left = [&] { return compose_tensor_id(u.comult, p, u.comult); };
    auto comult3_right = [&] { return compose_id_tensor(p, u.comult, u.comult); };
    switch (prop) {
        case DerivedProp::weak_trivial_implies_strong:
            return law_comparison(u, Law::GetPut, tol);
        case DerivedProp::putget_idem: {
            auto e = compose(put, get);
            return compare(compose(e, e), e, tol);
        }
        case DerivedProp::coassoc_under_put_from_B: {
            // Put every leg of a three-fold copy back, in order.
            auto put3 = [&](const M &c3) {
                return compose(put, w.pp_then(put, compose_tensor_id(put, p * p, w.sp(c3))));
            };
            return compare(put3(comult3_left()), put3(comult3_right()), tol);
        }
        case DerivedProp::assoc_under_get_from_C: {
            auto get3 = compose_tensor_id(get, p * p, w.pp_then(get, get));
            return compare(w.sp_then(mult3_left(), get3), w.sp_then(mult3_right(), get3), tol);
        }
        case DerivedProp::frobenius_under_put_from_BC: {
            auto under = [&](const M &f) { return w.pp_then(put, w.sp(f)); };
            auto left = under(compose_tensor_id(u.mult, p, tensor(id_p, u.comult)));
            auto middle = under(compose(u.comult, u.mult));
            auto right = under(compose_id_tensor(p, u.mult, tensor(u.comult, id_p)));
            return worst_of(compare(left, middle, tol), compare(right, middle, tol));
        }
        case DerivedProp::comm_under_put: {
            auto swapped = compose(u.mult, swap(u.property, u.property));
            return compare(compose(put, w.sp(u.mult)), compose(put, w.sp(swapped)), tol);
        }
        case DerivedProp::unit_under_put: {
            const M &unit = *u.trivial_update;
            auto left = compose(put, w.sp(compose(u.mult, tensor(unit, id_p))));
            auto right = compose(put, w.sp(compose(u.mult, tensor(id_p, unit))));
            return worst_of(compare(left, put, tol), compare(right, put, tol));
        }
        case DerivedProp::coassoc_under_faithful_putget: {
            auto m3l = mult3_left();
            auto m3r = mult3_right();
            auto under_put = compare(compose(put, w.sp(m3l)), compose(put, w.sp(m3r)), tol);
            auto under_get = compare(w.sp_then(comult3_left(), get), w.sp_then(comult3_right(), get), tol);
            auto on_the_nose = compare(m3l, m3r, tol);
            return worst_of(worst_of(under_put, under_get), on_the_nose);
        }
    }
    throw std::invalid_argument("unknown derived proposition");
}

}  // namespace

template <class M>
DerivedResult verify_derived(const UpdateStructure<M> &u, DerivedProp prop, const Tolerance &tol) {
    u.validate();
    DerivedResult out;
    out.prop = prop;
    bool premises_hold = true;
    for (auto law : derived_premises(prop)) {
        if (!law_applicable(u, law)) {
            premises_hold = false;
            continue;
        }
        out.premises.push_back(check_law(u, law, tol));
        premises_hold = premises_hold && out.premises.back().holds;
    }
    if (!premises_hold) {
        out.verdict = Verdict::vacuous;
        return out;
    }
    auto c = derived_conclusion(u, prop, tol);
    out.residual = c.residual;
    out.threshold = c.threshold;
    out.verdict = c.holds ? Verdict::holds : Verdict::fails;
    return out;
}

template struct UpdateStructure<Morphism>;
template struct UpdateStructure<FinFunction>;
template bool law_applicable(const LinearUpdate &, Law);
template bool law_applicable(const SetUpdate &, Law);
template LawCheckResult check_law(const LinearUpdate &, Law, const Tolerance &);
template LawCheckResult check_law(const SetUpdate &, Law, const Tolerance &);
template Classification classify(const LinearUpdate &, const Tolerance &);
template Classification classify(const SetUpdate &, const Tolerance &);
template DerivedResult verify_derived(const LinearUpdate &, DerivedProp, const Tolerance &);
template DerivedResult verify_derived(const SetUpdate &, DerivedProp, const Tolerance &);

}  // namespace updstruct
