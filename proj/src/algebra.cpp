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

#include "updstruct/algebra.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace updstruct {

namespace {

template <class M>
void require_type(const M &f, const ObjectOf<M> &dom, const ObjectOf<M> &cod, const char *what) {
    if (f.dom() != dom || f.cod() != cod) {
        throw TypeMismatch(std::string(what) + " has the wrong type for its carrier");
    }
}

template <class M>
Comparison unit_comparison(const M &mult, const M &unit, const ObjectOf<M> &p, const Tolerance &tol) {
    auto id = identity(p);
    auto left = compose(mult, tensor(unit, id));
    auto right = compose(mult, tensor(id, unit));
    return worst_of(compare(left, id, tol), compare(right, id, tol));
}

template <class M>
Comparison counit_comparison(const M &comult, const M &counit, const ObjectOf<M> &p, const Tolerance &tol) {
    auto id = identity(p);
    auto left = compose(tensor(counit, id), comult);
    auto right = compose(tensor(id, counit), comult);
    return worst_of(compare(left, id, tol), compare(right, id, tol));
}

template <class M>
Comparison assoc_comparison(const M &mult, const ObjectOf<M> &p, const Tolerance &tol) {
    auto id = identity(p);
    return compare(compose(mult, tensor(mult, id)), compose(mult, tensor(id, mult)), tol);
}

template <class M>
Comparison coassoc_comparison(const M &comult, const ObjectOf<M> &p, const Tolerance &tol) {
    return compare(compose_tensor_id(comult, p, comult), compose_id_tensor(p, comult, comult), tol);
}

template <class M>
Comparison frobenius_comparison(const M &mult, const M &comult, const ObjectOf<M> &p, const Tolerance &tol) {
    auto id = identity(p);
    auto left = compose_tensor_id(mult, p, tensor(id, comult));
    auto middle = compose(comult, mult);
    auto right = compose_id_tensor(p, mult, tensor(comult, id));
    return worst_of(compare(left, middle, tol), compare(right, middle, tol));
}

[[noreturn]] void not_applicable(AlgebraLaw law, const char *kind) {
    throw std::invalid_argument("law '" + std::string(algebra_law_name(law)) + "' does not apply to a " + kind);
}

Comparison searched_unit(const Magma<FinFunction> &m) {
    auto n = m.carrier.size();
    Comparison best;
    best.holds = false;
    best.residual = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < n; u++) {
        auto c = unit_comparison(m.mult, element(m.carrier, u), m.carrier, {});
        if (c.residual < best.residual) {
            best = c;
        }
    }
    if (n == 0) {
        // The empty set has no element to serve as a unit.
        best.residual = 1;
    }
    return best;
}

}  // namespace

std::string_view algebra_law_name(AlgebraLaw law) {
    switch (law) {
        case AlgebraLaw::assoc:
            return "assoc";
        case AlgebraLaw::coassoc:
            return "coassoc";
        case AlgebraLaw::unit:
            return "unit";
        case AlgebraLaw::counit:
            return "counit";
        case AlgebraLaw::comm:
            return "comm";
        case AlgebraLaw::cocomm:
            return "cocomm";
        case AlgebraLaw::special:
            return "special";
        case AlgebraLaw::frobenius:
            return "frobenius";
        case AlgebraLaw::dagger_frobenius:
            return "dagger_frobenius";
    }
    return "?";
}

template <class M>
void Magma<M>::validate() const {
    require_type(mult, carrier * carrier, carrier, "mult");
    if (unit) {
        require_type(*unit, ObjectOf<M>{}, carrier, "unit");
    }
}

template <class M>
void Comagma<M>::validate() const {
    require_type(comult, carrier, carrier * carrier, "comult");
    if (counit) {
        require_type(*counit, carrier, ObjectOf<M>{}, "counit");
    }
}

template <class M>
void FrobeniusAlgebra<M>::validate() const {
    magma().validate();
    comagma().validate();
}

template <class M>
LawCheckResult check_algebra(const Magma<M> &a, AlgebraLaw law, const Tolerance &tol) {
    a.validate();
    std::string name(algebra_law_name(law));
    switch (law) {
        case AlgebraLaw::assoc:
            return LawCheckResult::from(name, assoc_comparison(a.mult, a.carrier, tol));
        case AlgebraLaw::comm:
            return LawCheckResult::from(name, compare(compose(a.mult, swap(a.carrier, a.carrier)), a.mult, tol));
        case AlgebraLaw::unit:
            if (a.unit) {
                return LawCheckResult::from(name, unit_comparison(a.mult, *a.unit, a.carrier, tol));
            }
            if constexpr (std::is_same_v<M, FinFunction>) {
                return LawCheckResult::from(name, searched_unit(a));
            } else {
                throw MissingComponent("magma has no unit to check");
            }
        default:
            not_applicable(law, "magma");
    }
}

template <class M>
LawCheckResult check_algebra(const Comagma<M> &a, AlgebraLaw law, const Tolerance &tol) {
    a.validate();
    std::string name(algebra_law_name(law));
    switch (law) {
        case AlgebraLaw::coassoc:
            return LawCheckResult::from(name, coassoc_comparison(a.comult, a.carrier, tol));
        case AlgebraLaw::cocomm:
            return LawCheckResult::from(name, compare(compose(swap(a.carrier, a.carrier), a.comult), a.comult, tol));
        case AlgebraLaw::counit:
            if (!a.counit) {
                throw MissingComponent("comagma has no counit to check");
            }
            return LawCheckResult::from(name, counit_comparison(a.comult, *a.counit, a.carrier, tol));
        default:
            not_applicable(law, "comagma");
    }
}

template <class M>
LawCheckResult check_algebra(const FrobeniusAlgebra<M> &a, AlgebraLaw law, const Tolerance &tol) {
    a.validate();
    std::string name(algebra_law_name(law));
    switch (law) {
        case AlgebraLaw::assoc:
        case AlgebraLaw::comm:
        case AlgebraLaw::unit:
            return check_algebra(a.magma(), law, tol);
        case AlgebraLaw::coassoc:
        case AlgebraLaw::cocomm:
        case AlgebraLaw::counit:
            return check_algebra(a.comagma(), law, tol);
        case AlgebraLaw::special:
            return LawCheckResult::from(name, compare(compose(a.mult, a.comult), identity(a.carrier), tol));
        case AlgebraLaw::frobenius:
            return LawCheckResult::from(name, frobenius_comparison(a.mult, a.comult, a.carrier, tol));
        case AlgebraLaw::dagger_frobenius:
            if constexpr (std::is_same_v<M, Morphism>) {
                auto c = worst_of(compare(a.mult, dagger(a.comult), tol), compare(a.unit, dagger(a.counit), tol));
                return LawCheckResult::from(name, worst_of(c, frobenius_comparison(a.mult, a.comult, a.carrier, tol)));
            } else {
                not_applicable(law, "cartesian algebra");
            }
    }
    not_applicable(law, "Frobenius algebra");
}

template struct Magma<Morphism>;
template struct Magma<FinFunction>;
template struct Comagma<Morphism>;
template struct Comagma<FinFunction>;
template struct FrobeniusAlgebra<Morphism>;
template struct FrobeniusAlgebra<FinFunction>;
template LawCheckResult check_algebra(const Magma<Morphism> &, AlgebraLaw, const Tolerance &);
template LawCheckResult check_algebra(const Magma<FinFunction> &, AlgebraLaw, const Tolerance &);
template LawCheckResult check_algebra(const Comagma<Morphism> &, AlgebraLaw, const Tolerance &);
template LawCheckResult check_algebra(const Comagma<FinFunction> &, AlgebraLaw, const Tolerance &);
template LawCheckResult check_algebra(const FrobeniusAlgebra<Morphism> &, AlgebraLaw, const Tolerance &);
template LawCheckResult check_algebra(const FrobeniusAlgebra<FinFunction> &, AlgebraLaw, const Tolerance &);

FrobeniusAlgebra<Morphism> scfa_from_dimension(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("spider algebra dimension must be >= 1");
    }
    TensorType p{d};
    Matrix copy = Matrix::Zero(d * d, d);
    for (std::size_t i = 0; i < d; i++) {
        copy(i * d + i, i) = 1;
    }
    Morphism comult(p, p * p, copy);
    Morphism counit(p, {}, Matrix::Ones(1, d));
    return {p, dagger(comult), dagger(counit), comult, counit};
}

FrobeniusAlgebra<Morphism> scfa_from_basis(const Morphism &u) {
    if (u.dom() != u.cod() || u.dom().rank() != 1) {
        throw TypeMismatch("basis change must be an endomorphism of a single wire");
    }
    auto c = approx_eq(compose(dagger(u), u), identity(u.dom()));
    if (!c.holds) {
        std::ostringstream ss;
        ss << "basis change is not unitary (residual " << c.residual << ")";
        throw std::invalid_argument(ss.str());
    }
    auto z = scfa_from_dimension(u.dom().dim());
    auto ud = dagger(u);
    auto comult = compose_chain({tensor(u, u), z.comult, ud});
    auto counit = compose(z.counit, ud);
    return {z.carrier, dagger(comult), dagger(counit), comult, counit};
}

Magma<FinFunction> left_delete(const SetType &v) {
    return {v, project_second(v, v), std::nullopt};
}

Comagma<FinFunction> set_diagonal(const SetType &v) {
    return {v, diagonal(v), discard(v)};
}

std::optional<std::size_t> find_unit(const Magma<FinFunction> &m) {
    for (std::size_t u = 0; u < m.carrier.size(); u++) {
        if (unit_comparison(m.mult, element(m.carrier, u), m.carrier, {}).holds) {
            return u;
        }
    }
    return std::nullopt;
}

FrobeniusAlgebra<Morphism> pair_of_pants(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("pair of pants dimension must be >= 1");
    }
    TensorType p{d, d};
    Matrix sigma = Matrix::Zero(d * d, d * d * d * d);
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t k = 0; k < d; k++) {
            for (std::size_t m = 0; m < d; m++) {
                // |j*,k> (x) |k*,m>  ->  |j*,m>
                std::size_t in = ((j * d + k) * d + k) * d + m;
                sigma(j * d + m, in) = 1;
            }
        }
    }
    Morphism mult(p * p, p, sigma);
    auto dd = static_cast<double>(d);
    return {p, mult, cup(d), dagger(mult) * (1.0 / dd), cap(d) * dd};
}

}  // namespace updstruct
