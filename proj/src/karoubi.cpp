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

#include "updstruct/karoubi.hpp"

#include <sstream>

#include "updstruct/quantum.hpp"

namespace updstruct {

namespace {

void require_endo(const auto &f, const auto &obj, const char *what) {
    if (f.dom() != obj || f.cod() != obj) {
        throw TypeMismatch(std::string(what) + " must be an endomorphism of its base object");
    }
}

}  // namespace

template <class M>
void SplitObject<M>::validate(const Tolerance &tol) const {
    require_endo(idempotent, base, "split idempotent");
    auto c = compare(compose(idempotent, idempotent), idempotent, tol);
    if (!c.holds) {
        std::ostringstream msg;
        msg << "split idempotent is not idempotent: residual " << c.residual;
        throw std::invalid_argument(msg.str());
    }
}

template <class M>
SplitMorphism<M> split_wrap(const M &f, const SplitObject<M> &dom, const SplitObject<M> &cod,
                            const Tolerance &tol) {
    dom.validate(tol);
    cod.validate(tol);
    if (f.dom() != dom.base || f.cod() != cod.base) {
        throw TypeMismatch("underlying morphism does not connect the split objects' bases");
    }
    auto left = compare(compose(cod.idempotent, f), f, tol);
    auto right = compare(compose(f, dom.idempotent), f, tol);
    if (!left.holds || !right.holds) {
        std::ostringstream msg;
        msg << "morphism is not absorbed by the split idempotents: codomain residual " << left.residual
            << ", domain residual " << right.residual;
        throw AbsorptionError(msg.str());
    }
    return SplitMorphism<M>{dom, cod, f};
}

template <class M>
SplitMorphism<M> compose(const SplitMorphism<M> &g, const SplitMorphism<M> &f) {
    if (!(g.dom.base == f.cod.base) || !compare(g.dom.idempotent, f.cod.idempotent, Tolerance{}).holds) {
        throw TypeMismatch("split morphisms do not compose");
    }
    return SplitMorphism<M>{f.dom, g.cod, compose(g.map, f.map)};
}

SplitObject<Morphism> classical_object(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("classical object needs d >= 1");
    }
    return SplitObject<Morphism>{TensorType{d, d}, decoherence(d).morphism()};
}

std::size_t fixed_point_rank(const Morphism &e, const Tolerance &tol) {
    const Matrix &m = e.matrix();
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto &sv = svd.singularValues();
    double cutoff = tol.absolute + tol.relative * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); k++) {
        rank += sv(k) > cutoff;
    }
    return rank;
}

std::size_t fixed_point_rank(const FinFunction &e, const Tolerance &) {
    std::size_t n = 0;
    for (std::size_t x = 0; x < e.table().size(); x++) {
        n += e(x) == x;
    }
    return n;
}

template <class M>
Restriction<M> getput_restriction(const UpdateStructure<M> &u, const Tolerance &tol) {
    u.validate();
    if (u.backend == Backend::split) {
        throw std::invalid_argument("structure is already on a split object");
    }
    auto repeat = check_law(u, Law::RepeatUpdate, tol);
    if (!repeat.holds) {
        std::ostringstream msg;
        msg << "RepeatUpdate fails: residual " << repeat.residual;
        throw PremiseError(msg.str());
    }
    M e = compose(u.put, u.get);
    auto idem = LawCheckResult::from("Idempotent", compare(compose(e, e), e, tol));
    if (!idem.holds) {
        std::ostringstream msg;
        msg << "put . get is not idempotent: residual " << idem.residual;
        throw PremiseError(msg.str());
    }
    M id_s = identity(u.system);
    if (compare(e, id_s, tol).holds) {
        return Restriction<M>{u, e, idem, true, false, classify(u, tol)};
    }
    M id_p = identity(u.property);
    M ep = tensor(e, id_p);
    UpdateStructure<M> r = u;
    r.backend = Backend::split;
    r.system_idempotent = e;
    r.put = compose(e, compose(u.put, ep));
    r.get = compose(ep, compose(u.get, e));
    r.trivial_update.reset();
    r.trivial_outcome.reset();
    r.validate();
    Classification c = classify(r, tol);
    bool one_sided = false;
    if (c.kind != ClassKind::strong) {
        UpdateStructure<M> alt = r;
        alt.get = compose(ep, u.get);
        Classification ca = classify(alt, tol);
        if (ca.kind == ClassKind::strong) {
            r = std::move(alt);
            c = std::move(ca);
            one_sided = true;
        }
    }
    if (c.kind != ClassKind::strong) {
        std::ostringstream msg;
        msg << "restricted structure is not strong:";
        for (const auto &f : c.failing) {
            msg << " " << f.law << " residual " << f.residual;
        }
        throw PremiseError(msg.str());
    }
    return Restriction<M>{std::move(r), std::move(e), std::move(idem), false, one_sided, std::move(c)};
}

template struct SplitObject<Morphism>;
template struct SplitObject<FinFunction>;
template SplitMorphism<Morphism> split_wrap(const Morphism &, const SplitObject<Morphism> &,
                                            const SplitObject<Morphism> &, const Tolerance &);
template SplitMorphism<FinFunction> split_wrap(const FinFunction &, const SplitObject<FinFunction> &,
                                               const SplitObject<FinFunction> &, const Tolerance &);
template SplitMorphism<Morphism> compose(const SplitMorphism<Morphism> &, const SplitMorphism<Morphism> &);
template SplitMorphism<FinFunction> compose(const SplitMorphism<FinFunction> &,
                                            const SplitMorphism<FinFunction> &);
template Restriction<Morphism> getput_restriction(const UpdateStructure<Morphism> &, const Tolerance &);
template Restriction<FinFunction> getput_restriction(const UpdateStructure<FinFunction> &, const Tolerance &);

}  // namespace updstruct
