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

#include "updstruct/quantum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace updstruct {

namespace {

// Concatenated-to-interleaved reordering for t (x) t.
Morphism interleave(const TensorType &t) {
    std::size_t n = t.rank();
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n; k++) {
        order.push_back(k);
        order.push_back(n + k);
    }
    return permute(t * t, order);
}

Morphism tensor_all(const std::vector<Morphism> &parts) {
    Morphism out = scalar(1);
    for (const auto &p : parts) {
        out = tensor(out, p);
    }
    return out;
}

// Inverse of doubled(): [d, d, e, e] -> [d, e].
TensorType undouble(const TensorType &t) {
    const auto &f = t.factors();
    if (f.size() % 2 != 0) {
        throw TypeMismatch("type " + t.str() + " is not a doubled type");
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < f.size(); k += 2) {
        if (f[k] != f[k + 1]) {
            throw TypeMismatch("type " + t.str() + " is not a doubled type");
        }
        out.push_back(f[k]);
    }
    return TensorType(out);
}

std::string residual_message(const std::string &what, const Comparison &c) {
    std::ostringstream out;
    out << what << " fails: residual " << c.residual << " > threshold " << c.threshold;
    return out.str();
}

LawCheckResult missing(const std::string &name) {
    LawCheckResult r;
    r.law = name;
    r.holds = false;
    r.residual = std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace

TensorType doubled(const TensorType &t) {
    std::vector<std::size_t> out;
    for (std::size_t d : t.factors()) {
        out.push_back(d);
        out.push_back(d);
    }
    return TensorType(out);
}

DoubledMorphism::DoubledMorphism(Morphism m) : m_(std::move(m)) {
    undouble(m_.dom());
    undouble(m_.cod());
}

DoubledMorphism cpm_double(const Morphism &f) {
    Morphism pair = tensor(f, conjugate(f));
    return DoubledMorphism(compose_chain({interleave(f.cod()), pair, dagger(interleave(f.dom()))}));
}

DoubledMorphism decoherence(std::size_t d) {
    Matrix m = Matrix::Zero(d * d, d * d);
    for (std::size_t i = 0; i < d; i++) {
        m(i * d + i, i * d + i) = 1;
    }
    return DoubledMorphism(Morphism({d, d}, {d, d}, m));
}

DoubledMorphism decoherence(const TensorType &t) {
    std::vector<Morphism> parts;
    for (std::size_t d : t.factors()) {
        parts.push_back(decoherence(d));
    }
    return DoubledMorphism(tensor_all(parts));
}

Morphism discard_doubled(const TensorType &t) {
    std::vector<Morphism> parts;
    for (std::size_t d : t.factors()) {
        parts.push_back(cap(d));
    }
    return tensor_all(parts);
}

LinearUpdate cpm_double_update(const LinearUpdate &u) {
    if (u.backend != Backend::linear) {
        throw std::invalid_argument("cpm doubling needs a structure on the linear backend");
    }
    u.validate();
    auto lift = [](const std::optional<Morphism> &m) -> std::optional<Morphism> {
        if (!m) {
            return std::nullopt;
        }
        return cpm_double(*m).morphism();
    };
    LinearUpdate out{Backend::doubled,
                     doubled(u.system),
                     doubled(u.property),
                     cpm_double(u.put),
                     cpm_double(u.get),
                     cpm_double(u.mult),
                     cpm_double(u.comult),
                     lift(u.trivial_update),
                     lift(u.trivial_outcome),
                     std::nullopt};
    out.validate();
    return out;
}

TransformResult transform_update(const LinearUpdate &u, const Morphism &m, const Tolerance &tol) {
    u.validate();
    if (m.dom() != u.property || m.cod() != u.property) {
        throw TypeMismatch("transform endomorphism must act on the property wire " + u.property.str());
    }
    Morphism mm = tensor(m, m);
    std::vector<LawCheckResult> premises{
        LawCheckResult::from("Idempotent", approx_eq(compose(m, m), m, tol)),
        LawCheckResult::from("MultHomomorphism", approx_eq(compose(m, u.mult), compose(u.mult, mm), tol)),
        LawCheckResult::from("ComultHomomorphism", approx_eq(compose(mm, u.comult), compose(u.comult, m), tol)),
    };
    for (const auto &p : premises) {
        if (!p.holds) {
            throw PremiseError(residual_message(p.law, Comparison{false, p.residual, p.threshold, {}}));
        }
    }
    Morphism id_s = u.system_identity();
    LinearUpdate out{u.backend,
                     u.system,
                     u.property,
                     compose(u.put, tensor(id_s, m)),
                     compose(tensor(id_s, m), u.get),
                     compose_chain({m, u.mult, mm}),
                     compose_chain({mm, u.comult, m}),
                     std::nullopt,
                     std::nullopt,
                     u.system_idempotent};
    out.validate();
    Classification c = classify(out, tol);
    if (c.kind == ClassKind::neither) {
        std::ostringstream msg;
        msg << "transformed structure is not a weak update structure:";
        for (const auto &f : c.failing) {
            msg << " " << f.law << " residual " << f.residual;
        }
        throw PremiseError(msg.str());
    }
    return TransformResult{std::move(out), std::move(premises), std::move(c)};
}

std::vector<Morphism> computational_projectors(std::size_t d) {
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < d; i++) {
        out.push_back(compose(ket(d, i), bra(d, i)));
    }
    return out;
}

std::vector<LawCheckResult> pvs_equations(const Morphism &spectrum, const FrobeniusAlgebra<Morphism> &a,
                                          const Tolerance &tol) {
    a.validate();
    TensorType s = spectrum.dom();
    if (spectrum.cod() != s * a.carrier) {
        throw TypeMismatch("spectrum must have type S -> S (x) " + a.carrier.str());
    }
    Morphism id_s = identity(s);
    Morphism id_p = identity(a.carrier);
    return {
        LawCheckResult::from("PIdempotent", approx_eq(compose(tensor(spectrum, id_p), spectrum),
                                                      compose(tensor(id_s, a.comult), spectrum), tol)),
        LawCheckResult::from("PSelfAdjoint",
                             approx_eq(dagger(spectrum),
                                       compose(tensor(id_s, compose(a.counit, a.mult)), tensor(spectrum, id_p)),
                                       tol)),
        LawCheckResult::from("PComplete", approx_eq(compose(tensor(id_s, a.counit), spectrum), id_s, tol)),
    };
}

std::vector<Morphism> recover_projectors(const Morphism &spectrum) {
    const auto &cf = spectrum.cod().factors();
    if (cf.empty()) {
        throw TypeMismatch("spectrum codomain has no property wire");
    }
    std::size_t n = cf.back();
    TensorType s = spectrum.dom();
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < n; i++) {
        out.push_back(compose(tensor(identity(s), bra(n, i)), spectrum));
    }
    return out;
}

ProjectorValuedSpectrum pvs_from_projectors(const std::vector<Morphism> &projectors, const Tolerance &tol) {
    if (projectors.empty()) {
        throw std::invalid_argument("a spectrum needs at least one projector");
    }
    TensorType s = projectors.front().dom();
    std::size_t n = projectors.size();
    Morphism total = zero(s, s);
    for (std::size_t i = 0; i < n; i++) {
        const Morphism &p = projectors[i];
        if (p.dom() != s || p.cod() != s) {
            throw TypeMismatch("projector " + std::to_string(i) + " is not an endomorphism of " + s.str());
        }
        auto idem = approx_eq(compose(p, p), p, tol);
        if (!idem.holds) {
            throw PremiseError(residual_message("idempotence of projector " + std::to_string(i), idem));
        }
        auto sa = approx_eq(dagger(p), p, tol);
        if (!sa.holds) {
            throw PremiseError(residual_message("self-adjointness of projector " + std::to_string(i), sa));
        }
        for (std::size_t j = 0; j < i; j++) {
            auto orth = approx_eq(compose(p, projectors[j]), zero(s, s), tol);
            if (!orth.holds) {
                throw PremiseError(residual_message(
                    "orthogonality of projectors " + std::to_string(j) + " and " + std::to_string(i), orth));
            }
        }
        total = total + p;
    }
    auto complete = approx_eq(total, identity(s), tol);
    if (!complete.holds) {
        throw PremiseError(residual_message("completeness", complete));
    }
    Morphism spectrum = zero(s, s * TensorType{n});
    for (std::size_t i = 0; i < n; i++) {
        spectrum = spectrum + tensor(projectors[i], ket(n, i));
    }
    ProjectorValuedSpectrum v{s, spectrum, scfa_from_dimension(n), projectors};
    for (const auto &eq : pvs_equations(v.spectrum, v.algebra, tol)) {
        if (!eq.holds) {
            throw PremiseError(residual_message(eq.law, Comparison{false, eq.residual, eq.threshold, {}}));
        }
    }
    return v;
}

LinearUpdate pvs_to_update(const ProjectorValuedSpectrum &v) {
    LinearUpdate out{Backend::linear,   v.system,           v.algebra.carrier,
                     dagger(v.spectrum), v.spectrum,         v.algebra.mult,
                     v.algebra.comult,  v.algebra.unit,     v.algebra.counit,
                     std::nullopt};
    out.validate();
    return out;
}

QuantumMeasurement quantum_measurement(const ProjectorValuedSpectrum &v) {
    std::size_t n = v.algebra.carrier.factors().back();
    Morphism deco = decoherence(n);
    Morphism get = compose(tensor(identity(doubled(v.system)), deco), cpm_double(v.spectrum));
    Morphism comult = compose(tensor(deco, deco), cpm_double(v.algebra.comult));
    Morphism put = dagger(get);
    Morphism mult = dagger(comult);
    LinearUpdate s{Backend::doubled, doubled(v.system), doubled(v.algebra.carrier), put, get, mult, comult,
                   std::nullopt,     std::nullopt,      std::nullopt};
    s.validate();
    return QuantumMeasurement{get, put, mult, comult, std::move(s)};
}

PvsCharacterization characterize_pvs(const LinearUpdate &u, const Tolerance &tol) {
    if (u.backend != Backend::linear) {
        throw std::invalid_argument("projector-valued spectra live on the linear backend");
    }
    u.validate();
    PvsCharacterization out;
    out.conditions.push_back(LawCheckResult::from("DaggerGet", approx_eq(u.get, dagger(u.put), tol)));
    for (Law law : {Law::PutPut, Law::GetGet, Law::PutGet, Law::GetPut, Law::Faithful, Law::CommutativePut,
                    Law::TrivialUpdate, Law::TrivialOutcome}) {
        if (law_applicable(u, law)) {
            out.conditions.push_back(check_law(u, law, tol));
        } else {
            out.conditions.push_back(missing(std::string(law_name(law))));
        }
    }
    out.is_pvs = true;
    for (const auto &c : out.conditions) {
        if (!c.holds) {
            out.is_pvs = false;
            out.failing.push_back(c);
        }
    }
    if (!u.trivial_update || !u.trivial_outcome) {
        out.consistent = !out.is_pvs;
        return out;
    }
    FrobeniusAlgebra<Morphism> a{u.property, u.mult, *u.trivial_update, u.comult, *u.trivial_outcome};
    for (AlgebraLaw law : {AlgebraLaw::assoc, AlgebraLaw::unit, AlgebraLaw::counit, AlgebraLaw::comm,
                           AlgebraLaw::special, AlgebraLaw::frobenius, AlgebraLaw::dagger_frobenius}) {
        out.conclusions.push_back(check_algebra(a, law, tol));
    }
    for (auto &eq : pvs_equations(u.get, a, tol)) {
        out.conclusions.push_back(std::move(eq));
    }
    out.conclusions.push_back(LawCheckResult::from("PutFromSpectrum", approx_eq(u.put, dagger(u.get), tol)));
    bool all = true;
    for (const auto &c : out.conclusions) {
        all = all && c.holds;
    }
    out.consistent = out.is_pvs == all;
    return out;
}

LinearUpdate pair_of_pants_update(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("pair of pants needs d >= 1");
    }
    Matrix put = Matrix::Zero(d, d * d * d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t k = 0; k < d; k++) {
            put(k, (i * d + i) * d + k) = 1;
        }
    }
    Morphism p({d, d, d}, {d}, put);
    auto a = pair_of_pants(d);
    LinearUpdate out{Backend::linear, TensorType{d}, a.carrier, p, dagger(p) * (1.0 / d), a.mult, a.comult,
                     a.unit,          a.counit,      std::nullopt};
    out.validate();
    return out;
}

LinearUpdate pair_of_pants_dagger_update(std::size_t d) {
    LinearUpdate u = pair_of_pants_update(d);
    double r = std::sqrt(static_cast<double>(d));
    Morphism put = u.put * (1.0 / r);
    Morphism mult = u.mult * (1.0 / r);
    LinearUpdate out{Backend::linear, u.system,   u.property, put, dagger(put), mult, dagger(mult),
                     cup(d) * r,      cap(d) * r, std::nullopt};
    out.validate();
    return out;
}

LinearUpdate quantum_db_postselected(std::size_t d1, std::size_t d2) {
    if (d1 == 0 || d2 == 0) {
        throw std::invalid_argument("database wires need positive dimension");
    }
    auto z = scfa_from_dimension(d2);
    Morphism id1 = identity({d1});
    Morphism id2 = identity({d2});
    LinearUpdate out{Backend::linear,
                     TensorType{d1, d2},
                     TensorType{d2},
                     tensor(tensor(id1, z.counit), id2),
                     tensor(id1, z.comult),
                     tensor(z.counit, id2),
                     z.comult,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt};
    out.validate();
    return out;
}

double trace_preservation_residual(const Morphism &f) {
    Morphism lhs = compose(discard_doubled(f.cod()), cpm_double(f));
    return (lhs - discard_doubled(f.dom())).norm();
}

Morphism reduced_process(const Morphism &get, const TensorType &system, const TensorType &property) {
    if (get.dom() != system || get.cod() != system * property) {
        throw TypeMismatch("get must have type " + system.str() + " -> " + (system * property).str());
    }
    return compose(tensor(identity(system), discard_doubled(undouble(property))), get);
}

CausalDatabase quantum_db_causal(std::size_t d1, std::size_t d2) {
    if (d1 == 0 || d2 == 0) {
        throw std::invalid_argument("database wires need positive dimension");
    }
    auto z2 = scfa_from_dimension(d2);
    Morphism deco2 = decoherence(d2);
    Morphism id_fs1 = identity({d1, d1});
    Morphism copy2 = compose(tensor(deco2, deco2), cpm_double(z2.comult));

    TensorType fs{d1, d1, d2, d2};
    TensorType fp{d2, d2};
    LinearUpdate s{Backend::doubled,
                   fs,
                   fp,
                   tensor(tensor(id_fs1, cap(d2)), deco2),
                   tensor(id_fs1, copy2),
                   tensor(cap(d2), deco2),
                   copy2,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt};
    s.validate();

    // Decohered copy of all of S = [d1, d2], then keep only the S2 half.
    auto z1 = scfa_from_dimension(d1);
    std::vector<std::size_t> order{0, 2, 1, 3};
    Morphism copy_s = compose(permute(TensorType{d1, d1, d2, d2}, order), tensor(z1.comult, z2.comult));
    Morphism deco_s = decoherence(TensorType{d1, d2});
    Morphism fcopy = compose(tensor(deco_s, deco_s), cpm_double(copy_s));
    Morphism g = tensor(cap(d1), identity(fp));
    Morphism lens_get = compose(tensor(identity(fs), g), fcopy);

    Morphism reduced = reduced_process(s.get, fs, fp);
    Morphism lens_reduced = reduced_process(lens_get, fs, fp);
    return CausalDatabase{std::move(s), reduced, lens_get, lens_reduced};
}

}  // namespace updstruct
