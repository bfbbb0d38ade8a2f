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

#ifndef UPDSTRUCT_QUANTUM_HPP
#define UPDSTRUCT_QUANTUM_HPP

#include <vector>

#include "updstruct/algebra.hpp"
#include "updstruct/category.hpp"
#include "updstruct/update.hpp"

namespace updstruct {

/// Each factor d becomes the adjacent pair (d, d*).
TensorType doubled(const TensorType &t);

/// A morphism between doubled types, i.e. a superoperator on vectorised
/// operators. Conjugate factors are tracked positionally.
class DoubledMorphism {
   public:
    explicit DoubledMorphism(Morphism m);

    const Morphism &morphism() const { return m_; }
    operator const Morphism &() const { return m_; }

   private:
    Morphism m_;
};

/// f (x) conj(f), interleaved so each wire's d and d* sit next to each other.
DoubledMorphism cpm_double(const Morphism &f);
/// sum_i |i i*><i i*| on the doubled wire of dimension d.
DoubledMorphism decoherence(std::size_t d);
/// Decoherence on every wire of the doubled image of `t`.
DoubledMorphism decoherence(const TensorType &t);
/// The vectorised trace on the doubled image of `t` (a cap per wire).
Morphism discard_doubled(const TensorType &t);

/// The CPM image of a linear structure, tagged `doubled`.
LinearUpdate cpm_double_update(const LinearUpdate &u);

/// Raised when a construction's precondition fails; carries residuals in the message.
struct PremiseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TransformResult {
    LinearUpdate structure;
    /// idempotent, mult homomorphism, comult homomorphism.
    std::vector<LawCheckResult> premises;
    Classification classification;
};

/// Transports a structure along an idempotent magma-comagma endomorphism m
/// of p: put.(id(x)m), (id(x)m).get, m.mult.(m(x)m), (m(x)m).comult.m.
/// Trivial update/outcome are not carried over. Throws PremiseError if the
/// premise fails or the result is not at least weak.
TransformResult transform_update(const LinearUpdate &u, const Morphism &m, const Tolerance &tol = {});

struct ProjectorValuedSpectrum {
    TensorType system;
    /// Pi = sum_i P_i (x) |i> : S -> S (x) p.
    Morphism spectrum;
    FrobeniusAlgebra<Morphism> algebra;
    std::vector<Morphism> projectors;
};

/// Validates the projectors (idempotent, self-adjoint, orthogonal, complete)
/// and the three spectrum equations; throws PremiseError with residuals.
ProjectorValuedSpectrum pvs_from_projectors(const std::vector<Morphism> &projectors, const Tolerance &tol = {});

/// p-idempotent, p-self-adjoint and p-complete for `spectrum` over `algebra`.
std::vector<LawCheckResult> pvs_equations(const Morphism &spectrum, const FrobeniusAlgebra<Morphism> &algebra,
                                          const Tolerance &tol = {});
/// P_i = (id (x) <i|) . Pi for the computational basis of the property wire.
std::vector<Morphism> recover_projectors(const Morphism &spectrum);

/// Rank-one projectors onto the computational basis of [d].
std::vector<Morphism> computational_projectors(std::size_t d);

/// (Pi-dagger, Pi, mult, comult) with the spider unit and counit as trivial
/// update and outcome.
LinearUpdate pvs_to_update(const ProjectorValuedSpectrum &v);

/// Q(Pi) = (id (x) deco) . F(Pi) with the decohered doubled spider algebra.
struct QuantumMeasurement {
    Morphism get;
    Morphism put;
    Morphism mult;
    Morphism comult;
    LinearUpdate structure;
};

QuantumMeasurement quantum_measurement(const ProjectorValuedSpectrum &v);

struct PvsCharacterization {
    bool is_pvs = false;
    /// DaggerGet, PutPut, GetGet, PutGet, GetPut, Faithful, CommutativePut,
    /// TrivialUpdate, TrivialOutcome.
    std::vector<LawCheckResult> conditions;
    std::vector<LawCheckResult> failing;
    /// Spider-algebra laws of (mult, comult, units), the spectrum equations
    /// of get and put = get-dagger; empty when a unit is missing.
    std::vector<LawCheckResult> conclusions;
    /// is_pvs agrees with the conclusions all holding.
    bool consistent = false;
};

/// Decides whether a linear structure of the form (put, put-dagger, ...)
/// is a projector-valued spectrum. Throws for non-linear backends.
PvsCharacterization characterize_pvs(const LinearUpdate &u, const Tolerance &tol = {});

/// Systems are states on [d], properties are operators on [d, d]: put is
/// evaluation, mult composition, get = put-dagger / d, comult = sigma-dagger / d,
/// trivial update cup(d), trivial outcome d cap(d).
LinearUpdate pair_of_pants_update(std::size_t d);
/// The same structure rescaled so that get is exactly put-dagger.
LinearUpdate pair_of_pants_dagger_update(std::size_t d);

/// S = [d1, d2], p = [d2]: get copies S2 in the computational basis, put
/// post-selects S2 on the spider counit and installs the new value.
LinearUpdate quantum_db_postselected(std::size_t d1, std::size_t d2);

/// Distance of the CPM image of a pure map from trace preservation.
double trace_preservation_residual(const Morphism &f);

/// (id_S (x) discard_p) . get for a get on doubled wires.
Morphism reduced_process(const Morphism &get, const TensorType &system, const TensorType &property);

struct CausalDatabase {
    LinearUpdate structure;
    /// Reduced process of the measurement-style get.
    Morphism reduced_get;
    /// Get built from the decohered copy of all of S followed by doubled pi_2.
    Morphism lens_like_get;
    Morphism lens_like_reduced;
};

/// On doubled wires: put = id (x) discard_{F(S2)} (x) deco, get = id (x)
/// decohered copy of F(S2), mult = discard (x) deco, comult = decohered copy.
CausalDatabase quantum_db_causal(std::size_t d1, std::size_t d2);

}  // namespace updstruct

#endif
