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

#include <gtest/gtest.h>

#include "updstruct/karoubi.hpp"
#include "updstruct/lens.hpp"
#include "updstruct/quantum.hpp"

using namespace updstruct;

TEST(Split, IdempotentIsTheIdentity) {
    auto obj = classical_object(2);
    auto id = split_wrap(obj.idempotent, obj, obj);
    auto again = compose(id, id);
    EXPECT_TRUE(approx_eq(again.map, obj.idempotent).holds);
}

TEST(Split, IdentityIsNotAbsorbedByProperIdempotent) {
    auto obj = classical_object(2);
    EXPECT_THROW(split_wrap(identity({2, 2}), obj, obj), AbsorptionError);
}

TEST(Split, NonIdempotentRejected) {
    SplitObject<Morphism> bad{TensorType{2}, identity({2}) * 2.0};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Split, ClassicalObjects) {
    EXPECT_EQ(fixed_point_rank(classical_object(2).idempotent), 2u);
    EXPECT_EQ(fixed_point_rank(classical_object(3).idempotent), 3u);
    EXPECT_TRUE(approx_eq(classical_object(1).idempotent, identity({1, 1})).holds);
    // A diagonal state is fixed, a coherence is killed.
    auto obj = classical_object(2);
    Matrix diag = Matrix::Zero(4, 1);
    diag(0, 0) = 0.25;
    diag(3, 0) = 0.75;
    Morphism rho({}, {2, 2}, diag);
    EXPECT_TRUE(approx_eq(compose(obj.idempotent, rho), rho).holds);
    Matrix coh = Matrix::Zero(4, 1);
    coh(1, 0) = 1;
    EXPECT_TRUE(approx_eq(compose(obj.idempotent, Morphism({}, {2, 2}, coh)), zero({}, {2, 2})).holds);
    EXPECT_THROW(classical_object(0), std::invalid_argument);
}

TEST(Restriction, StrongStructureUnchanged) {
    auto u = pvs_to_update(pvs_from_projectors(computational_projectors(2)));
    auto r = getput_restriction(u);
    EXPECT_TRUE(r.unchanged);
    EXPECT_EQ(r.structure.backend, Backend::linear);
}

TEST(Restriction, MeasurementIdempotentIsDiagonalPinching) {
    auto ps = computational_projectors(2);
    auto q = quantum_measurement(pvs_from_projectors(ps));
    auto r = getput_restriction(q.structure);
    EXPECT_FALSE(r.unchanged);
    EXPECT_EQ(r.structure.backend, Backend::split);
    EXPECT_EQ(r.classification.kind, ClassKind::strong);
    // e = sum_i P_i (x) conj(P_i) on interleaved wires.
    Matrix want = Matrix::Zero(4, 4);
    for (const auto &p : ps) {
        for (Eigen::Index a = 0; a < 2; a++) {
            for (Eigen::Index b = 0; b < 2; b++) {
                for (Eigen::Index c = 0; c < 2; c++) {
                    for (Eigen::Index e = 0; e < 2; e++) {
                        want(a * 2 + b, c * 2 + e) += p.matrix()(a, c) * std::conj(p.matrix()(b, e));
                    }
                }
            }
        }
    }
    EXPECT_TRUE(approx_eq(r.idempotent, Morphism({2, 2}, {2, 2}, want)).holds);
    EXPECT_FALSE(r.one_sided_get);
}

TEST(Restriction, SecurityDatabaseOnBreachedStratum) {
    auto u = security_db(FinSetObject::numbered(3));
    auto r = getput_restriction(u);
    EXPECT_EQ(r.classification.kind, ClassKind::strong);
    EXPECT_EQ(fixed_point_rank(r.idempotent), 3u);
    for (const auto &c : r.classification.checked) {
        EXPECT_EQ(c.residual, 0) << c.law;
    }
    EXPECT_THROW(getput_restriction(r.structure), std::invalid_argument);
}

TEST(Restriction, RequiresRepeatUpdate) {
    auto u = pvs_to_update(pvs_from_projectors(computational_projectors(2)));
    u.put = u.put * 0.5;
    EXPECT_THROW(getput_restriction(u), PremiseError);
}
