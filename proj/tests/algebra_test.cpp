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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "updstruct/algebra.hpp"

using namespace updstruct;

namespace {

Morphism fourier(std::size_t d) {
    Matrix u(d, d);
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t k = 0; k < d; k++) {
            u(j, k) = std::polar(1 / std::sqrt(double(d)), 2 * std::numbers::pi * double(j * k) / double(d));
        }
    }
    return Morphism({d}, {d}, u);
}

}  // namespace

class SpiderAlgebra : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SpiderAlgebra, ComputationalBasisSatisfiesEveryLaw) {
    auto a = scfa_from_dimension(GetParam());
    for (auto law : {AlgebraLaw::assoc, AlgebraLaw::coassoc, AlgebraLaw::unit, AlgebraLaw::counit, AlgebraLaw::comm,
                     AlgebraLaw::cocomm, AlgebraLaw::special, AlgebraLaw::frobenius, AlgebraLaw::dagger_frobenius}) {
        auto r = check_algebra(a, law);
        EXPECT_TRUE(r.holds) << algebra_law_name(law) << " residual " << r.residual;
    }
}

TEST_P(SpiderAlgebra, RotatedBasisSatisfiesEveryLaw) {
    std::size_t d = GetParam();
    auto a = scfa_from_basis(fourier(d));
    for (auto law : {AlgebraLaw::assoc, AlgebraLaw::unit, AlgebraLaw::comm, AlgebraLaw::special,
                     AlgebraLaw::frobenius, AlgebraLaw::dagger_frobenius}) {
        EXPECT_TRUE(check_algebra(a, law).holds) << algebra_law_name(law);
    }
    // Copying a basis vector gives two copies of it.
    for (std::size_t i = 0; i < d; i++) {
        Morphism v({}, {d}, fourier(d).matrix().col(static_cast<Eigen::Index>(i)));
        EXPECT_TRUE(approx_eq(compose(a.comult, v), tensor(v, v)).holds);
    }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, SpiderAlgebra, ::testing::Values(1, 2, 3, 4));

TEST(SpiderAlgebra, CopyMatrixOracle) {
    auto a = scfa_from_dimension(3);
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t r = 0; r < 9; r++) {
            EXPECT_EQ(a.comult.matrix()(r, i), Complex(r == i * 3 + i ? 1 : 0));
        }
    }
    EXPECT_EQ(a.counit.matrix(), Matrix::Ones(1, 3));
}

TEST(SpiderAlgebra, RejectsNonUnitaryBasis) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(scfa_from_basis(Morphism({2}, {2}, m)), std::invalid_argument);
}

TEST(LeftDelete, AssociativeWithoutUnit) {
    SetType v{FinSetObject::numbered(3)};
    auto m = left_delete(v);
    EXPECT_TRUE(check_algebra(m, AlgebraLaw::assoc).holds);
    EXPECT_FALSE(check_algebra(m, AlgebraLaw::comm).holds);
    EXPECT_FALSE(find_unit(m).has_value());
    auto unit = check_algebra(m, AlgebraLaw::unit);
    EXPECT_FALSE(unit.holds);
    EXPECT_GT(unit.residual, 0);
}

TEST(LeftDelete, SingletonHasUnit) {
    SetType v{FinSetObject{"only"}};
    auto m = left_delete(v);
    EXPECT_EQ(find_unit(m), std::optional<std::size_t>(0));
    EXPECT_TRUE(check_algebra(m, AlgebraLaw::unit).holds);
}

TEST(SetDiagonal, CocommutativeCoassociativeCounital) {
    SetType v{FinSetObject::numbered(4)};
    auto c = set_diagonal(v);
    EXPECT_TRUE(check_algebra(c, AlgebraLaw::coassoc).holds);
    EXPECT_TRUE(check_algebra(c, AlgebraLaw::cocomm).holds);
    EXPECT_TRUE(check_algebra(c, AlgebraLaw::counit).holds);
}

TEST(AlgebraChecks, WrongKindAndMissingComponentThrow) {
    SetType v{FinSetObject::numbered(2)};
    EXPECT_THROW(check_algebra(left_delete(v), AlgebraLaw::coassoc), std::invalid_argument);
    Comagma<FinFunction> no_counit{v, diagonal(v), std::nullopt};
    EXPECT_THROW(check_algebra(no_counit, AlgebraLaw::counit), MissingComponent);
}

class PairOfPants : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PairOfPants, OperatorCompositionMonoid) {
    std::size_t d = GetParam();
    auto a = pair_of_pants(d);
    EXPECT_TRUE(check_algebra(a, AlgebraLaw::assoc).holds);
    EXPECT_TRUE(check_algebra(a, AlgebraLaw::unit).holds);
    EXPECT_TRUE(check_algebra(a, AlgebraLaw::counit).holds);
    EXPECT_EQ(check_algebra(a, AlgebraLaw::comm).holds, d == 1);
    EXPECT_TRUE(approx_eq(compose(a.mult, a.comult), identity(a.carrier)).holds);
}

TEST_P(PairOfPants, MultiplicationIsMatrixProduct) {
    // |j*,k> is |k><j|, so A (x) B maps to the vectorisation of B A.
    std::size_t d = GetParam();
    auto a = pair_of_pants(d);
    Matrix x = Matrix::Random(d, d);
    Matrix y = Matrix::Random(d, d);
    auto vec = [d](const Matrix &op) {
        Matrix v(d * d, 1);
        for (std::size_t j = 0; j < d; j++) {
            for (std::size_t k = 0; k < d; k++) {
                v(j * d + k, 0) = op(k, j);
            }
        }
        return Morphism({}, {d, d}, v);
    };
    auto got = compose(a.mult, tensor(vec(x), vec(y)));
    EXPECT_TRUE(approx_eq(got, vec(y * x)).holds);
}

INSTANTIATE_TEST_SUITE_P(Dimensions, PairOfPants, ::testing::Values(1, 2, 3));
