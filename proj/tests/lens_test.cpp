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

#include <random>

#include <gtest/gtest.h>

#include "updstruct/lens.hpp"

using namespace updstruct;

TEST(Lens, ConstantComplementIsVwb) {
    auto lens = constant_complement_lens(FinSetObject::numbered(3, "v"), FinSetObject::numbered(2, "r"));
    auto r = check_vwb(lens);
    EXPECT_TRUE(r.vwb());
    // put((v, r), v') = (v', r), read off the table directly.
    for (std::size_t v = 0; v < 3; v++) {
        for (std::size_t c = 0; c < 2; c++) {
            for (std::size_t w = 0; w < 3; w++) {
                EXPECT_EQ(lens.put_fn((v * 2 + c) * 3 + w), w * 2 + c);
            }
        }
    }
}

TEST(Lens, RandomVwbLensesSatisfyAllThreeLaws) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; trial++) {
        auto lens = random_vwb_lens(rng, 1 + rng() % 4, 1 + rng() % 4);
        EXPECT_TRUE(check_vwb(lens).vwb());
    }
}

TEST(Lens, BridgeRoundTripsExactly) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; trial++) {
        auto lens = trial % 2 ? random_vwb_lens(rng, 3, 2) : random_lens(rng, 4, 3);
        auto u = lens_to_update(lens);
        auto back = update_to_lens(u);
        EXPECT_EQ(back.get_fn, lens.get_fn);
        EXPECT_EQ(back.put_fn, lens.put_fn);
        auto again = lens_to_update(back);
        EXPECT_EQ(again.get, u.get);
        EXPECT_EQ(again.put, u.put);
    }
}

TEST(Lens, LensLawsMatchUpdateLaws) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; trial++) {
        auto lens = random_lens(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto r = check_vwb(lens);
        auto u = lens_to_update(lens);
        EXPECT_EQ(r.put_put.holds, check_law(u, Law::PutPut).holds);
        EXPECT_EQ(r.put_get.holds, check_law(u, Law::PutGet).holds);
        EXPECT_EQ(r.get_put.holds, check_law(u, Law::GetPut).holds);
        // The bridged structure always has the lens shape.
        EXPECT_TRUE(check_law(u, Law::GetGet).holds);
        EXPECT_TRUE(check_law(u, Law::TrivialOutcome).holds);
    }
}

TEST(Lens, UpdateToLensPreconditions) {
    auto u = security_db(FinSetObject::numbered(2));
    EXPECT_THROW(update_to_lens(u), PreconditionError);
    auto lens = identity_lens(SetType{FinSetObject::numbered(2)});
    auto v = lens_to_update(lens);
    v.mult = project_first(v.property, v.property);
    EXPECT_THROW(update_to_lens(v), PreconditionError);
}

TEST(Lens, SingletonViewHasSeparableTrivialUpdate) {
    auto lens = constant_complement_lens(FinSetObject{"only"}, FinSetObject::numbered(3));
    auto s = trivial_update_separability(lens);
    EXPECT_TRUE(s.vwb);
    ASSERT_TRUE(s.trivial_update.has_value());
    EXPECT_TRUE(s.separable);
}

TEST(Lens, LargerViewsHaveNoTrivialUpdate) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 20; trial++) {
        auto lens = random_vwb_lens(rng, 2 + rng() % 3, 1 + rng() % 3);
        EXPECT_TRUE(trivial_updates(lens).empty());
    }
}

TEST(SecurityDb, GetPutFailsExactlyOnSafeEntries) {
    auto p = FinSetObject::numbered(3, "w");
    auto u = security_db(p);
    EXPECT_EQ(classify(u).kind, ClassKind::weak_only);
    auto r = check_law(u, Law::GetPut);
    EXPECT_EQ(r.residual, 3);
    EXPECT_EQ(r.witnesses, safe_stratum(p));
    EXPECT_EQ(safe_stratum(p), (std::vector<std::size_t>{0, 2, 4}));
}

TEST(SecurityDb, UpdateFlagIsLensWithoutGetPut) {
    auto lens = security_db_update_flag(FinSetObject::numbered(3));
    auto r = check_vwb(lens);
    EXPECT_TRUE(r.put_put.holds);
    EXPECT_TRUE(r.put_get.holds);
    EXPECT_FALSE(r.get_put.holds);
    EXPECT_EQ(classify(lens_to_update(lens)).kind, ClassKind::weak_only);
}
