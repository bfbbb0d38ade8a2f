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

#include <algorithm>

#include <gtest/gtest.h>

#include "updstruct/registry.hpp"

using namespace updstruct;

TEST(Registry, ContainsRequiredExamples) {
    const auto &r = registry();
    EXPECT_GE(r.size(), 12u);
    for (const char *name :
         {"qubit_z_pvs", "qutrit_pvs", "qubit_measurement", "qutrit_measurement", "pair_of_pants_2",
          "pair_of_pants_3", "security_db", "security_db_update_flag", "quantum_db_postselected",
          "quantum_db_causal", "lens_constant_complement", "decohered_pvs"}) {
        EXPECT_NO_THROW(find_example(name)) << name;
    }
    for (const auto &e : r) {
        EXPECT_FALSE(e.family.empty());
        if (e.expected_kind == ClassKind::weak_only) {
            EXPECT_NO_THROW(find_example("karoubi_split_" + e.name)) << e.name;
        }
    }
    EXPECT_THROW(find_example("nope"), NotFound);
}

TEST(Registry, EveryExampleMeetsItsExpectations) {
    for (const auto &rep : run_all()) {
        EXPECT_TRUE(rep.ok()) << report_text({rep});
    }
}

TEST(Registry, MeasurementReportPinsGetPutResidual) {
    auto rep = run_example(find_example("qubit_measurement"));
    EXPECT_EQ(rep.classification, ClassKind::weak_only);
    auto it = std::find_if(rep.laws.begin(), rep.laws.end(), [](auto &l) { return l.result.law == "GetPut"; });
    ASSERT_NE(it, rep.laws.end());
    EXPECT_FALSE(it->expected_holds);
    EXPECT_NEAR(it->result.residual, std::sqrt(2.0), 1e-6);
}

TEST(Registry, JsonIsDeterministicAndOrdered) {
    const auto &spec = find_example("security_db");
    auto a = report_json({run_example(spec)}, true);
    auto b = report_json({run_example(spec)}, true);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.back(), '\n');
    auto pos = [&](const char *key) { return a.find(std::string("\"") + key + "\""); };
    EXPECT_LT(pos("example"), pos("classification"));
    EXPECT_LT(pos("classification"), pos("laws"));
    EXPECT_LT(pos("laws"), pos("derived"));
    EXPECT_LT(pos("derived"), pos("extras"));
    EXPECT_EQ(a.find("wall"), std::string::npos);
}

TEST(Registry, CapsAreEnforced) {
    Caps tight;
    tight.max_wire = 2;
    auto rep = run_example(find_example("qutrit_pvs"), {}, tight);
    EXPECT_FALSE(rep.error.empty());
    EXPECT_FALSE(rep.ok());
    EXPECT_THROW(build_example(find_example("pair_of_pants_3"), tight), CapExceeded);
}

TEST(Registry, LooseToleranceFlipsExpectations) {
    // With tolerance 10 the measurement's GetPut residual sqrt(2) passes,
    // so the example no longer matches its expected profile.
    auto rep = run_example(find_example("qubit_measurement"), Tolerance::uniform(10));
    EXPECT_FALSE(rep.ok());
}
