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

#ifndef UPDSTRUCT_REGISTRY_HPP
#define UPDSTRUCT_REGISTRY_HPP

#include <string>
#include <vector>

#include "updstruct/update.hpp"

namespace updstruct {

struct ExampleSpec {
    std::string name;
    std::string constructor;
    std::vector<std::size_t> parameters;
    std::string family;
    ClassKind expected_kind;
    /// Laws expected to fail; every other applicable law is expected to hold.
    std::vector<std::string> expected_failing;
    /// Split structures are judged on PutPut, GetGet, PutGet, GetPut, RepeatUpdate only.
    bool core_laws_only = false;
};

struct Caps {
    std::size_t max_wire = 6;
    std::size_t max_doubled = 1296;
    std::size_t max_set = 64;
};

struct NotFound : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct CapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<ExampleSpec> &registry();
/// Throws NotFound.
const ExampleSpec &find_example(const std::string &name);

/// An example-specific check with the value it should take.
struct Extra {
    LawCheckResult result;
    bool expected = true;
};

struct BuiltExample {
    AnyUpdate structure;
    std::vector<Extra> extras;
};

/// Constructs the structure and its extras. Throws CapExceeded or the
/// constructor's own error.
BuiltExample build_example(const ExampleSpec &spec, const Caps &caps = {}, const Tolerance &tol = {});

struct LawEntry {
    LawCheckResult result;
    bool expected_holds = true;
    bool matches() const { return result.holds == expected_holds; }
};

struct SuiteReport {
    std::string example;
    std::string backend;
    ClassKind classification = ClassKind::neither;
    ClassKind expected = ClassKind::neither;
    std::vector<LawEntry> laws;
    std::vector<DerivedResult> derived;
    std::vector<Extra> extras;
    /// Construction failure; empty when the example was built.
    std::string error;
    double wall_seconds = 0;

    /// Classification, every law and extra as expected, no derived failure, no error.
    bool ok() const;
};

SuiteReport run_example(const ExampleSpec &spec, const Tolerance &tol = {}, const Caps &caps = {});
/// Runs concurrently; results follow registry order.
std::vector<SuiteReport> run_all(const Tolerance &tol = {}, const Caps &caps = {});

/// Deterministic JSON; wall time is left out. A single report is emitted as
/// one object, several as {"ok": ..., "examples": [...]}.
std::string report_json(const std::vector<SuiteReport> &reports, bool single);
std::string report_text(const std::vector<SuiteReport> &reports);
std::string list_json();
std::string list_text();

}  // namespace updstruct

#endif
