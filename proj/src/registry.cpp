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

#include "updstruct/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "updstruct/karoubi.hpp"
#include "updstruct/lens.hpp"
#include "updstruct/quantum.hpp"

namespace updstruct {

namespace {

using Builder = std::function<BuiltExample(const std::vector<std::size_t> &, const Tolerance &)>;

LawCheckResult exact(std::string name, bool holds, double residual = 0) {
    LawCheckResult r;
    r.law = std::move(name);
    r.holds = holds;
    r.residual = holds ? 0 : (residual > 0 ? residual : 1);
    return r;
}

// Passes when |value - target| <= 1e-6.
LawCheckResult near(std::string name, double value, double target) {
    LawCheckResult r;
    r.law = std::move(name);
    r.residual = std::abs(value - target);
    r.threshold = 1e-6;
    r.holds = r.residual <= r.threshold;
    return r;
}

std::vector<Morphism> fourier_projectors(std::size_t d) {
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < d; i++) {
        Matrix v(d, 1);
        for (std::size_t k = 0; k < d; k++) {
            double angle = 2 * std::numbers::pi * static_cast<double>(i * k) / static_cast<double>(d);
            v(k, 0) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), angle);
        }
        out.emplace_back(TensorType{d}, TensorType{d}, v * v.adjoint());
    }
    return out;
}

std::vector<Morphism> projectors_for(const std::string &basis, std::size_t d) {
    return basis == "fourier" ? fourier_projectors(d) : computational_projectors(d);
}

std::vector<Extra> pvs_extras(const ProjectorValuedSpectrum &v, const LinearUpdate &u, const Tolerance &tol) {
    std::vector<Extra> out;
    for (auto &eq : pvs_equations(u.get, v.algebra, tol)) {
        out.push_back({std::move(eq)});
    }
    auto recovered = recover_projectors(u.get);
    Comparison worst{true, 0, 0, {}};
    for (std::size_t i = 0; i < recovered.size(); i++) {
        worst = worst_of(worst, approx_eq(recovered[i], v.projectors[i], tol));
    }
    out.push_back({LawCheckResult::from("ProjectorRoundtrip", worst)});
    auto ch = characterize_pvs(u, tol);
    out.push_back({exact("CharacterizedAsPvs", ch.is_pvs && ch.consistent)});
    return out;
}

// Laws whose outcomes the transported and directly built structures must share.
LawCheckResult transport_profile(const LinearUpdate &a, const LinearUpdate &b, const Tolerance &tol) {
    LawCheckResult r;
    r.law = "TransportProfile";
    r.threshold = 1e-6;
    bool same = true;
    for (Law law : kAllLaws) {
        bool ap = law_applicable(a, law);
        if (ap != law_applicable(b, law)) {
            same = false;
            continue;
        }
        if (!ap) {
            continue;
        }
        auto ra = check_law(a, law, tol);
        auto rb = check_law(b, law, tol);
        same = same && ra.holds == rb.holds;
        r.residual = std::max(r.residual, std::abs(ra.residual - rb.residual));
    }
    r.holds = same && r.residual <= r.threshold;
    if (!same && r.residual <= r.threshold) {
        r.residual = 1;
    }
    return r;
}

BuiltExample build_pvs(const std::string &basis, std::size_t d, const Tolerance &tol) {
    auto v = pvs_from_projectors(projectors_for(basis, d), tol);
    auto u = pvs_to_update(v);
    return {u, pvs_extras(v, u, tol)};
}

BuiltExample build_measurement(const std::string &basis, std::size_t d, const Tolerance &tol) {
    auto projectors = projectors_for(basis, d);
    auto v = pvs_from_projectors(projectors, tol);
    auto q = quantum_measurement(v);
    std::vector<Extra> extras;

    double sum = 0;
    for (const auto &p : projectors) {
        double r = static_cast<double>(fixed_point_rank(p, tol));
        sum += r * r;
    }
    double dim = static_cast<double>(v.system.dim());
    auto getput = check_law(q.structure, Law::GetPut, tol);
    extras.push_back({near("GetPutResidualFormula", getput.residual, std::sqrt(dim * dim - sum))});

    Morphism deco = decoherence(v.algebra.carrier);
    Morphism id_s = identity(q.structure.system);
    extras.push_back({LawCheckResult::from("PropertyDecohered",
                                           approx_eq(compose(tensor(id_s, deco), q.get), q.get, tol))});

    auto transported = transform_update(cpm_double_update(pvs_to_update(v)), deco, tol);
    extras.push_back({transport_profile(q.structure, transported.structure, tol)});
    return {q.structure, std::move(extras)};
}

BuiltExample build_decohered(const std::string &basis, std::size_t d, const Tolerance &tol) {
    auto v = pvs_from_projectors(projectors_for(basis, d), tol);
    auto t = transform_update(cpm_double_update(pvs_to_update(v)), decoherence(v.algebra.carrier), tol);
    std::vector<Extra> extras;
    for (auto &p : t.premises) {
        extras.push_back({std::move(p)});
    }
    extras.push_back({transport_profile(t.structure, quantum_measurement(v).structure, tol)});
    return {t.structure, std::move(extras)};
}

BuiltExample build_pair_of_pants(std::size_t d, const Tolerance &tol) {
    auto u = pair_of_pants_update(d);
    std::vector<Extra> extras;
    auto ch = characterize_pvs(pair_of_pants_dagger_update(d), tol);
    bool only_comm = ch.failing.size() == 1 && ch.failing[0].law == "CommutativePut";
    extras.push_back({exact("DaggerVariantRejectedByCommutativity", !ch.is_pvs && ch.consistent && only_comm)});
    auto sigma = check_algebra(FrobeniusAlgebra<Morphism>{u.property, u.mult, *u.trivial_update, u.comult,
                                                          *u.trivial_outcome},
                               AlgebraLaw::comm, tol);
    extras.push_back({sigma, false});
    return {u, std::move(extras)};
}

BuiltExample build_security_db(std::size_t n, const Tolerance &tol) {
    auto p = FinSetObject::numbered(n, "w");
    auto u = security_db(p);
    std::vector<Extra> extras;
    auto getput = check_law(u, Law::GetPut, tol);
    extras.push_back({exact("GetPutFailsExactlyOnSafe", getput.witnesses == safe_stratum(p))});
    FinFunction e = compose(u.put, u.get);
    std::vector<std::size_t> fixed;
    for (std::size_t x = 0; x < e.table().size(); x++) {
        if (e(x) == x) {
            fixed.push_back(x);
        }
    }
    std::vector<std::size_t> breached;
    for (std::size_t q = 0; q < n; q++) {
        breached.push_back(q * 2 + 1);
    }
    extras.push_back({exact("RestrictionImageIsBreached", fixed == breached)});
    return {u, std::move(extras)};
}

std::vector<Extra> lens_extras(const VwbLens &lens, const SetUpdate &u, bool vwb) {
    std::vector<Extra> out;
    out.push_back({exact("VwbLens", check_vwb(lens).vwb()), vwb});
    auto back = update_to_lens(u);
    auto again = lens_to_update(back);
    out.push_back({exact("LensRoundtrip", back.get_fn == lens.get_fn && back.put_fn == lens.put_fn)});
    out.push_back({exact("UpdateRoundtrip", again.put == u.put && again.get == u.get && again.mult == u.mult &&
                                                again.comult == u.comult)});
    return out;
}

BuiltExample build_update_flag(std::size_t n, const Tolerance &) {
    auto lens = security_db_update_flag(FinSetObject::numbered(n, "w"));
    auto u = lens_to_update(lens);
    return {u, lens_extras(lens, u, false)};
}

BuiltExample build_constant_complement(std::size_t nv, std::size_t nr, const Tolerance &) {
    auto lens = constant_complement_lens(FinSetObject::numbered(nv, "v"), FinSetObject::numbered(nr, "r"));
    auto u = lens_to_update(lens);
    return {u, lens_extras(lens, u, true)};
}

BuiltExample build_identity_lens(std::size_t n, const Tolerance &) {
    auto lens = identity_lens(SetType{FinSetObject::numbered(n, "s")});
    auto u = lens_to_update(lens);
    return {u, lens_extras(lens, u, true)};
}

BuiltExample build_postselected(std::size_t d1, std::size_t d2, const Tolerance &tol) {
    auto u = quantum_db_postselected(d1, d2);
    std::vector<Extra> extras;
    auto tp = [&](const char *name, const Morphism &f) {
        LawCheckResult r;
        r.law = name;
        r.residual = trace_preservation_residual(f);
        r.threshold = tol.absolute + tol.relative * discard_doubled(f.dom()).norm();
        r.holds = r.residual <= r.threshold;
        return r;
    };
    extras.push_back({tp("PutTracePreserving", u.put), false});
    extras.push_back({tp("GetTracePreserving", u.get), true});
    return {u, std::move(extras)};
}

BuiltExample build_causal(std::size_t d1, std::size_t d2, const Tolerance &tol) {
    auto c = quantum_db_causal(d1, d2);
    std::vector<Extra> extras;
    Morphism partial = tensor(identity({d1, d1}), decoherence(d2));
    extras.push_back({LawCheckResult::from("ReducedGetPartialDecoherence", approx_eq(c.reduced_get, partial, tol))});
    Morphism full = decoherence(TensorType{d1, d2});
    extras.push_back(
        {LawCheckResult::from("LensLikeReducedFullDecoherence", approx_eq(c.lens_like_reduced, full, tol))});
    extras.push_back({LawCheckResult::from("ReducedGetFullDecoherence", approx_eq(c.reduced_get, full, tol)), false});
    return {c.structure, std::move(extras)};
}

template <class M>
BuiltExample restrict(const UpdateStructure<M> &u, const Tolerance &tol) {
    auto r = getput_restriction(u, tol);
    std::vector<Extra> extras;
    extras.push_back({r.idempotence});
    SplitObject<M> s{u.system, r.idempotent};
    SplitObject<M> sp{u.system * u.property, tensor(r.idempotent, identity(u.property))};
    auto wrapped = [&](const char *name, auto fn) {
        try {
            fn();
            return exact(name, true);
        } catch (const AbsorptionError &) {
            return exact(name, false);
        }
    };
    extras.push_back({wrapped("SplitPut", [&] { split_wrap(r.structure.put, sp, s, tol); })});
    extras.push_back({wrapped("SplitGet", [&] { split_wrap(r.structure.get, s, sp, tol); })});
    extras.push_back({exact("TwoSidedGet", !r.one_sided_get)});
    return {r.structure, std::move(extras)};
}

const std::map<std::string, Builder> &builders() {
    static const std::map<std::string, Builder> table = {
        {"pvs", [](auto &p, auto &t) { return build_pvs("computational", p[0], t); }},
        {"pvs_fourier", [](auto &p, auto &t) { return build_pvs("fourier", p[0], t); }},
        {"pvs_trivial",
         [](auto &p, auto &t) {
             auto v = pvs_from_projectors({identity({p[0]})}, t);
             auto u = pvs_to_update(v);
             return BuiltExample{u, pvs_extras(v, u, t)};
         }},
        {"measurement", [](auto &p, auto &t) { return build_measurement("computational", p[0], t); }},
        {"measurement_fourier", [](auto &p, auto &t) { return build_measurement("fourier", p[0], t); }},
        {"decohered_pvs", [](auto &p, auto &t) { return build_decohered("fourier", p[0], t); }},
        {"pair_of_pants", [](auto &p, auto &t) { return build_pair_of_pants(p[0], t); }},
        {"security_db", [](auto &p, auto &t) { return build_security_db(p[0], t); }},
        {"security_db_update_flag", [](auto &p, auto &t) { return build_update_flag(p[0], t); }},
        {"lens_constant_complement", [](auto &p, auto &t) { return build_constant_complement(p[0], p[1], t); }},
        {"lens_identity", [](auto &p, auto &t) { return build_identity_lens(p[0], t); }},
        {"quantum_db_postselected", [](auto &p, auto &t) { return build_postselected(p[0], p[1], t); }},
        {"quantum_db_causal", [](auto &p, auto &t) { return build_causal(p[0], p[1], t); }},
    };
    return table;
}

bool is_set_constructor(const std::string &c) {
    return c == "security_db" || c == "security_db_update_flag" || c == "lens_constant_complement" ||
           c == "lens_identity";
}

void check_caps(const ExampleSpec &spec, const AnyUpdate *built, const Caps &caps) {
    std::string base = spec.constructor;
    if (base.starts_with("karoubi_split:")) {
        base = base.substr(std::string("karoubi_split:").size());
    }
    std::size_t limit = is_set_constructor(base) ? caps.max_set : caps.max_wire;
    for (std::size_t p : spec.parameters) {
        if (p == 0 || p > limit) {
            throw CapExceeded(spec.name + ": parameter " + std::to_string(p) + " outside 1.." +
                              std::to_string(limit));
        }
    }
    if (built == nullptr) {
        return;
    }
    std::visit(
        [&](const auto &u) {
            using U = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<U, SetUpdate>) {
                if (u.system.size() > caps.max_set || u.property.size() > caps.max_set) {
                    throw CapExceeded(spec.name + ": set size exceeds " + std::to_string(caps.max_set));
                }
            } else {
                TensorType wires = u.system * u.property;
                for (std::size_t d : wires.factors()) {
                    if (d > caps.max_wire) {
                        throw CapExceeded(spec.name + ": wire dimension exceeds " + std::to_string(caps.max_wire));
                    }
                }
                if (u.system.dim() > caps.max_doubled) {
                    throw CapExceeded(spec.name + ": system dimension exceeds " +
                                      std::to_string(caps.max_doubled));
                }
            }
        },
        *built);
}

std::vector<ExampleSpec> make_registry() {
    using K = ClassKind;
    const std::vector<std::string> measured{"GetPut", "PutGetA", "Faithful"};
    std::vector<ExampleSpec> r = {
        {"qubit_z_pvs", "pvs", {2}, "projector-valued spectrum in the computational basis", K::strong, {"PutGetA"}},
        {"qutrit_pvs", "pvs_fourier", {3}, "projector-valued spectrum in the Fourier basis", K::strong, {"PutGetA"}},
        {"trivial_pvs", "pvs_trivial", {2}, "one-outcome projector-valued spectrum", K::strong, {}},
        {"qubit_measurement", "measurement", {2}, "decohered quantum measurement", K::weak_only, measured},
        {"qutrit_measurement", "measurement_fourier", {3}, "decohered quantum measurement", K::weak_only, measured},
        {"decohered_pvs", "decohered_pvs", {2}, "doubled spectrum transported along decoherence", K::weak_only,
         measured},
        {"pair_of_pants_2", "pair_of_pants", {2}, "operator composition monoid", K::strong,
         {"PutGetA", "CommutativePut", "CommutativeGet"}},
        {"pair_of_pants_3", "pair_of_pants", {3}, "operator composition monoid", K::strong,
         {"PutGetA", "CommutativePut", "CommutativeGet"}},
        {"pair_of_pants_4", "pair_of_pants", {4}, "operator composition monoid", K::strong,
         {"PutGetA", "CommutativePut", "CommutativeGet"}},
        {"security_db", "security_db", {3}, "database with a breach flag", K::weak_only,
         {"GetPut", "PutGetA", "PutGetC", "TrivialOutcome", "CommutativePut"}},
        {"security_db_update_flag", "security_db_update_flag", {3}, "lens whose flag records updates",
         K::weak_only, {"GetPut", "PutGetA", "PutGetC", "CommutativePut"}},
        {"quantum_db_postselected", "quantum_db_postselected", {2, 2}, "quantum database with post-selection",
         K::strong, {"PutGetA", "PutGetC", "CommutativePut"}},
        {"quantum_db_causal", "quantum_db_causal", {2, 2}, "causal quantum database on doubled wires",
         K::weak_only, {"GetPut", "PutGetA", "PutGetC", "Faithful", "CommutativePut"}},
        {"lens_constant_complement", "lens_constant_complement", {3, 2}, "constant-complement lens", K::strong,
         {"PutGetA", "PutGetC", "CommutativePut"}},
        {"lens_identity", "lens_identity", {3}, "identity lens", K::strong,
         {"PutGetA", "PutGetC", "CommutativePut"}},
    };
    std::vector<ExampleSpec> split;
    for (const auto &e : r) {
        if (e.expected_kind == K::weak_only) {
            split.push_back({"karoubi_split_" + e.name, "karoubi_split:" + e.constructor, e.parameters,
                             "restriction onto the image of put after get", K::strong, {}, true});
        }
    }
    r.insert(r.end(), split.begin(), split.end());
    return r;
}

nlohmann::ordered_json law_json(const LawCheckResult &r) {
    nlohmann::ordered_json j;
    j["name"] = r.law;
    j["holds"] = r.holds;
    j["residual"] = r.residual;
    j["tolerance"] = r.threshold;
    return j;
}

nlohmann::ordered_json report_object(const SuiteReport &r) {
    nlohmann::ordered_json j;
    j["example"] = r.example;
    j["backend"] = r.backend;
    j["classification"] = class_kind_name(r.classification);
    j["expected_classification"] = class_kind_name(r.expected);
    j["ok"] = r.ok();
    if (!r.error.empty()) {
        j["error"] = r.error;
    }
    auto laws = nlohmann::ordered_json::array();
    for (const auto &l : r.laws) {
        auto x = law_json(l.result);
        x["expected"] = l.expected_holds;
        laws.push_back(std::move(x));
    }
    j["laws"] = std::move(laws);
    auto derived = nlohmann::ordered_json::array();
    for (const auto &d : r.derived) {
        nlohmann::ordered_json x;
        x["name"] = derived_name(d.prop);
        x["verdict"] = verdict_name(d.verdict);
        x["residual"] = d.residual;
        x["tolerance"] = d.threshold;
        derived.push_back(std::move(x));
    }
    j["derived"] = std::move(derived);
    auto extras = nlohmann::ordered_json::array();
    for (const auto &e : r.extras) {
        auto x = law_json(e.result);
        x["expected"] = e.expected;
        extras.push_back(std::move(x));
    }
    j["extras"] = std::move(extras);
    return j;
}

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(6) << x;
    return out.str();
}

}  // namespace

bool SuiteReport::ok() const {
    if (!error.empty() || classification != expected) {
        return false;
    }
    for (const auto &l : laws) {
        if (!l.matches()) {
            return false;
        }
    }
    for (const auto &d : derived) {
        if (d.verdict == Verdict::fails) {
            return false;
        }
    }
    for (const auto &e : extras) {
        if (e.result.holds != e.expected) {
            return false;
        }
    }
    return true;
}

const std::vector<ExampleSpec> &registry() {
    static const std::vector<ExampleSpec> r = make_registry();
    return r;
}

const ExampleSpec &find_example(const std::string &name) {
    for (const auto &e : registry()) {
        if (e.name == name) {
            return e;
        }
    }
    throw NotFound("unknown example '" + name + "'");
}

BuiltExample build_example(const ExampleSpec &spec, const Caps &caps, const Tolerance &tol) {
    check_caps(spec, nullptr, caps);
    const std::string prefix = "karoubi_split:";
    bool split = spec.constructor.starts_with(prefix);
    std::string id = split ? spec.constructor.substr(prefix.size()) : spec.constructor;
    auto it = builders().find(id);
    if (it == builders().end()) {
        throw NotFound("unknown constructor '" + id + "'");
    }
    BuiltExample b = it->second(spec.parameters, tol);
    if (split) {
        b = std::visit([&](const auto &u) { return restrict(u, tol); }, b.structure);
    }
    check_caps(spec, &b.structure, caps);
    return b;
}

SuiteReport run_example(const ExampleSpec &spec, const Tolerance &tol, const Caps &caps) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.example = spec.name;
    rep.expected = spec.expected_kind;
    try {
        BuiltExample b = build_example(spec, caps, tol);
        rep.extras = std::move(b.extras);
        std::visit(
            [&](const auto &u) {
                rep.backend = backend_name(u.backend);
                rep.classification = classify(u, tol).kind;
                for (Law law : kAllLaws) {
                    bool core = law == Law::PutPut || law == Law::GetGet || law == Law::PutGet ||
                                law == Law::GetPut || law == Law::RepeatUpdate;
                    if ((spec.core_laws_only && !core) || !law_applicable(u, law)) {
                        continue;
                    }
                    std::string name(law_name(law));
                    bool fails = std::find(spec.expected_failing.begin(), spec.expected_failing.end(), name) !=
                                 spec.expected_failing.end();
                    rep.laws.push_back({check_law(u, law, tol), !fails});
                }
                for (DerivedProp p : kAllDerivedProps) {
                    rep.derived.push_back(verify_derived(u, p, tol));
                }
                // With get . put = id and both units, id_{S (x) p} factors through the unit.
                if (u.trivial_update && u.trivial_outcome && check_law(u, Law::PutGetA, tol).holds) {
                    auto through = tensor(identity(u.system), compose(*u.trivial_update, *u.trivial_outcome));
                    auto c = compare(identity(u.system * u.property), through, tol);
                    rep.extras.push_back({LawCheckResult::from("IdentitySeparates", c)});
                }
            },
            b.structure);
    } catch (const std::exception &e) {
        rep.error = e.what();
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<SuiteReport> run_all(const Tolerance &tol, const Caps &caps) {
    std::vector<std::future<SuiteReport>> jobs;
    for (const auto &spec : registry()) {
        jobs.push_back(std::async(std::launch::async, [&spec, tol, caps] { return run_example(spec, tol, caps); }));
    }
    std::vector<SuiteReport> out;
    for (auto &j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

std::string report_json(const std::vector<SuiteReport> &reports, bool single) {
    if (single && reports.size() == 1) {
        return report_object(reports.front()).dump(2) + "\n";
    }
    nlohmann::ordered_json j;
    bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport &r) { return r.ok(); });
    j["ok"] = ok;
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
        arr.push_back(report_object(r));
    }
    j["examples"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string report_text(const std::vector<SuiteReport> &reports) {
    std::ostringstream out;
    std::size_t good = 0;
    for (const auto &r : reports) {
        good += r.ok();
        out << (r.ok() ? "ok    " : "FAIL  ") << r.example << "  [" << r.backend << "] "
            << class_kind_name(r.classification);
        if (r.classification != r.expected) {
            out << " (expected " << class_kind_name(r.expected) << ")";
        }
        out << "  " << fmt(r.wall_seconds) << "s\n";
        if (!r.error.empty()) {
            out << "    error: " << r.error << "\n";
        }
        for (const auto &l : r.laws) {
            out << "    " << (l.matches() ? "  " : "! ") << std::left << std::setw(16) << l.result.law
                << (l.result.holds ? "holds " : "fails ") << "residual " << fmt(l.result.residual) << "\n";
        }
        for (const auto &d : r.derived) {
            out << "    " << (d.verdict == Verdict::fails ? "! " : "  ") << std::left << std::setw(30)
                << derived_name(d.prop) << verdict_name(d.verdict) << "\n";
        }
        for (const auto &e : r.extras) {
            out << "    " << (e.result.holds == e.expected ? "  " : "! ") << std::left << std::setw(36)
                << e.result.law << (e.result.holds ? "holds " : "fails ") << "residual " << fmt(e.result.residual)
                << "\n";
        }
    }
    out << good << "/" << reports.size() << " examples as expected\n";
    return out.str();
}

std::string list_json() {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &e : registry()) {
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["constructor"] = e.constructor;
        j["parameters"] = e.parameters;
        j["family"] = e.family;
        j["expected_classification"] = class_kind_name(e.expected_kind);
        j["expected_failing"] = e.expected_failing;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string list_text() {
    std::ostringstream out;
    for (const auto &e : registry()) {
        out << std::left << std::setw(40) << e.name << std::setw(10) << class_kind_name(e.expected_kind)
            << e.family << "\n";
    }
    return out.str();
}

}  // namespace updstruct
