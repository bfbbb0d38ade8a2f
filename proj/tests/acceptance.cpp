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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cmath>
#include <functional>
#include <numbers>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "updstruct/karoubi.hpp"
#include "updstruct/lens.hpp"
#include "updstruct/quantum.hpp"
#include "updstruct/registry.hpp"

using namespace updstruct;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            if (pass) {
                detail << what;
            }
            pass = false;
        }
    }
};

const Tolerance kTight = Tolerance::uniform(1e-9);

double residual_of(const AnyUpdate &u, Law law) {
    return std::visit([&](const auto &s) { return check_law(s, law, kTight).residual; }, u);
}

// || sum_i P_i (x) conj(P_i) - I || written out entrywise.
double disturbance(const std::vector<Morphism> &ps) {
    Eigen::Index d = ps.front().matrix().rows();
    Matrix acc = -Matrix::Identity(d * d, d * d);
    for (const auto &p : ps) {
        for (Eigen::Index a = 0; a < d; a++) {
            for (Eigen::Index b = 0; b < d; b++) {
                for (Eigen::Index c = 0; c < d; c++) {
                    for (Eigen::Index e = 0; e < d; e++) {
                        acc(a * d + b, c * d + e) += p.matrix()(a, c) * std::conj(p.matrix()(b, e));
                    }
                }
            }
        }
    }
    return acc.norm();
}

std::vector<Morphism> fourier_projectors(std::size_t d) {
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < d; i++) {
        Matrix v(d, 1);
        for (std::size_t k = 0; k < d; k++) {
            v(k, 0) = std::polar(1 / std::sqrt(double(d)), 2 * std::numbers::pi * double(i * k) / double(d));
        }
        out.emplace_back(TensorType{d}, TensorType{d}, v * v.adjoint());
    }
    return out;
}

struct Registered {
    const ExampleSpec *spec;
    AnyUpdate structure;
};

std::vector<Registered> registered_structures() {
    std::vector<Registered> out;
    for (const auto &spec : registry()) {
        out.push_back({&spec, build_example(spec, {}, kTight).structure});
    }
    return out;
}

std::vector<VwbLens> lens_pool(std::mt19937_64 &rng) {
    std::vector<VwbLens> pool;
    for (int round = 0; round < 4; round++) {
        for (std::size_t nv = 1; nv <= 4; nv++) {
            for (std::size_t nr = 1; nr <= 4; nr++) {
                if (nv * nv * nr <= 64) {
                    pool.push_back(random_vwb_lens(rng, nv, nr));
                }
            }
        }
    }
    return pool;
}

Outcome definitional() {
    Outcome o;
    for (const char *name : {"qubit_z_pvs", "qutrit_pvs"}) {
        auto u = std::get<LinearUpdate>(build_example(find_example(name), {}, kTight).structure);
        auto c = classify(u, kTight);
        o.require(c.kind == ClassKind::strong, std::string(name) + " not strong");
        for (Law law : {Law::PutPut, Law::GetGet, Law::PutGet, Law::GetPut}) {
            double r = check_law(u, law, kTight).residual;
            o.require(r < 1e-9, std::string(name) + " " + std::string(law_name(law)) + " residual " + std::to_string(r));
        }
    }
    o.detail << "qubit and qutrit spectra strong";
    return o;
}

Outcome measurement() {
    Outcome o;
    struct Case {
        std::vector<Morphism> projectors;
        double expected;
    };
    for (const auto &c : {Case{computational_projectors(2), std::sqrt(2.0)}, Case{fourier_projectors(3), std::sqrt(6.0)}}) {
        auto q = quantum_measurement(pvs_from_projectors(c.projectors, kTight));
        o.require(classify(q.structure, kTight).kind == ClassKind::weak_only, "measurement not weak_only");
        o.require(check_law(q.structure, Law::RepeatUpdate, kTight).residual < 1e-9, "RepeatUpdate residual");
        double r = check_law(q.structure, Law::GetPut, kTight).residual;
        o.require(std::abs(r - c.expected) <= 1e-6, "GetPut residual " + std::to_string(r));
        o.require(std::abs(disturbance(c.projectors) - c.expected) <= 1e-6, "oracle disagrees");
        o.detail << "GetPut " << r << "; ";
    }
    return o;
}

Outcome lens_bijection() {
    Outcome o;
    std::mt19937_64 rng(2026);
    auto pool = lens_pool(rng);
    std::size_t vwb = 0;
    for (std::size_t k = 0; k < 40; k++) {
        pool.push_back(random_lens(rng, 1 + rng() % 6, 1 + rng() % 4));
    }
    for (const auto &lens : pool) {
        auto laws = check_vwb(lens);
        vwb += laws.vwb();
        auto u = lens_to_update(lens);
        auto back = update_to_lens(u);
        o.require(back.get_fn == lens.get_fn && back.put_fn == lens.put_fn, "lens->update->lens differs");
        auto again = lens_to_update(back);
        o.require(again.put == u.put && again.get == u.get && again.mult == u.mult && again.comult == u.comult,
                  "update->lens->update differs");
        o.require(laws.put_put.holds == check_law(u, Law::PutPut).holds, "PutPut correspondence");
        o.require(laws.put_get.holds == check_law(u, Law::PutGet).holds, "PutGet correspondence");
        o.require(laws.get_put.holds == check_law(u, Law::GetPut).holds, "GetPut correspondence");
    }
    o.require(vwb >= 50, "fewer than 50 vwb lenses");
    o.detail << pool.size() << " lenses, " << vwb << " vwb";
    return o;
}

Outcome separability() {
    Outcome o;
    std::mt19937_64 rng(2027);
    auto pool = lens_pool(rng);
    std::size_t with_unit = 0;
    std::size_t wide = 0;
    for (const auto &lens : pool) {
        auto s = trivial_update_separability(lens);
        o.require(s.vwb, "pool lens not vwb");
        bool preserving = compare(lens.put_fn, project_first(lens.system, lens.view)).holds;
        if (lens.view.size() >= 2) {
            wide++;
            o.require(!s.trivial_update || preserving, "trivial update on a non-preserving lens");
        }
        if (s.trivial_update) {
            with_unit++;
            o.require(s.separable, "trivial update without put = id x delete");
        }
    }
    o.detail << wide << " lenses with |V|>=2, " << with_unit << " with a trivial update (all separable)";
    return o;
}

Outcome weak_to_strong(const std::vector<Registered> &all) {
    Outcome o;
    std::size_t strong = 0;
    std::size_t nonvacuous = 0;
    for (const auto &r : all) {
        std::visit(
            [&](const auto &u) {
                if (classify(u, kTight).kind == ClassKind::strong) {
                    strong++;
                    o.require(check_law(u, Law::RepeatUpdate, kTight).residual < 1e-9,
                              r.spec->name + ": strong without RepeatUpdate");
                }
                auto d = verify_derived(u, DerivedProp::weak_trivial_implies_strong, kTight);
                o.require(d.verdict != Verdict::fails, r.spec->name + ": weak with trivial update lacks GetPut");
                if (d.verdict == Verdict::holds) {
                    nonvacuous++;
                    o.require(d.residual < 1e-9, r.spec->name + ": GetPut residual");
                }
            },
            r.structure);
    }
    o.require(nonvacuous > 0, "no structure exercises the weak-to-strong implication");
    o.detail << strong << " strong structures, " << nonvacuous << " non-vacuous weak-to-strong";
    return o;
}

Outcome derived(const std::vector<Registered> &all) {
    Outcome o;
    const DerivedProp props[] = {DerivedProp::coassoc_under_put_from_B, DerivedProp::assoc_under_get_from_C,
                                 DerivedProp::frobenius_under_put_from_BC, DerivedProp::comm_under_put,
                                 DerivedProp::unit_under_put};
    for (DerivedProp p : props) {
        std::size_t exercised = 0;
        for (const auto &r : all) {
            auto d = std::visit([&](const auto &u) { return verify_derived(u, p, kTight); }, r.structure);
            if (d.verdict == Verdict::vacuous) {
                continue;
            }
            exercised++;
            o.require(d.verdict == Verdict::holds && d.residual < 1e-9,
                      r.spec->name + ": " + std::string(derived_name(p)) + " residual " + std::to_string(d.residual));
        }
        o.require(exercised >= 3, std::string(derived_name(p)) + " exercised only " + std::to_string(exercised));
        o.detail << derived_name(p) << "=" << exercised << " ";
    }
    return o;
}

Outcome characterization() {
    Outcome o;
    for (auto ps : {computational_projectors(2), fourier_projectors(3), std::vector<Morphism>{identity({2})}}) {
        auto c = characterize_pvs(pvs_to_update(pvs_from_projectors(ps, kTight)), kTight);
        o.require(c.is_pvs && c.consistent, "spectrum not characterized as one");
    }
    auto u = pvs_to_update(pvs_from_projectors(computational_projectors(2), kTight));
    auto named = [&](const char *label, const LinearUpdate &v) {
        auto c = characterize_pvs(v, kTight);
        o.require(!c.is_pvs && !c.failing.empty(), std::string(label) + " accepted");
        o.require(c.consistent, std::string(label) + " inconsistent");
        if (!c.failing.empty()) {
            o.detail << label << "->" << c.failing.front().law << " ";
        }
    };
    auto bumped = u;
    Matrix m = bumped.put.matrix();
    m(0, 0) += 0.1;
    bumped.put = Morphism(bumped.put.dom(), bumped.put.cod(), m);
    named("perturbed", bumped);
    named("noncommutative", pair_of_pants_dagger_update(2));
    auto no_unit = u;
    no_unit.trivial_update.reset();
    named("no-unit", no_unit);
    return o;
}

Outcome pants() {
    Outcome o;
    for (std::size_t d : {2, 3, 4}) {
        auto u = pair_of_pants_update(d);
        std::string tag = "d=" + std::to_string(d) + " ";
        o.require(classify(u, kTight).kind == ClassKind::strong, tag + "not strong");
        o.require(check_law(u, Law::Faithful, kTight).holds, tag + "not faithful");
        auto comm = check_law(u, Law::CommutativePut, kTight);
        o.require(!comm.holds && !comm.witnesses.empty(), tag + "CommutativePut without witness");
        o.require(check_law(u, Law::TrivialUpdate, kTight).holds, tag + "cup is not a trivial update");
        o.detail << tag << "comm witnesses " << comm.witnesses.size() << "; ";
    }
    return o;
}

Outcome security() {
    Outcome o;
    auto p = FinSetObject::numbered(3, "w");
    auto u = security_db(p);
    o.require(classify(u).kind == ClassKind::weak_only, "not weak_only");
    o.require(check_law(u, Law::GetPut).witnesses == safe_stratum(p), "GetPut disagreement set is not the safe stratum");
    auto r = getput_restriction(u);
    o.require(r.classification.kind == ClassKind::strong, "restriction not strong");
    for (const auto &c : r.classification.checked) {
        o.require(c.holds && c.residual == 0, "restricted " + c.law + " not exact");
    }
    o.detail << "GetPut fails on " << safe_stratum(p).size() << " safe states; restriction exact";
    return o;
}

Outcome databases() {
    Outcome o;
    auto post = quantum_db_postselected(2, 2);
    o.require(classify(post, kTight).kind == ClassKind::strong, "postselected not strong");
    for (Law law : {Law::PutPut, Law::GetGet, Law::PutGet, Law::GetPut}) {
        o.require(check_law(post, law, kTight).residual < 1e-9, "postselected residual");
    }
    auto c = quantum_db_causal(2, 2);
    o.require(classify(c.structure, kTight).kind == ClassKind::weak_only, "causal not weak_only");
    Morphism partial = tensor(identity({2, 2}), decoherence(2));
    double rp = (c.reduced_get - partial).norm();
    double rf = (c.lens_like_reduced - Morphism(decoherence(TensorType{2, 2}))).norm();
    o.require(rp < 1e-9, "reduced get is not id (x) deco");
    o.require(rf < 1e-9, "lens-like reduced process is not full decoherence");
    o.detail << "partial " << rp << ", full " << rf;
    return o;
}

Outcome transport() {
    Outcome o;
    auto v = pvs_from_projectors(computational_projectors(2), kTight);
    auto q = quantum_measurement(v);
    auto t = transform_update(cpm_double_update(pvs_to_update(v)), decoherence(2), kTight);
    double worst = 0;
    for (Law law : kAllLaws) {
        bool a = law_applicable(q.structure, law);
        o.require(a == law_applicable(t.structure, law), "applicability differs");
        if (!a) {
            continue;
        }
        auto rq = check_law(q.structure, law, kTight);
        auto rt = check_law(t.structure, law, kTight);
        o.require(rq.holds == rt.holds, std::string(law_name(law)) + " outcome differs");
        worst = std::max(worst, std::abs(rq.residual - rt.residual));
    }
    o.require(worst <= 1e-6, "residuals differ by " + std::to_string(worst));
    o.detail << "largest residual gap " << worst;
    return o;
}

Outcome karoubi(const std::vector<Registered> &all) {
    Outcome o;
    std::size_t restricted = 0;
    for (const auto &r : all) {
        if (r.spec->core_laws_only) {
            continue;
        }
        std::visit(
            [&](const auto &u) {
                auto e = compose(u.put, u.get);
                double idem = compare(compose(e, e), e, kTight).residual;
                o.require(idem < 1e-9, r.spec->name + ": put.get not idempotent");
                if (classify(u, kTight).kind != ClassKind::weak_only) {
                    return;
                }
                restricted++;
                auto res = getput_restriction(u, kTight);
                o.require(res.classification.kind == ClassKind::strong, r.spec->name + ": restriction not strong");
                for (const auto &c : res.classification.checked) {
                    o.require(c.residual < 1e-9, r.spec->name + ": restricted " + c.law);
                }
            },
            r.structure);
    }
    o.detail << restricted << " weak structures restricted to strong ones";
    return o;
}

}  // namespace

int main() {
    std::vector<Registered> all;
    try {
        all = registered_structures();
    } catch (const std::exception &e) {
        std::cout << "FAIL registry construction: " << e.what() << "\n";
        return 1;
    }
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 definitional suite", definitional},
        {"2 measurement suite", measurement},
        {"3 lens bijection", lens_bijection},
        {"4 trivial-update separability", separability},
        {"5 weak-to-strong implications", [&] { return weak_to_strong(all); }},
        {"6 derived-structure suite", [&] { return derived(all); }},
        {"7 spectrum characterization", characterization},
        {"8 pair of pants", pants},
        {"9 security database", security},
        {"10 quantum databases", databases},
        {"11 transport along decoherence", transport},
        {"12 karoubi restriction", [&] { return karoubi(all); }},
    };
    int failures = 0;
    for (auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail.str(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << "\n";
    }
    return failures == 0 ? 0 : 1;
}
