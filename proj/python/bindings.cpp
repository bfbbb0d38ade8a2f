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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "updstruct/lens.hpp"
#include "updstruct/quantum.hpp"
#include "updstruct/registry.hpp"

namespace py = pybind11;
using namespace updstruct;

namespace {

py::dict law_table(const LinearUpdate &u, const Tolerance &tol) {
    py::dict laws;
    for (Law law : kAllLaws) {
        if (!law_applicable(u, law)) {
            continue;
        }
        auto r = check_law(u, law, tol);
        laws[py::str(std::string(law_name(law)))] = py::make_tuple(r.holds, r.residual);
    }
    return laws;
}

py::dict summarize(const LinearUpdate &u, const Tolerance &tol) {
    py::dict out;
    out["classification"] = std::string(class_kind_name(classify(u, tol).kind));
    out["laws"] = law_table(u, tol);
    return out;
}

std::vector<Morphism> to_projectors(const std::vector<Matrix> &mats) {
    std::vector<Morphism> out;
    for (const auto &m : mats) {
        if (m.rows() != m.cols()) {
            throw std::invalid_argument("projectors must be square");
        }
        auto d = static_cast<std::size_t>(m.rows());
        out.emplace_back(TensorType{d}, TensorType{d}, m);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Law checking for update structures";

    py::register_exception<TypeMismatch>(m, "TypeMismatch", PyExc_ValueError);
    py::register_exception<PremiseError>(m, "PremiseError", PyExc_ValueError);
    py::register_exception<NotFound>(m, "NotFound", PyExc_KeyError);

    m.def("list_examples_json", &list_json);
    m.def(
        "check_example_json",
        [](const std::string &name, double tol) {
            const auto &spec = find_example(name);
            py::gil_scoped_release release;
            return report_json({run_example(spec, Tolerance::uniform(tol))}, true);
        },
        py::arg("name"), py::arg("tol") = 1e-9);
    m.def(
        "check_all_json",
        [](double tol) {
            py::gil_scoped_release release;
            return report_json(run_all(Tolerance::uniform(tol)), false);
        },
        py::arg("tol") = 1e-9);

    m.def(
        "spectrum_report",
        [](const std::vector<Matrix> &projectors, double tol) {
            Tolerance t = Tolerance::uniform(tol);
            auto v = pvs_from_projectors(to_projectors(projectors), t);
            auto u = pvs_to_update(v);
            auto q = quantum_measurement(v);
            auto ch = characterize_pvs(u, t);
            py::dict out;
            out["spectrum"] = summarize(u, t);
            out["measurement"] = summarize(q.structure, t);
            out["is_pvs"] = ch.is_pvs;
            out["spectrum_matrix"] = v.spectrum.matrix();
            return out;
        },
        py::arg("projectors"), py::arg("tol") = 1e-9);

    m.def(
        "pair_of_pants_report", [](std::size_t d, double tol) { return summarize(pair_of_pants_update(d), Tolerance::uniform(tol)); },
        py::arg("d"), py::arg("tol") = 1e-9);

    m.def(
        "lens_report",
        [](std::size_t system_size, std::size_t view_size, std::vector<std::size_t> get,
           std::vector<std::size_t> put) {
            SetType s{FinSetObject::numbered(system_size, "s")};
            SetType v{FinSetObject::numbered(view_size, "v")};
            VwbLens lens{s, v, FinFunction(s, v, std::move(get)), FinFunction(s * v, s, std::move(put))};
            auto laws = check_vwb(lens);
            auto u = lens_to_update(lens);
            py::dict out;
            out["put_put"] = laws.put_put.holds;
            out["put_get"] = laws.put_get.holds;
            out["get_put"] = laws.get_put.holds;
            out["classification"] = std::string(class_kind_name(classify(u).kind));
            return out;
        },
        py::arg("system_size"), py::arg("view_size"), py::arg("get"), py::arg("put"));
}
