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

#include "updstruct/category.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace updstruct {

void Tolerance::validate() const {
    if (!(absolute >= 0) || !(relative >= 0) || (absolute == 0 && relative == 0)) {
        throw std::invalid_argument("tolerance needs non-negative parts, at least one positive");
    }
}

// ---------------------------------------------------------------------------
// TensorType

TensorType::TensorType(std::initializer_list<std::size_t> factors)
    : TensorType(std::vector<std::size_t>(factors)) {
}

TensorType::TensorType(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
    for (auto d : factors_) {
        if (d == 0) {
            throw std::invalid_argument("tensor factors must be >= 1");
        }
    }
}

std::size_t TensorType::dim() const {
    return std::accumulate(factors_.begin(), factors_.end(), std::size_t{1}, std::multiplies<>());
}

TensorType TensorType::operator*(const TensorType &other) const {
    auto f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return TensorType(std::move(f));
}

std::vector<std::size_t> TensorType::digits(std::size_t index) const {
    std::vector<std::size_t> out(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        out[k] = index % factors_[k];
        index /= factors_[k];
    }
    return out;
}

std::size_t TensorType::index(std::span<const std::size_t> digits) const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < factors_.size(); k++) {
        r = r * factors_[k] + digits[k];
    }
    return r;
}

std::string TensorType::str() const {
    std::ostringstream ss;
    ss << *this;
    return ss.str();
}

std::ostream &operator<<(std::ostream &out, const TensorType &t) {
    out << '[';
    for (std::size_t k = 0; k < t.factors().size(); k++) {
        if (k) {
            out << ',';
        }
        out << t.factors()[k];
    }
    return out << ']';
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(TensorType dom, TensorType cod, Matrix entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(entries)) {
    if (static_cast<std::size_t>(m_.rows()) != cod_.dim() || static_cast<std::size_t>(m_.cols()) != dom_.dim()) {
        std::ostringstream ss;
        ss << "matrix of shape " << m_.rows() << "x" << m_.cols() << " does not fit " << dom_ << " -> " << cod_;
        throw TypeMismatch(ss.str());
    }
    if (!m_.allFinite()) {
        throw std::invalid_argument("morphism entries must be finite");
    }
}

static void require_parallel(const Morphism &a, const Morphism &b, const char *what) {
    if (a.dom() != b.dom() || a.cod() != b.cod()) {
        std::ostringstream ss;
        ss << what << ": " << a.dom() << " -> " << a.cod() << " is not parallel to " << b.dom() << " -> " << b.cod();
        throw TypeMismatch(ss.str());
    }
}

Morphism Morphism::operator+(const Morphism &other) const {
    require_parallel(*this, other, "sum");
    return Morphism(dom_, cod_, m_ + other.m_);
}

Morphism Morphism::operator-(const Morphism &other) const {
    require_parallel(*this, other, "difference");
    return Morphism(dom_, cod_, m_ - other.m_);
}

Morphism Morphism::operator*(Complex s) const {
    return Morphism(dom_, cod_, m_ * s);
}

std::ostream &operator<<(std::ostream &out, const Morphism &f) {
    out << f.dom() << " -> " << f.cod() << "\n";
    auto flags = out.flags();
    auto precision = out.precision();
    out << std::fixed << std::setprecision(4);
    for (Eigen::Index r = 0; r < f.matrix().rows(); r++) {
        for (Eigen::Index c = 0; c < f.matrix().cols(); c++) {
            auto z = f.matrix()(r, c);
            out << (c ? " " : "") << std::setw(7) << z.real();
            if (z.imag() != 0) {
                out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            }
        }
        out << "\n";
    }
    out.flags(flags);
    out.precision(precision);
    return out;
}

Morphism compose(const Morphism &g, const Morphism &f) {
    if (f.cod() != g.dom()) {
        std::ostringstream ss;
        ss << "cannot compose: codomain " << f.cod() << " of the first map does not match domain " << g.dom()
           << " of the second";
        throw TypeMismatch(ss.str());
    }
    return Morphism(f.dom(), g.cod(), g.matrix() * f.matrix());
}

Morphism compose_chain(std::initializer_list<Morphism> chain) {
    if (chain.size() == 0) {
        throw std::invalid_argument("empty composition chain");
    }
    auto it = std::rbegin(chain);
    Morphism acc = *it;
    for (++it; it != std::rend(chain); ++it) {
        acc = compose(*it, acc);
    }
    return acc;
}

Morphism compose_tensor_id(const Morphism &f, const TensorType &t, const Morphism &x) {
    if (x.cod() != f.dom() * t) {
        throw TypeMismatch("cannot compose " + (f.dom() * t).str() + " after " + x.cod().str());
    }
    auto a = static_cast<Eigen::Index>(f.dom().dim());
    auto b = static_cast<Eigen::Index>(f.cod().dim());
    auto k = static_cast<Eigen::Index>(t.dim());
    const Matrix &in = x.matrix();
    Eigen::Index n = in.cols();
    Matrix out(b * k, n);
    using Strided = Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>;
    for (Eigen::Index j = 0; j < k; j++) {
        Eigen::Map<const Matrix, 0, Strided> src(in.data() + j, a, n, Strided(in.rows(), k));
        Eigen::Map<Matrix, 0, Strided> dst(out.data() + j, b, n, Strided(out.rows(), k));
        dst.noalias() = f.matrix() * src;
    }
    return Morphism(x.dom(), f.cod() * t, std::move(out));
}

Morphism compose_id_tensor(const TensorType &t, const Morphism &f, const Morphism &x) {
    if (x.cod() != t * f.dom()) {
        throw TypeMismatch("cannot compose " + (t * f.dom()).str() + " after " + x.cod().str());
    }
    auto a = static_cast<Eigen::Index>(f.dom().dim());
    auto b = static_cast<Eigen::Index>(f.cod().dim());
    auto k = static_cast<Eigen::Index>(t.dim());
    const Matrix &in = x.matrix();
    Matrix out(b * k, in.cols());
    for (Eigen::Index s = 0; s < k; s++) {
        out.middleRows(s * b, b).noalias() = f.matrix() * in.middleRows(s * a, a);
    }
    return Morphism(x.dom(), t * f.cod(), std::move(out));
}

Morphism tensor(const Morphism &f, const Morphism &g) {
    const Matrix &a = f.matrix();
    const Matrix &b = g.matrix();
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return Morphism(f.dom() * g.dom(), f.cod() * g.cod(), std::move(out));
}

Morphism identity(const TensorType &t) {
    auto n = static_cast<Eigen::Index>(t.dim());
    return Morphism(t, t, Matrix::Identity(n, n));
}

Morphism swap(const TensorType &a, const TensorType &b) {
    std::size_t da = a.dim();
    std::size_t db = b.dim();
    Matrix m = Matrix::Zero(da * db, da * db);
    for (std::size_t x = 0; x < da; x++) {
        for (std::size_t y = 0; y < db; y++) {
            m(y * da + x, x * db + y) = 1;
        }
    }
    return Morphism(a * b, b * a, std::move(m));
}

Morphism permute(const TensorType &t, std::span<const std::size_t> order) {
    if (order.size() != t.rank()) {
        throw std::invalid_argument("permutation length does not match the number of factors");
    }
    std::vector<std::size_t> seen(order.begin(), order.end());
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < seen.size(); k++) {
        if (seen[k] != k) {
            throw std::invalid_argument("not a permutation of the factors");
        }
    }
    std::vector<std::size_t> out_factors;
    for (auto k : order) {
        out_factors.push_back(t.factors()[k]);
    }
    TensorType out_type(out_factors);
    Matrix m = Matrix::Zero(out_type.dim(), t.dim());
    std::vector<std::size_t> out_digits(order.size());
    for (std::size_t x = 0; x < t.dim(); x++) {
        auto d = t.digits(x);
        for (std::size_t k = 0; k < order.size(); k++) {
            out_digits[k] = d[order[k]];
        }
        m(out_type.index(out_digits), x) = 1;
    }
    return Morphism(t, out_type, std::move(m));
}

Morphism dagger(const Morphism &f) {
    return Morphism(f.cod(), f.dom(), f.matrix().adjoint());
}

Morphism conjugate(const Morphism &f) {
    return Morphism(f.dom(), f.cod(), f.matrix().conjugate());
}

Morphism scalar(Complex value) {
    Matrix m(1, 1);
    m(0, 0) = value;
    return Morphism({}, {}, std::move(m));
}

Morphism zero(const TensorType &dom, const TensorType &cod) {
    return Morphism(dom, cod, Matrix::Zero(cod.dim(), dom.dim()));
}

Morphism ket(std::size_t d, std::size_t i) {
    if (i >= d) {
        throw std::out_of_range("basis index out of range");
    }
    Matrix m = Matrix::Zero(d, 1);
    m(i, 0) = 1;
    return Morphism({}, {d}, std::move(m));
}

Morphism bra(std::size_t d, std::size_t i) {
    return dagger(ket(d, i));
}

Morphism cup(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("cup dimension must be >= 1");
    }
    Matrix m = Matrix::Zero(d * d, 1);
    for (std::size_t i = 0; i < d; i++) {
        m(i * d + i, 0) = 1;
    }
    return Morphism({}, {d, d}, std::move(m));
}

Morphism cap(std::size_t d) {
    return dagger(cup(d));
}

Morphism partial_trace(const Morphism &f, std::span<const std::size_t> factor_indices) {
    std::vector<bool> traced_dom(f.dom().rank(), false);
    std::vector<bool> traced_cod(f.cod().rank(), false);
    for (auto k : factor_indices) {
        if (k >= f.dom().rank() || k >= f.cod().rank()) {
            throw std::out_of_range("partial trace factor index " + std::to_string(k) + " out of range");
        }
        if (f.dom().factors()[k] != f.cod().factors()[k]) {
            throw TypeMismatch("partial trace over factor " + std::to_string(k) +
                               " with different dom/cod dimensions");
        }
        if (traced_dom[k]) {
            throw std::invalid_argument("partial trace factor listed twice");
        }
        traced_dom[k] = traced_cod[k] = true;
    }
    std::vector<std::size_t> keep_dom;
    std::vector<std::size_t> keep_cod;
    for (std::size_t k = 0; k < f.dom().rank(); k++) {
        if (!traced_dom[k]) {
            keep_dom.push_back(f.dom().factors()[k]);
        }
    }
    for (std::size_t k = 0; k < f.cod().rank(); k++) {
        if (!traced_cod[k]) {
            keep_cod.push_back(f.cod().factors()[k]);
        }
    }
    TensorType out_dom(keep_dom);
    TensorType out_cod(keep_cod);
    Matrix m = Matrix::Zero(out_cod.dim(), out_dom.dim());
    std::vector<std::size_t> reduced_r;
    std::vector<std::size_t> reduced_c;
    for (std::size_t r = 0; r < f.cod().dim(); r++) {
        auto dr = f.cod().digits(r);
        for (std::size_t c = 0; c < f.dom().dim(); c++) {
            auto dc = f.dom().digits(c);
            bool diagonal = true;
            for (auto k : factor_indices) {
                if (dr[k] != dc[k]) {
                    diagonal = false;
                    break;
                }
            }
            if (!diagonal) {
                continue;
            }
            reduced_r.clear();
            reduced_c.clear();
            for (std::size_t k = 0; k < dr.size(); k++) {
                if (!traced_cod[k]) {
                    reduced_r.push_back(dr[k]);
                }
            }
            for (std::size_t k = 0; k < dc.size(); k++) {
                if (!traced_dom[k]) {
                    reduced_c.push_back(dc[k]);
                }
            }
            m(out_cod.index(reduced_r), out_dom.index(reduced_c)) += f.matrix()(r, c);
        }
    }
    return Morphism(out_dom, out_cod, std::move(m));
}

Comparison approx_eq(const Morphism &f, const Morphism &g, const Tolerance &tol) {
    require_parallel(f, g, "comparison");
    Matrix diff = f.matrix() - g.matrix();
    Comparison out;
    out.residual = diff.norm();
    out.threshold = tol.absolute + tol.relative * std::max(f.norm(), g.norm());
    out.holds = out.residual <= out.threshold;
    if (!out.holds) {
        for (Eigen::Index c = 0; c < diff.cols(); c++) {
            if (diff.col(c).norm() > out.threshold) {
                out.witnesses.push_back(static_cast<std::size_t>(c));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// FinSetObject / SetType

FinSetObject::FinSetObject(std::initializer_list<std::string> labels)
    : FinSetObject(std::vector<std::string>(labels)) {
}

FinSetObject::FinSetObject(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
        throw std::invalid_argument("finite set labels must be pairwise distinct");
    }
}

FinSetObject FinSetObject::numbered(std::size_t n, const std::string &prefix) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; k++) {
        labels.push_back(prefix + std::to_string(k));
    }
    return FinSetObject(std::move(labels));
}

std::size_t FinSetObject::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::out_of_range("no element labelled '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

SetType::SetType(std::initializer_list<FinSetObject> factors) : factors_(factors) {
}

SetType::SetType(std::vector<FinSetObject> factors) : factors_(std::move(factors)) {
}

std::size_t SetType::size() const {
    std::size_t n = 1;
    for (const auto &f : factors_) {
        n *= f.size();
    }
    return n;
}

SetType SetType::operator*(const SetType &other) const {
    auto f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return SetType(std::move(f));
}

std::vector<std::size_t> SetType::digits(std::size_t index) const {
    std::vector<std::size_t> out(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        out[k] = index % factors_[k].size();
        index /= factors_[k].size();
    }
    return out;
}

std::size_t SetType::index(std::span<const std::size_t> digits) const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < factors_.size(); k++) {
        r = r * factors_[k].size() + digits[k];
    }
    return r;
}

std::string SetType::label(std::size_t index) const {
    auto d = digits(index);
    std::string s = "(";
    for (std::size_t k = 0; k < d.size(); k++) {
        if (k) {
            s += ",";
        }
        s += factors_[k].labels()[d[k]];
    }
    return s + ")";
}

std::string SetType::str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < factors_.size(); k++) {
        if (k) {
            s += " x ";
        }
        s += std::to_string(factors_[k].size());
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// FinFunction

FinFunction::FinFunction(SetType dom, SetType cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size()) {
        throw TypeMismatch("function table is not total on its domain " + dom_.str());
    }
    auto n = cod_.size();
    for (auto y : table_) {
        if (y >= n) {
            throw std::out_of_range("function image outside codomain " + cod_.str());
        }
    }
}

FinFunction FinFunction::tabulate(
    SetType dom, SetType cod,
    const std::function<std::vector<std::size_t>(const std::vector<std::size_t> &)> &fn) {
    std::vector<std::size_t> table(dom.size());
    for (std::size_t x = 0; x < table.size(); x++) {
        auto y = fn(dom.digits(x));
        if (y.size() != cod.rank()) {
            throw TypeMismatch("tabulated function returned the wrong number of coordinates");
        }
        for (std::size_t k = 0; k < y.size(); k++) {
            if (y[k] >= cod.factors()[k].size()) {
                throw std::out_of_range("tabulated coordinate outside codomain");
            }
        }
        table[x] = cod.index(y);
    }
    return FinFunction(std::move(dom), std::move(cod), std::move(table));
}

std::ostream &operator<<(std::ostream &out, const FinFunction &f) {
    for (std::size_t x = 0; x < f.table().size(); x++) {
        out << f.dom().label(x) << " -> " << f.cod().label(f(x)) << "\n";
    }
    return out;
}

FinFunction compose(const FinFunction &g, const FinFunction &f) {
    if (f.cod() != g.dom()) {
        throw TypeMismatch("cannot compose: codomain " + f.cod().str() + " of the first map does not match domain " +
                           g.dom().str() + " of the second");
    }
    std::vector<std::size_t> table(f.table().size());
    for (std::size_t x = 0; x < table.size(); x++) {
        table[x] = g(f(x));
    }
    return FinFunction(f.dom(), g.cod(), std::move(table));
}

FinFunction tensor(const FinFunction &f, const FinFunction &g) {
    std::size_t nf = f.dom().size();
    std::size_t ng = g.dom().size();
    std::size_t mg = g.cod().size();
    std::vector<std::size_t> table(nf * ng);
    for (std::size_t a = 0; a < nf; a++) {
        for (std::size_t b = 0; b < ng; b++) {
            table[a * ng + b] = f(a) * mg + g(b);
        }
    }
    return FinFunction(f.dom() * g.dom(), f.cod() * g.cod(), std::move(table));
}

FinFunction identity(const SetType &t) {
    std::vector<std::size_t> table(t.size());
    std::iota(table.begin(), table.end(), std::size_t{0});
    return FinFunction(t, t, std::move(table));
}

FinFunction compose_tensor_id(const FinFunction &f, const SetType &t, const FinFunction &x) {
    return compose(tensor(f, identity(t)), x);
}

FinFunction compose_id_tensor(const SetType &t, const FinFunction &f, const FinFunction &x) {
    return compose(tensor(identity(t), f), x);
}

FinFunction swap(const SetType &a, const SetType &b) {
    std::size_t na = a.size();
    std::size_t nb = b.size();
    std::vector<std::size_t> table(na * nb);
    for (std::size_t x = 0; x < na; x++) {
        for (std::size_t y = 0; y < nb; y++) {
            table[x * nb + y] = y * na + x;
        }
    }
    return FinFunction(a * b, b * a, std::move(table));
}

FinFunction pair(const FinFunction &f, const FinFunction &g) {
    if (f.dom() != g.dom()) {
        throw TypeMismatch("pairing needs a common domain");
    }
    std::size_t mg = g.cod().size();
    std::vector<std::size_t> table(f.dom().size());
    for (std::size_t x = 0; x < table.size(); x++) {
        table[x] = f(x) * mg + g(x);
    }
    return FinFunction(f.dom(), f.cod() * g.cod(), std::move(table));
}

FinFunction project_first(const SetType &a, const SetType &b) {
    std::size_t nb = b.size();
    std::vector<std::size_t> table(a.size() * nb);
    for (std::size_t x = 0; x < table.size(); x++) {
        table[x] = x / nb;
    }
    return FinFunction(a * b, a, std::move(table));
}

FinFunction project_second(const SetType &a, const SetType &b) {
    std::size_t nb = b.size();
    std::vector<std::size_t> table(a.size() * nb);
    for (std::size_t x = 0; x < table.size(); x++) {
        table[x] = x % nb;
    }
    return FinFunction(a * b, b, std::move(table));
}

FinFunction diagonal(const SetType &v) {
    return pair(identity(v), identity(v));
}

FinFunction discard(const SetType &v) {
    return FinFunction(v, SetType{}, std::vector<std::size_t>(v.size(), 0));
}

FinFunction element(const SetType &v, std::size_t x) {
    if (x >= v.size()) {
        throw std::out_of_range("element index outside set");
    }
    return FinFunction(SetType{}, v, {x});
}

Comparison compare(const FinFunction &f, const FinFunction &g, const Tolerance &) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
        throw TypeMismatch("comparison of non-parallel functions " + f.dom().str() + " -> " + f.cod().str() +
                           " and " + g.dom().str() + " -> " + g.cod().str());
    }
    Comparison out;
    for (std::size_t x = 0; x < f.table().size(); x++) {
        if (f(x) != g(x)) {
            out.witnesses.push_back(x);
        }
    }
    out.residual = static_cast<double>(out.witnesses.size());
    out.threshold = 0;
    out.holds = out.witnesses.empty();
    return out;
}

}  // namespace updstruct
