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

#ifndef UPDSTRUCT_CATEGORY_HPP
#define UPDSTRUCT_CATEGORY_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

/// Two concrete monoidal backends: finite sets with total functions
/// (cartesian) and complex matrices between tensor-factored spaces
/// (dagger-compact). Everything here is an immutable value.
namespace updstruct {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Raised when two boundaries that must agree do not.
struct TypeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Comparison tolerance: `|f - g| <= absolute + relative * max(|f|, |g|)`.
struct Tolerance {
    double absolute = 1e-9;
    double relative = 1e-9;

    static Tolerance uniform(double t) { return Tolerance{t, t}; }
    void validate() const;
};

/// Outcome of comparing two parallel morphisms.
///
/// `witnesses` lists the flat input indices (basis vectors, or tuples of set
/// elements) on which the two sides disagree beyond the threshold.
struct Comparison {
    bool holds = false;
    double residual = 0;
    double threshold = 0;
    std::vector<std::size_t> witnesses;
};

// ---------------------------------------------------------------------------
// Linear backend.

/// Ordered list of wire dimensions. The empty list is the monoidal unit.
class TensorType {
   public:
    TensorType() = default;
    TensorType(std::initializer_list<std::size_t> factors);
    explicit TensorType(std::vector<std::size_t> factors);

    const std::vector<std::size_t> &factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::size_t dim() const;
    bool is_unit() const { return factors_.empty(); }

    /// `this (x) other`.
    TensorType operator*(const TensorType &other) const;
    bool operator==(const TensorType &) const = default;

    /// Mixed-radix digits of a flat basis index, leftmost factor most significant.
    std::vector<std::size_t> digits(std::size_t index) const;
    std::size_t index(std::span<const std::size_t> digits) const;

    std::string str() const;

   private:
    std::vector<std::size_t> factors_;
};

/// A complex matrix of shape cod.dim() x dom.dim() with typed boundaries.
class Morphism {
   public:
    Morphism(TensorType dom, TensorType cod, Matrix entries);

    const TensorType &dom() const { return dom_; }
    const TensorType &cod() const { return cod_; }
    const Matrix &matrix() const { return m_; }

    Morphism operator+(const Morphism &other) const;
    Morphism operator-(const Morphism &other) const;
    Morphism operator*(Complex scalar) const;

    double norm() const { return m_.norm(); }

   private:
    TensorType dom_;
    TensorType cod_;
    Matrix m_;
};

std::ostream &operator<<(std::ostream &out, const TensorType &t);
std::ostream &operator<<(std::ostream &out, const Morphism &f);

/// `g . f`; throws TypeMismatch unless f.cod() == g.dom() factorwise.
Morphism compose(const Morphism &g, const Morphism &f);
/// Composes right to left: `compose_chain({h, g, f}) == h . g . f`.
Morphism compose_chain(std::initializer_list<Morphism> chain);
/// Kronecker product; factor lists concatenate.
Morphism tensor(const Morphism &f, const Morphism &g);
/// `(f (x) id_t) . x` without forming the Kronecker product.
Morphism compose_tensor_id(const Morphism &f, const TensorType &t, const Morphism &x);
/// `(id_t (x) f) . x` without forming the Kronecker product.
Morphism compose_id_tensor(const TensorType &t, const Morphism &f, const Morphism &x);
Morphism identity(const TensorType &t);
/// Exchanges the `a` block and the `b` block: `|x>|y> -> |y>|x>`.
Morphism swap(const TensorType &a, const TensorType &b);
/// Reorders factors: output factor k is input factor `order[k]`.
Morphism permute(const TensorType &t, std::span<const std::size_t> order);
Morphism dagger(const Morphism &f);
Morphism conjugate(const Morphism &f);
Morphism scalar(Complex value);
Morphism zero(const TensorType &dom, const TensorType &cod);
/// `|i>` as a morphism I -> [d].
Morphism ket(std::size_t d, std::size_t i);
/// `<i|` as a morphism [d] -> I.
Morphism bra(std::size_t d, std::size_t i);
/// `sum_i |ii>` : I -> [d, d].
Morphism cup(std::size_t d);
/// `dagger(cup(d))`.
Morphism cap(std::size_t d);
/// Traces out the factors at `factor_indices`, which must sit at the same
/// positions with the same dimensions in both dom and cod.
Morphism partial_trace(const Morphism &f, std::span<const std::size_t> factor_indices);

Comparison approx_eq(const Morphism &f, const Morphism &g, const Tolerance &tol = {});
/// Alias used by the generic law checkers.
inline Comparison compare(const Morphism &f, const Morphism &g, const Tolerance &tol) {
    return approx_eq(f, g, tol);
}

// ---------------------------------------------------------------------------
// Cartesian backend.

/// A finite set of distinct labels. May be empty.
class FinSetObject {
   public:
    FinSetObject() = default;
    FinSetObject(std::initializer_list<std::string> labels);
    explicit FinSetObject(std::vector<std::string> labels);
    /// `{prefix0, prefix1, ...}`.
    static FinSetObject numbered(std::size_t n, const std::string &prefix = "");

    const std::vector<std::string> &labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t index_of(const std::string &label) const;
    bool operator==(const FinSetObject &) const = default;

   private:
    std::vector<std::string> labels_;
};

/// Ordered cartesian product of finite sets; the empty product is the
/// one-point set (the monoidal unit).
class SetType {
   public:
    SetType() = default;
    SetType(std::initializer_list<FinSetObject> factors);
    explicit SetType(std::vector<FinSetObject> factors);

    const std::vector<FinSetObject> &factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::size_t size() const;
    bool is_unit() const { return factors_.empty(); }

    SetType operator*(const SetType &other) const;
    bool operator==(const SetType &) const = default;

    std::vector<std::size_t> digits(std::size_t index) const;
    std::size_t index(std::span<const std::size_t> digits) const;
    /// `(a,b)` style label of a flat element index.
    std::string label(std::size_t index) const;
    std::string str() const;

   private:
    std::vector<FinSetObject> factors_;
};

/// A total function between finite products, stored as a table of flat indices.
class FinFunction {
   public:
    FinFunction(SetType dom, SetType cod, std::vector<std::size_t> table);

    /// Builds the table from a function on element coordinates.
    static FinFunction tabulate(
        SetType dom, SetType cod,
        const std::function<std::vector<std::size_t>(const std::vector<std::size_t> &)> &fn);

    const SetType &dom() const { return dom_; }
    const SetType &cod() const { return cod_; }
    const std::vector<std::size_t> &table() const { return table_; }
    std::size_t operator()(std::size_t x) const { return table_[x]; }

    bool operator==(const FinFunction &) const = default;

   private:
    SetType dom_;
    SetType cod_;
    std::vector<std::size_t> table_;
};

std::ostream &operator<<(std::ostream &out, const FinFunction &f);

FinFunction compose(const FinFunction &g, const FinFunction &f);
/// Cartesian product of maps `f x g`.
FinFunction tensor(const FinFunction &f, const FinFunction &g);
FinFunction identity(const SetType &t);
FinFunction compose_tensor_id(const FinFunction &f, const SetType &t, const FinFunction &x);
FinFunction compose_id_tensor(const SetType &t, const FinFunction &f, const FinFunction &x);
FinFunction swap(const SetType &a, const SetType &b);
/// `<f, g> : A -> B x C`.
FinFunction pair(const FinFunction &f, const FinFunction &g);
/// Projection of `a x b` onto its first block.
FinFunction project_first(const SetType &a, const SetType &b);
/// Projection of `a x b` onto its second block.
FinFunction project_second(const SetType &a, const SetType &b);
/// `v -> (v, v)`.
FinFunction diagonal(const SetType &v);
/// The unique map to the one-point set.
FinFunction discard(const SetType &v);
/// The map from the one-point set picking element `x`.
FinFunction element(const SetType &v, std::size_t x);

/// Residual is the number of inputs where the tables differ; exact.
Comparison compare(const FinFunction &f, const FinFunction &g, const Tolerance &tol = {});

}  // namespace updstruct

#endif
