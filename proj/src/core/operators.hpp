// Copyright 2026 the rcheom developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RCHEOM_CORE_OPERATORS_HPP
#define RCHEOM_CORE_OPERATORS_HPP

#include <vector>

#include "core/types.hpp"

namespace rcheom {

// Square complex operator. Dense storage up to dim 16, sparse above; the
// switch is transparent to callers, both representations are always
// obtainable.
class ComplexOperator {
public:
    static constexpr int kDenseLimit = 16;

    ComplexOperator() = default;
    explicit ComplexOperator(const DenseMat& m);
    explicit ComplexOperator(const SpMat& m);
    static ComplexOperator identity(int dim);
    static ComplexOperator zero(int dim);
    static ComplexOperator from_triplets(int dim, const std::vector<Triplet>& ts);

    int dim() const { return dim_; }
    bool is_sparse_backed() const { return sparse_backed_; }

    const SpMat& sparse() const;
    DenseMat dense() const;

    cplx coeff(int i, int j) const;
    cplx trace() const;
    double norm_max() const;           // max_{ij} |A_ij|
    bool is_hermitian(double tol = 1e-12) const;

    ComplexOperator adjoint() const;
    ComplexOperator transpose() const;

    ComplexOperator operator+(const ComplexOperator& o) const;
    ComplexOperator operator-(const ComplexOperator& o) const;
    ComplexOperator operator*(const ComplexOperator& o) const;
    ComplexOperator operator*(cplx s) const;

    DenseVec apply(const DenseVec& v) const;

private:
    int dim_ = 0;
    bool sparse_backed_ = false;
    DenseMat dense_;
    mutable SpMat sparse_;             // cache when dense-backed
    mutable bool sparse_valid_ = false;
};

// Kronecker product, a's index slowest.
ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b);

// Jordan-Wigner annihilator for `mode` out of `total_modes`. Mode 0 is the
// slowest index of the tensor basis; the sign string runs over modes below
// the target, so the occupation basis vector |n_0 ... n_{M-1}> equals the
// ordered creation monomial c!_{k_1} ... c!_{k_m} |0> (k ascending) with no
// extra sign.
ComplexOperator fermion_annihilator(int mode, int total_modes);

// Truncated Fock-space annihilator, a|n> = sqrt(n)|n-1>.
ComplexOperator boson_annihilator(int cutoff);

// Superoperator on column-stacked operators: action is a dim^2 x dim^2
// sparse matrix with vec(X) laid out column-major.
struct SuperOperator {
    int dim = 0;
    SpMat action;
};

SuperOperator left_mult(const ComplexOperator& a);   // vec(a X)
SuperOperator right_mult(const ComplexOperator& a);  // vec(X a)
SuperOperator commutator_super(const ComplexOperator& h); // vec(-i[h, X])

// Sparse building blocks used by the hierarchy assembly.
SpMat spre(const SpMat& a);   // I (x) a
SpMat spost(const SpMat& a);  // a^T (x) I

DenseVec vec(const DenseMat& m);
DenseMat unvec(const DenseVec& v, int dim);

} // namespace rcheom

#endif
