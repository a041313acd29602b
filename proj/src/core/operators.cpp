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

#include "core/operators.hpp"

#include <bit>
#include <cmath>

namespace rcheom {

ComplexOperator::ComplexOperator(const DenseMat& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw config_error("ComplexOperator: matrix must be square, dim >= 1");
    dim_ = static_cast<int>(m.rows());
    if (dim_ <= kDenseLimit) {
        dense_ = m;
        sparse_backed_ = false;
    } else {
        sparse_ = m.sparseView();
        sparse_valid_ = true;
        sparse_backed_ = true;
    }
}

ComplexOperator::ComplexOperator(const SpMat& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw config_error("ComplexOperator: matrix must be square, dim >= 1");
    dim_ = static_cast<int>(m.rows());
    if (dim_ <= kDenseLimit) {
        dense_ = DenseMat(m);
        sparse_backed_ = false;
    } else {
        sparse_ = m;
        sparse_valid_ = true;
        sparse_backed_ = true;
    }
}

ComplexOperator ComplexOperator::identity(int dim) {
    SpMat id(dim, dim);
    id.setIdentity();
    return ComplexOperator(id);
}

ComplexOperator ComplexOperator::zero(int dim) {
    return ComplexOperator(SpMat(dim, dim));
}

ComplexOperator ComplexOperator::from_triplets(int dim, const std::vector<Triplet>& ts) {
    SpMat m(dim, dim);
    m.setFromTriplets(ts.begin(), ts.end());
    return ComplexOperator(m);
}

const SpMat& ComplexOperator::sparse() const {
    if (!sparse_valid_) {
        sparse_ = dense_.sparseView();
        sparse_valid_ = true;
    }
    return sparse_;
}

DenseMat ComplexOperator::dense() const {
    if (sparse_backed_) return DenseMat(sparse_);
    return dense_;
}

cplx ComplexOperator::coeff(int i, int j) const {
    if (sparse_backed_) return sparse_.coeff(i, j);
    return dense_(i, j);
}

cplx ComplexOperator::trace() const {
    if (sparse_backed_) {
        cplx t = 0;
        for (int k = 0; k < sparse_.outerSize(); ++k)
            for (SpMat::InnerIterator it(sparse_, k); it; ++it)
                if (it.row() == it.col()) t += it.value();
        return t;
    }
    return dense_.trace();
}

double ComplexOperator::norm_max() const {
    double m = 0;
    if (sparse_backed_) {
        for (int k = 0; k < sparse_.outerSize(); ++k)
            for (SpMat::InnerIterator it(sparse_, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
    } else {
        m = dense_.cwiseAbs().maxCoeff();
    }
    return m;
}

bool ComplexOperator::is_hermitian(double tol) const {
    ComplexOperator diff = *this - adjoint();
    return diff.norm_max() <= tol;
}

ComplexOperator ComplexOperator::adjoint() const {
    if (sparse_backed_) return ComplexOperator(SpMat(sparse_.adjoint()));
    return ComplexOperator(DenseMat(dense_.adjoint()));
}

ComplexOperator ComplexOperator::transpose() const {
    if (sparse_backed_) return ComplexOperator(SpMat(sparse_.transpose()));
    return ComplexOperator(DenseMat(dense_.transpose()));
}

ComplexOperator ComplexOperator::operator+(const ComplexOperator& o) const {
    if (dim_ != o.dim_) throw config_error("operator dimension mismatch in +");
    if (sparse_backed_ || o.sparse_backed_) return ComplexOperator(SpMat(sparse() + o.sparse()));
    return ComplexOperator(DenseMat(dense_ + o.dense_));
}

ComplexOperator ComplexOperator::operator-(const ComplexOperator& o) const {
    if (dim_ != o.dim_) throw config_error("operator dimension mismatch in -");
    if (sparse_backed_ || o.sparse_backed_) return ComplexOperator(SpMat(sparse() - o.sparse()));
    return ComplexOperator(DenseMat(dense_ - o.dense_));
}

ComplexOperator ComplexOperator::operator*(const ComplexOperator& o) const {
    if (dim_ != o.dim_) throw config_error("operator dimension mismatch in *");
    if (sparse_backed_ || o.sparse_backed_) return ComplexOperator(SpMat(sparse() * o.sparse()));
    return ComplexOperator(DenseMat(dense_ * o.dense_));
}

ComplexOperator ComplexOperator::operator*(cplx s) const {
    if (sparse_backed_) return ComplexOperator(SpMat(sparse_ * s));
    return ComplexOperator(DenseMat(dense_ * s));
}

DenseVec ComplexOperator::apply(const DenseVec& v) const {
    if (sparse_backed_) return sparse_ * v;
    return dense_ * v;
}

ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b) {
    const int da = a.dim(), db = b.dim();
    const SpMat& A = a.sparse();
    const SpMat& B = b.sparse();
    std::vector<Triplet> ts;
    ts.reserve(static_cast<size_t>(A.nonZeros()) * B.nonZeros());
    for (int ka = 0; ka < A.outerSize(); ++ka)
        for (SpMat::InnerIterator ia(A, ka); ia; ++ia)
            for (int kb = 0; kb < B.outerSize(); ++kb)
                for (SpMat::InnerIterator ib(B, kb); ib; ++ib)
                    ts.emplace_back(ia.row() * db + ib.row(),
                                    ia.col() * db + ib.col(),
                                    ia.value() * ib.value());
    return ComplexOperator::from_triplets(da * db, ts);
}

ComplexOperator fermion_annihilator(int mode, int total_modes) {
    if (total_modes < 1 || mode < 0 || mode >= total_modes)
        throw config_error("fermion_annihilator: mode out of range");
    const int dim = 1 << total_modes;
    const unsigned bit = 1u << (total_modes - 1 - mode);
    std::vector<Triplet> ts;
    ts.reserve(dim / 2);
    for (unsigned b = 0; b < static_cast<unsigned>(dim); ++b) {
        if (!(b & bit)) continue;
        // modes strictly below `mode` sit at higher bit positions
        const unsigned above = b >> (total_modes - mode);
        const double sign = (std::popcount(above) % 2 == 0) ? 1.0 : -1.0;
        ts.emplace_back(static_cast<int>(b & ~bit), static_cast<int>(b), cplx(sign, 0.0));
    }
    return ComplexOperator::from_triplets(dim, ts);
}

ComplexOperator boson_annihilator(int cutoff) {
    if (cutoff < 2) throw config_error("boson_annihilator: cutoff < 2");
    std::vector<Triplet> ts;
    for (int n = 1; n < cutoff; ++n)
        ts.emplace_back(n - 1, n, cplx(std::sqrt(double(n)), 0.0));
    return ComplexOperator::from_triplets(cutoff, ts);
}

SpMat spre(const SpMat& a) {
    const int d = static_cast<int>(a.rows());
    std::vector<Triplet> ts;
    ts.reserve(static_cast<size_t>(a.nonZeros()) * d);
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            for (int j = 0; j < d; ++j)
                ts.emplace_back(j * d + it.row(), j * d + it.col(), it.value());
    SpMat m(d * d, d * d);
    m.setFromTriplets(ts.begin(), ts.end());
    return m;
}

SpMat spost(const SpMat& a) {
    const int d = static_cast<int>(a.rows());
    std::vector<Triplet> ts;
    ts.reserve(static_cast<size_t>(a.nonZeros()) * d);
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            for (int i = 0; i < d; ++i)
                ts.emplace_back(it.col() * d + i, it.row() * d + i, it.value());
    SpMat m(d * d, d * d);
    m.setFromTriplets(ts.begin(), ts.end());
    return m;
}

SuperOperator left_mult(const ComplexOperator& a) {
    return SuperOperator{a.dim(), spre(a.sparse())};
}

SuperOperator right_mult(const ComplexOperator& a) {
    return SuperOperator{a.dim(), spost(a.sparse())};
}

SuperOperator commutator_super(const ComplexOperator& h) {
    SpMat m = spre(h.sparse()) - spost(h.sparse());
    return SuperOperator{h.dim(), SpMat(m * (-IM))};
}

DenseVec vec(const DenseMat& m) {
    return Eigen::Map<const DenseVec>(m.data(), m.size());
}

DenseMat unvec(const DenseVec& v, int dim) {
    return Eigen::Map<const DenseMat>(v.data(), dim, dim);
}

} // namespace rcheom
