// Copyright 2026 The shadowprint Authors
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

#include "shadowprint/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "shadowprint/error.hpp"

namespace shadowprint {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw InvalidInput("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    if (!all_finite(*this)) {
        throw InvalidInput("matrix contains non-finite entries");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw InvalidInput("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::basis_ket(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InvalidInput("basis index out of range");
    }
    ComplexMatrix m(dim, 1);
    m(index, 0) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidInput("dimension mismatch in matrix addition");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidInput("dimension mismatch in matrix subtraction");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& v : data_) {
        v *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InvalidInput("dimension mismatch in matrix product");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw InvalidInput("trace of a non-square matrix");
    }
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput("dimension mismatch in matrix comparison");
    }
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

bool all_finite(const ComplexMatrix& a) noexcept {
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix pauli_matrix(char symbol) {
    using namespace std::complex_literals;
    switch (symbol) {
        case 'I':
            return {{1.0, 0.0}, {0.0, 1.0}};
        case 'X':
            return {{0.0, 1.0}, {1.0, 0.0}};
        case 'Y':
            return {{0.0, -1.0i}, {1.0i, 0.0}};
        case 'Z':
            return {{1.0, 0.0}, {0.0, -1.0}};
        default:
            throw InvalidInput(std::string("invalid Pauli symbol '") + symbol + "'");
    }
}

PauliString::PauliString(std::string_view label) : label_(label) {
    if (label_.empty()) {
        throw InvalidInput("empty Pauli label");
    }
    if (label_.size() > kMaxQubits) {
        throw InvalidInput("Pauli label '" + label_ + "' exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    for (char c : label_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw InvalidInput("invalid character in Pauli label '" + label_ + "'");
        }
    }
}

bool PauliString::is_identity() const noexcept {
    return std::all_of(label_.begin(), label_.end(), [](char c) { return c == 'I'; });
}

PauliString PauliString::reversed() const { return PauliString(std::string(label_.rbegin(), label_.rend())); }

ComplexMatrix pauli_string_matrix(const PauliString& p) {
    ComplexMatrix out = pauli_matrix(p[0]);
    for (std::size_t q = 1; q < p.num_qubits(); ++q) {
        out = tensor_product(out, pauli_matrix(p[q]));
    }
    return out;
}

namespace {

std::size_t qubits_for_dim(std::size_t dim) {
    for (std::size_t n = 1; n <= kMaxQubits; ++n) {
        if (dim == (std::size_t{1} << n)) {
            return n;
        }
    }
    throw InvalidInput("dimension " + std::to_string(dim) + " is not 2^n for 1 <= n <= " +
                       std::to_string(kMaxQubits));
}

}  // namespace

DensityMatrix DensityMatrix::ground(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw InvalidInput("unsupported qubit count " + std::to_string(num_qubits));
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix m(dim, dim);
    m(0, 0) = 1.0;
    return DensityMatrix(num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::from_ket(const ComplexMatrix& ket) {
    if (ket.cols() != 1) {
        throw InvalidInput("ket must be a column vector");
    }
    const std::size_t n = qubits_for_dim(ket.rows());
    double norm2 = 0.0;
    for (const auto& a : ket.entries()) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kTraceTolerance) {
        throw InvalidInput("ket is not normalized");
    }
    return DensityMatrix(n, ket * conjugate_transpose(ket));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (!m.is_square()) {
        throw InvalidInput("density matrix must be square");
    }
    const std::size_t n = qubits_for_dim(m.rows());
    if (!all_finite(m)) {
        throw InvalidInput("density matrix contains non-finite entries");
    }
    if (max_abs_difference(m, conjugate_transpose(m)) > kHermitianTolerance) {
        throw InvalidInput("density matrix is not Hermitian");
    }
    if (std::abs(trace(m) - Complex{1.0}) > kTraceTolerance) {
        throw InvalidInput("density matrix does not have unit trace");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i).real() < -kPsdTolerance) {
            throw InvalidInput("density matrix has a negative diagonal entry");
        }
    }
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::unchecked(std::size_t num_qubits, ComplexMatrix m) {
    return DensityMatrix(num_qubits, std::move(m));
}

double DensityMatrix::purity() const { return trace(matrix_ * matrix_).real(); }

ComplexMatrix embed_single_qubit(const ComplexMatrix& op, std::size_t qubit, std::size_t num_qubits) {
    if (qubit >= num_qubits) {
        throw InvalidInput("qubit index " + std::to_string(qubit) + " out of range for " +
                           std::to_string(num_qubits) + " qubits");
    }
    if (op.rows() != 2 || op.cols() != 2) {
        throw InvalidInput("single-qubit operator must be 2x2");
    }
    ComplexMatrix out = qubit == 0 ? op : ComplexMatrix::identity(2);
    for (std::size_t q = 1; q < num_qubits; ++q) {
        out = tensor_product(out, q == qubit ? op : ComplexMatrix::identity(2));
    }
    return out;
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary) {
    if (unitary.rows() != rho.dim() || unitary.cols() != rho.dim()) {
        throw InvalidInput("operator dimension does not match the state");
    }
    return DensityMatrix::unchecked(rho.num_qubits(), unitary * rho.matrix() * conjugate_transpose(unitary));
}

}  // namespace shadowprint
