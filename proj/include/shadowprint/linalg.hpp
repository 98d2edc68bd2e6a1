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

#pragma once

/**
 * @file
 * Dense complex linear algebra for systems of at most three qubits: matrices,
 * Pauli operators, and density matrices.
 *
 * Tensor-order convention: qubit 0 is the leftmost tensor factor and the
 * most-significant bit of a computational-basis index. Pauli labels follow the
 * same order, so character 0 of "XZ" acts on qubit 0.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadowprint {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 3;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; throws InvalidInput if the count does not match or
    /// any entry is non-finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    /// Column vector with a single 1 at `index`.
    static ComplexMatrix basis_ket(std::size_t dim, std::size_t index);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

/// Kronecker product; dimensions multiply.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate_transpose(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
/// max_{i,j} |a_ij - b_ij|; dimensions must match.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
bool all_finite(const ComplexMatrix& a) noexcept;

/// Single-qubit Pauli matrix for 'I', 'X', 'Y' or 'Z'.
ComplexMatrix pauli_matrix(char symbol);

/// A Pauli observable label over {I, X, Y, Z}.
class PauliString {
public:
    /// Throws InvalidInput for an empty label, a label longer than kMaxQubits,
    /// or any character outside {I, X, Y, Z}.
    explicit PauliString(std::string_view label);

    const std::string& label() const noexcept { return label_; }
    std::size_t num_qubits() const noexcept { return label_.size(); }
    char operator[](std::size_t qubit) const { return label_[qubit]; }
    bool is_identity() const noexcept;
    /// Same operators with the qubit order reversed ("XZ" -> "ZX").
    PauliString reversed() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    std::string label_;
};

/// Ordered tensor product of the per-qubit Pauli matrices.
ComplexMatrix pauli_string_matrix(const PauliString& p);

/// Hermitian, unit-trace, positive semidefinite 2^n x 2^n matrix.
class DensityMatrix {
public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kPsdTolerance = 1e-10;

    /// |0...0><0...0| on n qubits.
    static DensityMatrix ground(std::size_t num_qubits);
    /// |psi><psi| for a column vector of length 2^n; throws if not normalized.
    static DensityMatrix from_ket(const ComplexMatrix& ket);
    /// Wraps `m` after checking shape, Hermiticity and trace. PSD is only
    /// checked through the diagonal (a necessary condition).
    static DensityMatrix from_matrix(ComplexMatrix m);
    /// Wraps without validation. For the channel/gate pipeline where the
    /// invariants hold by construction.
    static DensityMatrix unchecked(std::size_t num_qubits, ComplexMatrix m);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

    /// tr(rho^2).
    double purity() const;

private:
    DensityMatrix(std::size_t num_qubits, ComplexMatrix m) : num_qubits_(num_qubits), matrix_(std::move(m)) {}

    std::size_t num_qubits_ = 0;
    ComplexMatrix matrix_;
};

/// Lifts a 2x2 operator to act on `qubit` of an n-qubit register.
ComplexMatrix embed_single_qubit(const ComplexMatrix& op, std::size_t qubit, std::size_t num_qubits);

/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary);

}  // namespace shadowprint
