/**
 * @file tensor_oracle.hpp
 * @brief Brute-force operators on (C^d)^{⊗n}: permutation operators, the
 * partial transpose on the last factor, span dimensions and the averaged
 * matrix operators E_ij.
 *
 * Basis index of e_{i_1}⊗...⊗e_{i_n} is Σ_k (i_k - 1) d^{n-k}: factor 1 is the
 * most significant digit, so the partial transpose acts on the least
 * significant one.
 */

#pragma once

#include "ptalg/algebra.hpp"
#include "ptalg/projectors.hpp"
#include "ptalg/young.hpp"

#include <Eigen/Sparse>

#include <vector>

namespace ptalg {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// d^n above this is refused. Reads PTALG_ORACLE_CAP, default 4096.
long long default_oracle_cap();

/// d^n, throwing std::length_error when it exceeds cap.
long long checked_tensor_dimension(int n, int d, long long cap);

struct TensorOp {
    int n = 0;
    int d = 0;
    SparseMatrix matrix;
};

/// V(σ) e_{i_1}⊗...⊗e_{i_n} = e_{i_{σ^{-1}(1)}}⊗...⊗e_{i_{σ^{-1}(n)}}.
TensorOp perm_operator(const Permutation &sigma, int d, long long cap = default_oracle_cap());

/// ((I,i),(J,j)) ↦ ((I,j),(J,i)) on the last factor.
TensorOp partial_transpose_last(const TensorOp &op);

/// Numerical rank of the Gram matrix tr(A^† B), threshold 1e-8 relative to
/// its largest eigenvalue.
int span_dimension(const std::vector<TensorOp> &ops);
int span_dimension(const std::vector<SparseMatrix> &ops);

/// Gram matrix tr(A^† B) of a family of operators.
Matrix gram_matrix(const std::vector<SparseMatrix> &ops);

/// Largest absolute entry.
double max_abs(const SparseMatrix &m);

/// All operators V(σ)^{t_n}, σ ∈ S(n), built once.
class Oracle {
public:
    Oracle(int n, int d, long long cap = default_oracle_cap());

    int n() const { return n_; }
    int d() const { return d_; }
    long long dimension() const { return dim_; }

    /// V(σ)^{t_n}.
    const SparseMatrix &generator(const Permutation &sigma) const;
    const std::vector<SparseMatrix> &generators() const { return generators_; }

    /// Σ c_σ V(σ)^{t_n}.
    SparseMatrix image(const Element &x) const;

private:
    int n_;
    int d_;
    long long dim_;
    std::vector<SparseMatrix> generators_; // indexed by Permutation::rank()
};

} // namespace ptalg
