/**
 * @file induced_q.hpp
 * @brief The induced representation ind_{S(n-2)}^{S(n-1)}(φ^α), the block
 * matrix Q(α), its spectrum, the reducing matrix Z(α), and the reduction of
 * a family x_ij with x_ij x_kl = a_jk x_il to matrix units.
 *
 * Block indices: row/column (a, i) of a (n-1)w × (n-1)w matrix sits at
 * (a-1)w + (i-1), with a = 1..n-1 and i = 1..w.
 */

#pragma once

#include "ptalg/partition.hpp"
#include "ptalg/permutation.hpp"
#include "ptalg/young.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ptalg {

/// ind_{S(n-2)}^{S(n-1)}(φ^α) with coset representatives (a n-1), a = 1..n-1.
class InducedRep {
public:
    InducedRep(Partition alpha, int n);

    const Partition &alpha() const { return alpha_; }
    int n() const { return n_; }
    int w() const { return phi_->dimension(); }
    int block_dimension() const { return (n_ - 1) * w(); }

    std::vector<Permutation> coset_reps() const;
    const std::vector<AddedBox> &decomposition() const { return decomposition_; }

    /// π_{ai,bj}(σ) = δ_{a,σ(b)} φ_ij[(a n-1) σ (b n-1)], σ ∈ S(n-1).
    Matrix image(const Permutation &sigma) const;

    /// Images of all of S(n-1), indexed by Permutation::rank().
    const std::vector<Matrix> &all_images() const;

private:
    Partition alpha_;
    int n_;
    std::shared_ptr<const YoungIrrep> phi_;
    std::vector<AddedBox> decomposition_;
    mutable std::vector<Matrix> images_;
    mutable std::once_flag images_once_;
};

/// Q^{ab}_{ij} = d^{δ_ab} φ_ij[(a n-1)(ab)(b n-1)].
Matrix q_matrix(const Partition &alpha, int d, int n);

/// Σ_{a<b} Φ(ab) + (d - Ϝ) I with Ϝ = C(n-2, 2) χ^α(12)/w.
Matrix q_via_induced(const Partition &alpha, int d, int n);

struct Eigenpair {
    Partition nu;
    double lambda = 0.0;
    int multiplicity = 0;
    bool operator==(const Eigenpair &) const = default;
};

/// λ_ν = d + content of the box added to α, one entry per ν in add_box order.
std::vector<Eigenpair> eigenvalues_closed_form(const Partition &alpha, int d);

/// The ν whose eigenvalue vanishes, if any (the added box has content -d).
std::optional<Partition> zero_condition(const Partition &alpha, int d);

/// Column layout of Z(α): one block per ν (add_box order), dim ψ^ν columns each.
struct ZBlock {
    Partition nu;
    int offset = 0;
    int size = 0;
};

struct ZMatrix {
    Matrix z;
    std::vector<ZBlock> blocks;
};

/// Orthogonal Z with Z^T Φ(σ) Z = ⊕_ν ψ^ν(σ) and Z^T Q Z diagonal.
/// Each ν-block is fixed up to one overall sign, chosen so that the first
/// nonzero entry of its first column is positive.
ZMatrix z_matrix(const Partition &alpha, int n);

class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralQ {
    Partition alpha;
    int n = 0;
    int d = 0;
    Matrix matrix;
    std::vector<Eigenpair> eigenpairs;
    ZMatrix z;
    std::optional<Partition> theta;
    int rank = 0;
    /// Sorted eigenvalues from a symmetric eigensolver.
    Vector numerical_eigenvalues;
    /// Largest gap between sorted closed-form and numerical eigenvalues.
    double eigen_residual = 0.0;

    /// λ for each column of z.
    Vector column_lambdas() const;
};

/// Q, its closed-form spectrum, Z and θ. Throws SpectralError when the
/// numerically detected null space disagrees with zero_condition.
SpectralQ spectral_q(const Partition &alpha, int d, int n);

/// Reduction data for x_ij x_kl = a_jk x_il: y_sr = Σ_ij Z_is Z_jr x_ij obey
/// y_sr y_s'r' = λ_r δ_{rs'} y_sr', and f_sr = y_sr / √(λ_s λ_r) over the
/// surviving (λ ≠ 0) indices are matrix units.
struct ReducedBasis {
    Matrix z;
    Vector lambda;
    std::vector<int> surviving;
    int rank() const { return static_cast<int>(surviving.size()); }
};

/// Diagonalizes a symmetric A. Throws SpectralError for a negative nonzero
/// eigenvalue beyond tol.
ReducedBasis xa_reduce(const Matrix &a, double tol = 1e-9);

/// Uses the closed-form Z(α) and spectrum for A = Q(α).
ReducedBasis xa_reduce(const SpectralQ &q);

/// f[s][r] for surviving s, r (positions in basis.surviving). X needs
/// X + X and X * double.
template <class X>
std::vector<std::vector<X>> matrix_units(const std::vector<std::vector<X>> &x, const ReducedBasis &basis) {
    const auto p = static_cast<Eigen::Index>(x.size());
    std::vector<std::vector<X>> f;
    for (int s : basis.surviving) {
        std::vector<X> row;
        for (int r : basis.surviving) {
            X acc = x[0][0] * 0.0;
            for (Eigen::Index i = 0; i < p; ++i)
                for (Eigen::Index j = 0; j < p; ++j) {
                    const double c = basis.z(i, s) * basis.z(j, r);
                    if (c != 0.0)
                        acc = acc + x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * c;
                }
            row.push_back(acc * (1.0 / std::sqrt(basis.lambda(s) * basis.lambda(r))));
        }
        f.push_back(std::move(row));
    }
    return f;
}

} // namespace ptalg
