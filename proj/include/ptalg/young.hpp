/**
 * @file young.hpp
 * @brief Young's orthogonal representation of S(m) and the character
 * formulas built on it.
 */

#pragma once

#include "ptalg/partition.hpp"
#include "ptalg/permutation.hpp"

#include <Eigen/Dense>

#include <memory>
#include <vector>

namespace ptalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A standard Young tableau, stored as the (row, column) of each letter 1..m.
struct Tableau {
    std::vector<int> row;
    std::vector<int> column;
    int content(int letter) const {
        return column[static_cast<std::size_t>(letter - 1)] - row[static_cast<std::size_t>(letter - 1)];
    }
};

/// Real orthogonal irreducible representation of S(m) labelled by a
/// partition of m. Basis: standard tableaux in last-letter order (sorted by
/// the row holding m, then the row holding m-1, and so on).
///
/// Images are cached for m <= 6; larger degrees multiply generator images
/// along a reduced word on each call.
class YoungIrrep {
public:
    explicit YoungIrrep(Partition label);

    /// Shared, process-wide instance for the given label (thread-safe).
    static std::shared_ptr<const YoungIrrep> get(const Partition &label);

    const Partition &label() const { return label_; }
    int degree() const { return label_.weight(); }
    int dimension() const { return static_cast<int>(tableaux_.size()); }
    const std::vector<Tableau> &tableaux() const { return tableaux_; }

    /// Image of the adjacent transposition (i i+1), 1 <= i < m.
    const Matrix &generator(int i) const;

    Matrix image(const Permutation &p) const;

    /// Single entry phi_{ij}(p), 1-based.
    double entry(const Permutation &p, int i, int j) const;

private:
    Partition label_;
    std::vector<Tableau> tableaux_;
    std::vector<Matrix> generators_;
    std::vector<Matrix> cached_; // indexed by Permutation::rank()
};

inline std::shared_ptr<const YoungIrrep> irrep(const Partition &alpha) { return YoungIrrep::get(alpha); }

/// Trace of the YOR image.
double character(const Partition &alpha, const Permutation &p);

/// Closed form for the value on transpositions from the Frobenius
/// characteristic: dim/(m(m-1)) * sum_i (b_i(b_i+1) - a_i(a_i+1)).
double transposition_character_frobenius(const Partition &alpha);

/// n_K * chi(rep) / dim: the scalar by which a class sum acts.
double class_sum_scalar(const Partition &alpha, const Permutation &class_rep, long long class_size);

/// Multiplicity of the S(m)-irrep alpha in (C^d)^{⊗m}, computed as
/// (1/m!) sum_sigma chi(sigma^{-1}) d^{l(sigma)}.
long long multiplicity_in_V(const Partition &alpha, int d);

} // namespace ptalg
