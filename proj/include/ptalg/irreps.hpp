/**
 * @file irreps.hpp
 * @brief Irreducible representations of the algebra of partially transposed
 * permutation operators: kind M (labelled by α ⊢ n-2, in the f- or e-basis),
 * kind S (labelled by ν ⊢ n-1 with h(ν) < d), the block inventory of the
 * algebra, and the unit of the ideal M.
 */

#pragma once

#include "ptalg/algebra.hpp"
#include "ptalg/induced_q.hpp"
#include "ptalg/partition.hpp"
#include "ptalg/young.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptalg {

enum class IrrepKind { M, S };
enum class BasisTag { f, e, none };

std::string to_string(IrrepKind kind);
std::string to_string(BasisTag tag);
IrrepKind parse_irrep_kind(std::string_view text);
BasisTag parse_basis_tag(std::string_view text);

class IrrepError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct IrrepOfAlgebra {
    IrrepKind kind = IrrepKind::M;
    Partition label;
    int n = 0;
    int d = 0;
    int dimension = 0;
    BasisTag basis = BasisTag::none;
    /// Image of V(σ)^{t_n}, indexed by σ.rank().
    std::vector<Matrix> images;

    const Matrix &image(const Permutation &sigma) const;
    /// Linear extension to an element of the algebra.
    Matrix image(const Element &x) const;
};

bool operator==(const IrrepOfAlgebra &a, const IrrepOfAlgebra &b);

/// Kind M in the reduced basis f: blocks ν ≠ θ of Z(α), scaled by √λ_ν.
IrrepOfAlgebra irrep_M_f(const Partition &alpha, int d, int n);

/// The e-basis action matrices of every generator, indexed by σ.rank(),
/// for any d. They form an irrep only when det Q(α) ≠ 0.
std::vector<Matrix> e_basis_images(const Partition &alpha, int d, int n);

/// Kind M in the basis e (requires det Q(α) ≠ 0).
IrrepOfAlgebra irrep_M_e(const Partition &alpha, int d, int n);

/// Semi-trivial: V(σ_n) ↦ ψ^ν(σ_n), every other generator ↦ 0. Requires h(ν) < d.
IrrepOfAlgebra irrep_S(const Partition &nu, int d, int n);

/// Every irrep of the algebra at (n, d): kind M in the f-basis, then kind S.
std::vector<IrrepOfAlgebra> all_irreps(int n, int d);

struct MBlock {
    Partition alpha;
    int rank = 0;
    bool operator==(const MBlock &) const = default;
};

struct SBlock {
    Partition nu;
    int dimension = 0;
    bool operator==(const SBlock &) const = default;
};

struct StructureReport {
    int n = 0;
    int d = 0;
    std::vector<MBlock> m_blocks;
    std::vector<SBlock> s_blocks;
    long long dim_M = 0;
    long long dim_S = 0;
    long long dim_total = 0;
    /// Σ_{μ ⊢ n, h(μ) ≤ d} (dim φ^μ)².
    long long dim_formula = 0;
    std::optional<long long> oracle_dim;

    bool consistent() const;
    bool operator==(const StructureReport &) const = default;
};

/// Block inventory; with_oracle adds the span dimension of {V(σ)^{t_n}}.
StructureReport structure_report(int n, int d, bool with_oracle = false);

struct N2Structure {
    StructureReport report;
    std::vector<IrrepOfAlgebra> irreps;
};

/// n = 2: M = ℂ V(12)^{t_2}, S = ℂ (1 - V(12)^{t_2}/d). Requires d >= 2.
N2Structure n2_special_case(int d);

/// e = Σ_α Σ_{ν≠θ} f^{νν}_{jj}, written in generators. Equals Σ_α Σ (Q^+)_{AB} u_{AB}.
Element unit_of_M(int n, int d);

} // namespace ptalg
