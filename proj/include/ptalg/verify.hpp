/**
 * @file verify.hpp
 * @brief Checks of the abstract layer against the tensor oracle and of the
 * closed-form layer against numerics. Every check returns a report instead
 * of throwing on failure.
 */

#pragma once

#include "ptalg/algebra.hpp"
#include "ptalg/irreps.hpp"
#include "ptalg/tensor_oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ptalg {

struct VerificationReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    double max_residual = 0.0;
    std::string details;

    bool operator==(const VerificationReport &) const = default;
};

/// The product law of generators against operator products, all pairs.
VerificationReport verify_generator_products(int n, int d, double tol = 1e-10);

/// Oracle image of adjoint(x) equals the transpose of the image of x.
VerificationReport verify_adjoint_transport(int n, int d, int samples = 50, double tol = 1e-12);

/// u^{ab}_{ij}(α) u^{pq}_{kl}(β) = δ_αβ Q^{bp}_{jk}(α) u^{aq}_{il}(α) and the
/// left actions of V(σ_ab)^{t_n} and V(σ_n) on u-elements, through the oracle.
VerificationReport verify_u_structure(const Partition &alpha, const Partition &beta, AlgebraContext ctx,
                                      double tol = 1e-8);

/// Closed-form spectrum and rank of every Q(α), α ⊢ n-2, against numerics.
VerificationReport verify_spectra(int n, int d, double tol = 1e-8);

/// Z^T Φ(σ) Z = ⊕ ψ^ν(σ) and Z^T Q Z = diag(λ).
VerificationReport verify_reducing_matrix(const Partition &alpha, int n, int d, double tol = 1e-8);

/// Images respect every product of generators and every linear relation
/// among the oracle's generators; kind M has dimension rank Q, kind S kills M.
VerificationReport verify_irrep_against_oracle(const IrrepOfAlgebra &irrep, double tol = 1e-8);

/// Images respect every product of generators (no oracle needed).
VerificationReport verify_irrep_homomorphism(const IrrepOfAlgebra &irrep, double tol = 1e-8);

/// tr M_f = tr M_e per generator, and the S(n-1) blocks of M_f follow add_box.
VerificationReport verify_basis_equivalence(const Partition &alpha, int d, int n, double tol = 1e-8);

/// Span dimensions of {V(σ)}, {V(σ)^{t_n}}, the partition sum and the
/// structure report agree; {E_ij} independent iff {V(σ)} independent.
VerificationReport verify_dimension_theorem(int n, int d);

/// Matrix-operator identities for D = V_d restricted to S(m) ⊂ S(n):
/// expansion of D(g), Hilbert-Schmidt orthogonality with multiplicity k_α,
/// composition E_ij E_kl = δ_jk E_il, and D(h) E_ij = Σ_k φ_ki(h) E_kj.
VerificationReport verify_e_operators(int m, int n, int d, double tol = 1e-9);

/// f_sr built from u-elements of α and the eigenbasis of Q(α) are matrix
/// units under the oracle, and their number is rank Q(α)².
VerificationReport verify_matrix_units(const Partition &alpha, int n, int d, double tol = 1e-8);

/// e² = e, e m = m e = m for M-generators, M S = S M = 0.
VerificationReport verify_unit(int n, int d, double tol = 1e-8);

/// Suites: all, mul, spectra, irreps, dims, appc.
std::vector<VerificationReport> run_suite(const std::string &suite, int n, int d, double tol = 0.0);

} // namespace ptalg
