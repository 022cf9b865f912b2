/**
 * @file projectors.hpp
 * @brief Group-averaged operators E_ij for a representation D of S(m).
 */

#pragma once

#include "ptalg/young.hpp"

#include <vector>

namespace ptalg {

/// E_ij = (w/|G|) Σ_g φ_ji(g^{-1}) D(g) over G = S(m), where images[g.rank()]
/// is D(g). Returned as E[i][j], 0-based.
///
/// For any representation D: E_ij E_kl = δ_jk E_il, E_ij^† = E_ji, and
/// D(h) E_ij = Σ_k φ_ki(h) E_kj.
std::vector<std::vector<Matrix>> matrix_operators_E(const std::vector<Matrix> &images, const Partition &alpha);

} // namespace ptalg
