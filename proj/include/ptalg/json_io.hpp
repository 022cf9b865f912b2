/**
 * @file json_io.hpp
 * @brief JSON records for irreps, structure reports, spectra and verification
 * reports. Every record round-trips: from_json(to_json(x)) == x.
 *
 * Matrices are lists of rows. Irrep images are keyed by cycle notation.
 */

#pragma once

#include "ptalg/induced_q.hpp"
#include "ptalg/irreps.hpp"
#include "ptalg/verify.hpp"

#include <json.hpp>

namespace ptalg {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

void to_json(Json &j, const Partition &p);
void from_json(const Json &j, Partition &p);

void to_json(Json &j, const IrrepOfAlgebra &x);
void from_json(const Json &j, IrrepOfAlgebra &x);

void to_json(Json &j, const StructureReport &x);
void from_json(const Json &j, StructureReport &x);

void to_json(Json &j, const VerificationReport &x);
void from_json(const Json &j, VerificationReport &x);

/// The serializable part of SpectralQ.
struct SpectrumReport {
    Partition alpha;
    int n = 0;
    int d = 0;
    Matrix matrix;
    std::vector<Eigenpair> eigenpairs;
    int rank = 0;
    std::optional<Partition> theta;
    std::vector<double> numerical_eigenvalues;
    double eigen_residual = 0.0;
};

bool operator==(const SpectrumReport &a, const SpectrumReport &b);

SpectrumReport spectrum_report(const SpectralQ &s);

void to_json(Json &j, const SpectrumReport &x);
void from_json(const Json &j, SpectrumReport &x);

} // namespace ptalg
