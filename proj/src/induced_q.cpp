#include "ptalg/induced_q.hpp"

#include "ptalg/projectors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace ptalg {

namespace {

Permutation t(int m, int x, int y) { return Permutation::transposition(m, x, y); }

void check_shape(const Partition &alpha, int n) {
    if (n < 3)
        throw std::invalid_argument("induced representation: requires n >= 3");
    if (alpha.weight() != n - 2)
        throw std::invalid_argument("induced representation: alpha = (" + to_string(alpha) +
                                    ") is not a partition of n-2 = " + std::to_string(n - 2));
}

void set_block(Matrix &m, int a, int b, int w, const Matrix &block) {
    m.block((a - 1) * w, (b - 1) * w, w, w) = block;
}

} // namespace

InducedRep::InducedRep(Partition alpha, int n) : alpha_(std::move(alpha)), n_(n) {
    check_shape(alpha_, n_);
    phi_ = YoungIrrep::get(alpha_);
    decomposition_ = add_box(alpha_);
}

std::vector<Permutation> InducedRep::coset_reps() const {
    std::vector<Permutation> reps;
    for (int a = 1; a <= n_ - 1; ++a)
        reps.push_back(t(n_ - 1, a, n_ - 1));
    return reps;
}

Matrix InducedRep::image(const Permutation &sigma) const {
    const int m = n_ - 1;
    if (sigma.degree() != m)
        throw std::invalid_argument("InducedRep::image: expected a permutation of S(n-1)");
    const int wd = w();
    Matrix out = Matrix::Zero(block_dimension(), block_dimension());
    for (int b = 1; b <= m; ++b) {
        const int a = sigma(b);
        const Permutation g = t(m, a, m) * sigma * t(m, b, m);
        set_block(out, a, b, wd, phi_->image(g.restricted(m - 1)));
    }
    return out;
}

const std::vector<Matrix> &InducedRep::all_images() const {
    std::call_once(images_once_, [this] {
        for (const auto &p : all_permutations(n_ - 1))
            images_.push_back(image(p));
    });
    return images_;
}

Matrix q_matrix(const Partition &alpha, int d, int n) {
    check_shape(alpha, n);
    auto phi = YoungIrrep::get(alpha);
    const int m = n - 1;
    const int w = phi->dimension();
    Matrix q = Matrix::Zero(m * w, m * w);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            const Permutation g = t(m, a, m) * t(m, a, b) * t(m, b, m);
            Matrix block = phi->image(g.restricted(m - 1));
            if (a == b)
                block *= d;
            set_block(q, a, b, w, block);
        }
    return q;
}

Matrix q_via_induced(const Partition &alpha, int d, int n) {
    InducedRep rep(alpha, n);
    const int m = n - 1;
    Matrix q = Matrix::Zero(rep.block_dimension(), rep.block_dimension());
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            q += rep.image(t(m, a, b));
    double digamma = 0.0;
    if (n - 2 >= 2)
        digamma = ((n - 2) * (n - 3) / 2.0) * transposition_character_frobenius(alpha) /
                  static_cast<double>(alpha.dimension());
    q += (d - digamma) * Matrix::Identity(rep.block_dimension(), rep.block_dimension());
    return q;
}

std::vector<Eigenpair> eigenvalues_closed_form(const Partition &alpha, int d) {
    std::vector<Eigenpair> out;
    for (const auto &box : add_box(alpha))
        out.push_back({box.nu, static_cast<double>(d + box.content()), static_cast<int>(box.nu.dimension())});
    return out;
}

std::optional<Partition> zero_condition(const Partition &alpha, int d) {
    for (const auto &box : add_box(alpha))
        if (box.content() == -d)
            return box.nu;
    return std::nullopt;
}

ZMatrix z_matrix(const Partition &alpha, int n) {
    InducedRep rep(alpha, n);
    const auto &images = rep.all_images();
    ZMatrix out;
    out.z = Matrix::Zero(rep.block_dimension(), rep.block_dimension());
    int offset = 0;
    for (const auto &box : rep.decomposition()) {
        const auto e = matrix_operators_E(images, box.nu);
        const int dim = static_cast<int>(e.size());
        const Matrix &e11 = e[0][0];
        Eigen::Index k = 0;
        while (k < e11.rows() && e11(k, k) <= 1e-9)
            ++k;
        if (k == e11.rows())
            throw SpectralError("z_matrix: projector for nu = (" + to_string(box.nu) + ") has no positive diagonal entry");
        const double norm = std::sqrt(e11(k, k));
        for (int j = 0; j < dim; ++j)
            out.z.col(offset + j) = e[static_cast<std::size_t>(j)][0].col(k) / norm;
        Eigen::Index first = 0;
        while (std::abs(out.z(first, offset)) < 1e-12)
            ++first;
        if (out.z(first, offset) < 0)
            out.z.middleCols(offset, dim) *= -1.0;
        out.blocks.push_back({box.nu, offset, dim});
        offset += dim;
    }
    return out;
}

Vector SpectralQ::column_lambdas() const {
    Vector l(z.z.cols());
    for (std::size_t b = 0; b < z.blocks.size(); ++b)
        l.segment(z.blocks[b].offset, z.blocks[b].size).setConstant(eigenpairs[b].lambda);
    return l;
}

SpectralQ spectral_q(const Partition &alpha, int d, int n) {
    SpectralQ s;
    s.alpha = alpha;
    s.n = n;
    s.d = d;
    s.matrix = q_matrix(alpha, d, n);
    s.eigenpairs = eigenvalues_closed_form(alpha, d);
    s.z = z_matrix(alpha, n);
    s.theta = zero_condition(alpha, d);
    s.rank = static_cast<int>(s.matrix.rows()) - (s.theta ? static_cast<int>(s.theta->dimension()) : 0);

    Eigen::SelfAdjointEigenSolver<Matrix> es(s.matrix, Eigen::EigenvaluesOnly);
    s.numerical_eigenvalues = es.eigenvalues();
    std::vector<double> closed;
    for (const auto &ep : s.eigenpairs)
        closed.insert(closed.end(), static_cast<std::size_t>(ep.multiplicity), ep.lambda);
    std::sort(closed.begin(), closed.end());
    if (static_cast<Eigen::Index>(closed.size()) != s.numerical_eigenvalues.size())
        throw SpectralError("spectral_q: multiplicities do not add up to the block dimension");
    int numeric_null = 0;
    const double null_tol = 1e-7 * (1.0 + std::abs(d));
    for (Eigen::Index i = 0; i < s.numerical_eigenvalues.size(); ++i) {
        s.eigen_residual = std::max(s.eigen_residual, std::abs(closed[static_cast<std::size_t>(i)] - s.numerical_eigenvalues(i)));
        numeric_null += std::abs(s.numerical_eigenvalues(i)) < null_tol;
    }
    const int expected_null = s.theta ? static_cast<int>(s.theta->dimension()) : 0;
    if (numeric_null != expected_null)
        throw SpectralError("spectral_q: numerical null space of Q(" + to_string(alpha) + ") has dimension " +
                            std::to_string(numeric_null) + ", closed form predicts " + std::to_string(expected_null));
    return s;
}

ReducedBasis xa_reduce(const Matrix &a, double tol) {
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol)
        throw SpectralError("xa_reduce: matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    ReducedBasis out;
    out.z = es.eigenvectors();
    out.lambda = es.eigenvalues();
    const double scale = 1.0 + out.lambda.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < out.lambda.size(); ++i) {
        if (out.lambda(i) < -tol * scale)
            throw SpectralError("xa_reduce: negative eigenvalue " + std::to_string(out.lambda(i)));
        if (out.lambda(i) > tol * scale)
            out.surviving.push_back(static_cast<int>(i));
    }
    return out;
}

ReducedBasis xa_reduce(const SpectralQ &q) {
    ReducedBasis out;
    out.z = q.z.z;
    out.lambda = q.column_lambdas();
    for (std::size_t b = 0; b < q.z.blocks.size(); ++b) {
        if (q.theta && q.z.blocks[b].nu == *q.theta)
            continue;
        if (q.eigenpairs[b].lambda < 0)
            throw SpectralError("xa_reduce: negative eigenvalue for nu = (" + to_string(q.eigenpairs[b].nu) + ")");
        for (int j = 0; j < q.z.blocks[b].size; ++j)
            out.surviving.push_back(q.z.blocks[b].offset + j);
    }
    return out;
}

} // namespace ptalg
