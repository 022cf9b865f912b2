#include "ptalg/tensor_oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ptalg {

long long default_oracle_cap() {
    if (const char *env = std::getenv("PTALG_ORACLE_CAP")) {
        try {
            long long v = std::stoll(env);
            if (v > 0)
                return v;
        } catch (const std::exception &) {
        }
    }
    return 4096;
}

long long checked_tensor_dimension(int n, int d, long long cap) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("tensor oracle: n and d must be positive");
    long long dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= d;
        if (dim > cap)
            throw std::length_error("tensor oracle: d^n = " + std::to_string(d) + "^" + std::to_string(n) +
                                    " exceeds the cap " + std::to_string(cap));
    }
    return dim;
}

TensorOp perm_operator(const Permutation &sigma, int d, long long cap) {
    const int n = sigma.degree();
    const long long dim = checked_tensor_dimension(n, d, cap);
    const Permutation inv = sigma.inverse();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(dim));
    std::vector<int> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    for (long long idx = 0; idx < dim; ++idx) {
        long long rest = idx;
        for (int k = n - 1; k >= 0; --k) {
            in[static_cast<std::size_t>(k)] = static_cast<int>(rest % d);
            rest /= d;
        }
        long long target = 0;
        for (int k = 1; k <= n; ++k) {
            out[static_cast<std::size_t>(k - 1)] = in[static_cast<std::size_t>(inv(k) - 1)];
            target = target * d + out[static_cast<std::size_t>(k - 1)];
        }
        trips.emplace_back(static_cast<int>(target), static_cast<int>(idx), 1.0);
    }
    TensorOp op{n, d, SparseMatrix(dim, dim)};
    op.matrix.setFromTriplets(trips.begin(), trips.end());
    return op;
}

TensorOp partial_transpose_last(const TensorOp &op) {
    const int d = op.d;
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(op.matrix.nonZeros()));
    for (int r = 0; r < op.matrix.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(op.matrix, r); it; ++it) {
            const long long row = it.row(), col = it.col();
            const long long rhigh = row / d, rlow = row % d;
            const long long chigh = col / d, clow = col % d;
            trips.emplace_back(static_cast<int>(rhigh * d + clow), static_cast<int>(chigh * d + rlow), it.value());
        }
    }
    TensorOp out{op.n, op.d, SparseMatrix(op.matrix.rows(), op.matrix.cols())};
    out.matrix.setFromTriplets(trips.begin(), trips.end());
    return out;
}

Matrix gram_matrix(const std::vector<SparseMatrix> &ops) {
    const auto k = static_cast<Eigen::Index>(ops.size());
    Matrix g = Matrix::Zero(k, k);
    if (ops.empty())
        return g;
    // Flatten every operator into one row of a sparse matrix; Gram = X X^T.
    const long long cols = static_cast<long long>(ops.front().rows()) * ops.front().cols();
    std::vector<Eigen::Triplet<double, long long>> trips;
    for (Eigen::Index a = 0; a < k; ++a) {
        const auto &op = ops[static_cast<std::size_t>(a)];
        if (op.rows() != ops.front().rows() || op.cols() != ops.front().cols())
            throw std::invalid_argument("gram_matrix: inconsistent operator shapes");
        for (int r = 0; r < op.outerSize(); ++r)
            for (SparseMatrix::InnerIterator it(op, r); it; ++it)
                trips.emplace_back(a, static_cast<long long>(it.row()) * op.cols() + it.col(), it.value());
    }
    Eigen::SparseMatrix<double, Eigen::RowMajor, long long> x(k, cols);
    x.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseMatrix<double, Eigen::ColMajor, long long> xt = x.transpose();
    Eigen::SparseMatrix<double, Eigen::ColMajor, long long> prod = x * xt;
    return Matrix(prod);
}

int span_dimension(const std::vector<SparseMatrix> &ops) {
    if (ops.empty())
        return 0;
    const Matrix g = gram_matrix(ops);
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    const Vector ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    if (top == 0.0)
        return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        rank += ev(i) > 1e-8 * top;
    return rank;
}

int span_dimension(const std::vector<TensorOp> &ops) {
    std::vector<SparseMatrix> mats;
    mats.reserve(ops.size());
    for (const auto &op : ops)
        mats.push_back(op.matrix);
    return span_dimension(mats);
}

double max_abs(const SparseMatrix &m) {
    double best = 0.0;
    for (int r = 0; r < m.outerSize(); ++r)
        for (SparseMatrix::InnerIterator it(m, r); it; ++it)
            best = std::max(best, std::abs(it.value()));
    return best;
}

Oracle::Oracle(int n, int d, long long cap) : n_(n), d_(d), dim_(checked_tensor_dimension(n, d, cap)) {
    for (const auto &p : all_permutations(n))
        generators_.push_back(partial_transpose_last(perm_operator(p, d, cap)).matrix);
}

const SparseMatrix &Oracle::generator(const Permutation &sigma) const {
    if (sigma.degree() != n_)
        throw std::invalid_argument("Oracle::generator: degree mismatch");
    return generators_[sigma.rank()];
}

SparseMatrix Oracle::image(const Element &x) const {
    if (x.context().n != n_ || x.context().d != d_)
        throw std::invalid_argument("Oracle::image: element context differs from the oracle's (n, d)");
    SparseMatrix out(dim_, dim_);
    for (const auto &[p, c] : x.terms())
        out += c * generator(p);
    return out;
}

} // namespace ptalg
