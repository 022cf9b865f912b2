#include "doctest.h"

#include "reference_basis.hpp"
#include "ptalg/induced_q.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

using namespace ptalg;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        Eigen::Index c = 0;
        for (double v : row)
            m(r, c++) = v;
        ++r;
    }
    return m;
}

Matrix direct_sum(const std::vector<Matrix> &blocks) {
    Eigen::Index size = 0;
    for (const auto &b : blocks)
        size += b.rows();
    Matrix out = Matrix::Zero(size, size);
    Eigen::Index off = 0;
    for (const auto &b : blocks) {
        out.block(off, off, b.rows(), b.cols()) = b;
        off += b.rows();
    }
    return out;
}

} // namespace

TEST_CASE("induced representation") {
    InducedRep triv3(Partition({1}), 3);
    CHECK(triv3.image(Permutation::identity(2)).isIdentity());
    CHECK(triv3.image(Permutation::transposition(2, 1, 2)) == mat({{0, 1}, {1, 0}}));
    CHECK(triv3.coset_reps().back().is_identity());

    for (int n = 3; n <= 6; ++n) {
        for (const auto &alpha : partitions_of(n - 2)) {
            InducedRep rep(alpha, n);
            long long sum = 0;
            for (const auto &box : rep.decomposition())
                sum += box.nu.dimension();
            CHECK(sum == rep.block_dimension());
            if (n > 5)
                continue;
            const auto perms = all_permutations(n - 1);
            for (const auto &p : perms) {
                Matrix img = rep.image(p);
                CHECK((img.transpose() * img).isIdentity(1e-12));
                double chars = 0.0;
                for (const auto &box : rep.decomposition())
                    chars += character(box.nu, p);
                CHECK(img.trace() == doctest::Approx(chars));
                for (const auto &q : perms)
                    CHECK((rep.image(p * q) - img * rep.image(q)).norm() < 1e-9);
            }
        }
    }
}

TEST_CASE("Q matrices") {
    for (int d = 1; d <= 5; ++d) {
        CHECK(q_matrix(Partition({1}), d, 3) == mat({{1.0 * d, 1}, {1, 1.0 * d}}));
        CHECK(q_matrix(Partition({2}), d, 4) == mat({{1.0 * d, 1, 1}, {1, 1.0 * d, 1}, {1, 1, 1.0 * d}}));
        CHECK(q_matrix(Partition({1, 1}), d, 4) == mat({{1.0 * d, -1, 1}, {-1, 1.0 * d, 1}, {1, 1, 1.0 * d}}));
    }
    for (int n = 3; n <= 6; ++n)
        for (const auto &alpha : partitions_of(n - 2))
            for (int d = 1; d <= 5; ++d) {
                Matrix q = q_matrix(alpha, d, n);
                CHECK((q - q.transpose()).norm() == 0.0);
                CHECK((q - q_via_induced(alpha, d, n)).cwiseAbs().maxCoeff() < 1e-10);
                CHECK(q.trace() == doctest::Approx((n - 1) * alpha.dimension() * d));
            }
}

TEST_CASE("closed-form spectrum") {
    for (int n = 3; n <= 7; ++n) {
        auto triv = eigenvalues_closed_form(Partition({n - 2}), 10);
        REQUIRE(triv.size() == 2);
        CHECK(triv[0].lambda == 10 + n - 2);
        CHECK(triv[0].multiplicity == 1);
        CHECK(triv[1].lambda == 10 - 1);
        CHECK(triv[1].multiplicity == n - 2);
        auto sgn = eigenvalues_closed_form(Partition(std::vector<int>(static_cast<std::size_t>(n - 2), 1)), 10);
        REQUIRE(sgn.size() == 2);
        CHECK(sgn[0].lambda == 10 + 1);
        CHECK(sgn[0].multiplicity == n - 2);
        CHECK(sgn[1].lambda == 10 - (n - 2));
        CHECK(sgn[1].multiplicity == 1);
    }
    for (int n = 5; n <= 7; ++n) {
        auto hook = eigenvalues_closed_form(Partition({n - 3, 1}), 10);
        std::vector<double> ls;
        for (const auto &ep : hook)
            ls.push_back(ep.lambda - 10);
        std::sort(ls.begin(), ls.end());
        CHECK(ls == std::vector<double>{-2, 0, n - 3.0});
    }
    for (int w = 1; w <= 4; ++w)
        for (int d = 1; d <= 6; ++d) {
            for (const auto &alpha : partitions_of(w)) {
                const int n = w + 2;
                auto s = spectral_q(alpha, d, n);
                CHECK(s.eigen_residual < 1e-8);
                if (d > n - 2)
                    for (const auto &ep : s.eigenpairs)
                        CHECK(ep.lambda > 0);
                int zeros = 0;
                for (const auto &ep : s.eigenpairs)
                    zeros += ep.lambda == 0.0;
                CHECK(zeros <= 1);
                CHECK(s.rank == s.matrix.rows() - (s.theta ? s.theta->dimension() : 0));
                Eigen::FullPivLU<Matrix> lu(s.matrix);
                lu.setThreshold(1e-9);
                CHECK(lu.rank() == s.rank);
            }
        }
}

TEST_CASE("zero condition") {
    for (int k = 1; k <= 5; ++k) {
        Partition col(std::vector<int>(static_cast<std::size_t>(k), 1));
        auto theta = zero_condition(col, k);
        REQUIRE(theta);
        CHECK(*theta == Partition(std::vector<int>(static_cast<std::size_t>(k + 1), 1)));
    }
    CHECK(zero_condition(Partition({1, 1}), 2) == Partition({1, 1, 1}));
    for (int n = 3; n <= 7; ++n)
        for (const auto &alpha : partitions_of(n - 2))
            CHECK_FALSE(zero_condition(alpha, n - 1));
}

TEST_CASE("reducing matrix") {
    auto z3 = z_matrix(Partition({1}), 3);
    Matrix expected = std::sqrt(0.5) * mat({{1, -1}, {1, 1}});
    CHECK((z3.z.cwiseAbs() - expected.cwiseAbs()).norm() < 1e-12);

    // n = 4 references are written in a complex basis of ψ^(2,1).
    using namespace reference_basis;
    const cd e = eps(), e2 = e * e, ei = std::conj(e);
    struct Case {
        Partition alpha;
        CMatrix reference;
    };
    CMatrix zid(3, 3), zsgn(3, 3);
    zid << e, e2, 1, e2, e, 1, 1, 1, 1;
    zsgn << -e, -ei, -1, -ei, -e, -1, 1, 1, 1;
    for (const auto &c : {Case{Partition({2}), zid / std::sqrt(3.0)}, Case{Partition({1, 1}), zsgn / std::sqrt(3.0)}}) {
        InducedRep rep(c.alpha, 4);
        const CMatrix &zr = c.reference;
        CHECK((zr.adjoint() * zr - CMatrix::Identity(3, 3)).norm() < 1e-12);
        RepFn reduced = [&](const Permutation &p) { return CMatrix(zr.adjoint() * rep.image(p).cast<cd>() * zr); };
        for (const auto &p : all_permutations(3)) {
            CMatrix r = reduced(p);
            CHECK(r.topRightCorner(2, 1).norm() < 1e-12);
            CHECK(r.bottomLeftCorner(1, 2).norm() < 1e-12);
            if (c.alpha == Partition({2}))
                CHECK((r.topLeftCorner(2, 2) - psi21(p).conjugate()).norm() < 1e-12);
        }
        RepFn ref21 = [&](const Permutation &p) { return CMatrix(reduced(p).topLeftCorner(2, 2)); };
        RepFn real21 = [](const Permutation &p) { return CMatrix(irrep(Partition({2, 1}))->image(p).cast<cd>()); };
        CHECK(hom_defect(ref21, 3) < 1e-12);
        auto u = intertwiner(real21, ref21, 3, 2);
        REQUIRE(u);

        auto z = z_matrix(c.alpha, 4);
        const auto &b21 = z.blocks[0].nu == Partition({2, 1}) ? z.blocks[0] : z.blocks[1];
        const auto &b1 = z.blocks[0].nu == Partition({2, 1}) ? z.blocks[1] : z.blocks[0];
        CMatrix mine21 = z.z.middleCols(b21.offset, 2).cast<cd>() * *u;
        CMatrix mine1 = z.z.middleCols(b1.offset, 1).cast<cd>();
        auto p21 = best_phase(mine21, zr.leftCols(2));
        auto p1 = best_phase(mine1, zr.rightCols(1));
        REQUIRE(p21);
        REQUIRE(p1);
        CHECK((*p21 * mine21 - zr.leftCols(2)).norm() < 1e-9);
        CHECK((*p1 * mine1 - zr.rightCols(1)).norm() < 1e-9);
    }

    for (int w = 0; w <= 3; ++w) {
        for (const auto &alpha : partitions_of(w)) {
            const int n = w + 2;
            if (n < 3)
                continue;
            InducedRep rep(alpha, n);
            auto z = z_matrix(alpha, n);
            CHECK((z.z.transpose() * z.z).isIdentity(1e-10));
            double a1 = 0.0;
            for (const auto &p : all_permutations(n - 1)) {
                std::vector<Matrix> blocks;
                for (const auto &b : z.blocks)
                    blocks.push_back(irrep(b.nu)->image(p));
                a1 = std::max(a1, (z.z.transpose() * rep.image(p) * z.z - direct_sum(blocks)).cwiseAbs().maxCoeff());
            }
            CHECK(a1 < 1e-8);
            for (int d = 1; d <= 5; ++d) {
                auto s = spectral_q(alpha, d, n);
                Matrix diag = s.column_lambdas().asDiagonal();
                CHECK((z.z.transpose() * s.matrix * z.z - diag).cwiseAbs().maxCoeff() < 1e-8);
            }
        }
    }
}

TEST_CASE("xa reduction of small structure matrices") {
    auto id = xa_reduce(Matrix::Identity(3, 3));
    CHECK(id.rank() == 3);
    auto two = xa_reduce(mat({{2, 1}, {1, 2}}));
    CHECK(two.rank() == 2);
    CHECK(two.lambda(0) == doctest::Approx(1.0));
    CHECK(two.lambda(1) == doctest::Approx(3.0));
    auto sgn = xa_reduce(mat({{2, -1, 1}, {-1, 2, 1}, {1, 1, 2}}));
    CHECK(sgn.rank() == 2);
    for (int s : sgn.surviving)
        CHECK(sgn.lambda(s) == doctest::Approx(3.0));
    CHECK_THROWS_AS(xa_reduce(mat({{1, 0}, {0, -1}})), SpectralError);

    // Abstract family x_ij x_kl = a_jk x_il realized by x_ij = e_i a^{1/2}... use
    // x_ij = u_i v_j^T with v_j^T u_k = a_jk.
    Matrix a = mat({{2, -1, 1}, {-1, 2, 1}, {1, 1, 2}});
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    Matrix root = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    std::vector<std::vector<Matrix>> x(3, std::vector<Matrix>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = root.row(i).transpose() * root.row(j);
    auto f = matrix_units(x, sgn);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            for (std::size_t k = 0; k < f.size(); ++k)
                for (std::size_t l = 0; l < f.size(); ++l) {
                    Matrix expect = (j == k) ? f[i][l] : Matrix::Zero(3, 3);
                    CHECK((f[i][j] * f[k][l] - expect).norm() < 1e-12);
                }
}
