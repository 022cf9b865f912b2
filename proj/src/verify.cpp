#include "ptalg/verify.hpp"

#include "ptalg/induced_q.hpp"
#include "ptalg/projectors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <random>
#include <sstream>

namespace ptalg {

namespace {

Permutation t(int m, int x, int y) { return Permutation::transposition(m, x, y); }

/// Accumulates residuals and remembers the first violation.
class Tracker {
public:
    Tracker(std::string check, nlohmann::json params, double tol) : tol_(tol) {
        report_.check = std::move(check);
        report_.params = std::move(params);
        report_.params["tol"] = tol;
    }

    void add(double residual, const std::string &where) {
        report_.max_residual = std::max(report_.max_residual, residual);
        if (!(residual <= tol_) && report_.pass) {
            report_.pass = false;
            std::ostringstream os;
            os << "first violation: " << where << " (residual " << residual << ")";
            report_.details = os.str();
        }
    }

    void fail(const std::string &why) {
        if (report_.pass) {
            report_.pass = false;
            report_.details = why;
        }
    }

    VerificationReport finish(const std::string &summary) {
        if (report_.pass)
            report_.details = summary;
        return report_;
    }

private:
    double tol_;
    VerificationReport report_;
};

double gap(const SparseMatrix &a, const SparseMatrix &b) { return max_abs(a - b); }

double gap(const Matrix &a, const Matrix &b) { return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff(); }

int psd_rank(const Matrix &g, double rel = 1e-8) {
    if (g.size() == 0)
        return 0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    if (top == 0.0)
        return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        rank += es.eigenvalues()(i) > rel * top;
    return rank;
}

std::vector<std::vector<SparseMatrix>> oracle_family(const Oracle &oracle, const std::vector<std::vector<Element>> &x) {
    std::vector<std::vector<SparseMatrix>> out;
    for (const auto &row : x) {
        out.emplace_back();
        for (const auto &e : row)
            out.back().push_back(oracle.image(e));
    }
    return out;
}

std::string u_name(const Partition &alpha, int a, int b, int i, int j) {
    return "u^{" + std::to_string(a) + "," + std::to_string(b) + "}_{" + std::to_string(i) + "," + std::to_string(j) +
           "}(" + to_string(alpha) + ")";
}

nlohmann::json nd(int n, int d) { return {{"n", n}, {"d", d}}; }

/// Left actions of every generator on the u-elements of alpha.
void check_left_actions(Tracker &tr, const Oracle &oracle, const Partition &alpha, AlgebraContext ctx,
                        const std::vector<std::vector<Element>> &u, const std::vector<std::vector<SparseMatrix>> &img) {
    const int n = ctx.n, d = ctx.d, m = n - 1;
    auto phi = YoungIrrep::get(alpha);
    const int w = phi->dimension();
    auto index = [w](int a, int i) { return static_cast<std::size_t>((a - 1) * w + i - 1); };
    for (const auto &sigma : all_permutations(n)) {
        const Element gen = Element::generator(ctx, sigma);
        for (int p = 1; p <= m; ++p)
            for (int q = 1; q <= m; ++q)
                for (int i = 1; i <= w; ++i)
                    for (int j = 1; j <= w; ++j) {
                        const SparseMatrix lhs = oracle.image(mul(gen, u[index(p, i)][index(q, j)]));
                        SparseMatrix rhs(lhs.rows(), lhs.cols());
                        if (sigma.fixes(n)) {
                            const Permutation s = sigma.restricted(m);
                            const int sp = s(p);
                            const Matrix f = phi->image((t(m, sp, m) * s * t(m, p, m)).restricted(m - 1));
                            for (int k = 1; k <= w; ++k)
                                rhs += f(k - 1, i - 1) * img[index(sp, k)][index(q, j)];
                        } else {
                            const auto [a, b] = classify(sigma);
                            const Permutation hat = (t(n, b, n) * sigma).restricted(m);
                            const Matrix f =
                                phi->image((t(m, b, m) * hat * t(m, a, p) * t(m, p, m)).restricted(m - 1));
                            const double scale = a == p ? d : 1.0;
                            for (int k = 1; k <= w; ++k)
                                rhs += (scale * f(k - 1, i - 1)) * img[index(b, k)][index(q, j)];
                        }
                        tr.add(gap(lhs, rhs), "V(" + to_cycle_string(sigma) + ")^t " + u_name(alpha, p, q, i, j));
                    }
    }
}

} // namespace

VerificationReport verify_generator_products(int n, int d, double tol) {
    Tracker tr("generator_products", nd(n, d), tol);
    Oracle oracle(n, d);
    const auto perms = all_permutations(n);
    for (const auto &s : perms)
        for (const auto &r : perms) {
            const auto prod = mul_generators(s, r);
            const SparseMatrix lhs = oracle.generator(s) * oracle.generator(r);
            const SparseMatrix rhs = std::pow(d, prod.power) * oracle.generator(prod.result);
            tr.add(gap(lhs, rhs), to_cycle_string(s) + "^t * " + to_cycle_string(r) + "^t");
        }
    return tr.finish(std::to_string(perms.size() * perms.size()) + " generator products match the operators");
}

VerificationReport verify_adjoint_transport(int n, int d, int samples, double tol) {
    Tracker tr("adjoint_transport", nd(n, d), tol);
    Oracle oracle(n, d);
    const auto ctx = AlgebraContext::numeric(n, d);
    const auto perms = all_permutations(n);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int k = 0; k < samples; ++k) {
        Element x(ctx), y(ctx);
        for (int term = 0; term < 4; ++term) {
            x.add_term(perms[pick(rng)], coef(rng));
            y.add_term(perms[pick(rng)], coef(rng));
        }
        tr.add(gap(oracle.image(adjoint(x)), SparseMatrix(oracle.image(x).transpose())), "adjoint of " + to_string(x));
        tr.add(gap(oracle.image(adjoint(x * y)), oracle.image(adjoint(y) * adjoint(x))),
               "adjoint of a product " + to_string(x) + " ; " + to_string(y));
    }
    return tr.finish(std::to_string(samples) + " random elements: adjoint maps to transpose, reverses products");
}

VerificationReport verify_u_structure(const Partition &alpha, const Partition &beta, AlgebraContext ctx, double tol) {
    const int n = ctx.n, d = ctx.d;
    if (ctx.symbolic || n < 3)
        throw std::invalid_argument("verify_u_structure: requires a numeric context with n >= 3");
    if (d < std::max(alpha.height(), beta.height()))
        throw std::invalid_argument("verify_u_structure: requires d >= max(h(alpha), h(beta))");
    Tracker tr("u_structure", {{"n", n}, {"d", d}, {"alpha", to_string(alpha)}, {"beta", to_string(beta)}}, tol);
    Oracle oracle(n, d);
    const auto ua = u_family(alpha, ctx);
    const auto ub = alpha == beta ? ua : u_family(beta, ctx);
    const auto ia = oracle_family(oracle, ua);
    const auto ib = alpha == beta ? ia : oracle_family(oracle, ub);
    const Matrix q = q_matrix(alpha, d, n);
    const int wa = YoungIrrep::get(alpha)->dimension(), wb = YoungIrrep::get(beta)->dimension();
    const std::size_t sa = ua.size(), sb = ub.size();
    std::size_t count = 0;
    for (std::size_t A = 0; A < sa; ++A)
        for (std::size_t B = 0; B < sa; ++B)
            for (std::size_t C = 0; C < sb; ++C)
                for (std::size_t D = 0; D < sb; ++D) {
                    const SparseMatrix lhs = oracle.image(ua[A][B] * ub[C][D]);
                    const SparseMatrix rhs = alpha == beta ? SparseMatrix(q(static_cast<Eigen::Index>(B), static_cast<Eigen::Index>(C)) * ia[A][D])
                                                           : SparseMatrix(lhs.rows(), lhs.cols());
                    const int a = static_cast<int>(A) / wa + 1, i = static_cast<int>(A) % wa + 1;
                    const int b = static_cast<int>(B) / wa + 1, j = static_cast<int>(B) % wa + 1;
                    const int p = static_cast<int>(C) / wb + 1, k = static_cast<int>(C) % wb + 1;
                    const int qq = static_cast<int>(D) / wb + 1, l = static_cast<int>(D) % wb + 1;
                    tr.add(gap(lhs, rhs), u_name(alpha, a, b, i, j) + " * " + u_name(beta, p, qq, k, l));
                    ++count;
                }
    check_left_actions(tr, oracle, alpha, ctx, ua, ia);
    if (!(alpha == beta))
        check_left_actions(tr, oracle, beta, ctx, ub, ib);
    return tr.finish(std::to_string(count) + " u-products and all generator left actions hold");
}

VerificationReport verify_spectra(int n, int d, double tol) {
    Tracker tr("spectra", nd(n, d), tol);
    if (n < 3)
        return tr.finish("no Q matrices for n < 3");
    int count = 0;
    for (const auto &alpha : partitions_of(n - 2)) {
        try {
            const auto s = spectral_q(alpha, d, n);
            tr.add(s.eigen_residual, "eigenvalues of Q(" + to_string(alpha) + ")");
            Eigen::FullPivLU<Matrix> lu(s.matrix);
            lu.setThreshold(1e-9);
            if (lu.rank() != s.rank)
                tr.fail("rank of Q(" + to_string(alpha) + "): LU gives " + std::to_string(lu.rank()) +
                        ", closed form " + std::to_string(s.rank));
            tr.add(gap(s.matrix, q_via_induced(alpha, d, n)), "Q(" + to_string(alpha) + ") as a class sum");
            ++count;
        } catch (const SpectralError &e) {
            tr.fail(e.what());
        }
    }
    return tr.finish(std::to_string(count) + " closed-form spectra equal numerical eigenvalues");
}

VerificationReport verify_reducing_matrix(const Partition &alpha, int n, int d, double tol) {
    Tracker tr("reducing_matrix", {{"n", n}, {"d", d}, {"alpha", to_string(alpha)}}, tol);
    const auto s = spectral_q(alpha, d, n);
    InducedRep rep(alpha, n);
    const Matrix &z = s.z.z;
    tr.add(gap(z.transpose() * z, Matrix::Identity(z.cols(), z.cols())), "orthogonality of Z");
    for (const auto &p : all_permutations(n - 1)) {
        Matrix blocks = Matrix::Zero(z.cols(), z.cols());
        for (const auto &b : s.z.blocks)
            blocks.block(b.offset, b.offset, b.size, b.size) = YoungIrrep::get(b.nu)->image(p);
        tr.add(gap(z.transpose() * rep.image(p) * z, blocks), "Z^T Phi(" + to_cycle_string(p) + ") Z");
    }
    const Matrix diag = s.column_lambdas().asDiagonal();
    tr.add(gap(z.transpose() * s.matrix * z, diag), "Z^T Q Z");
    return tr.finish("Z reduces the induced representation and diagonalizes Q");
}

VerificationReport verify_irrep_homomorphism(const IrrepOfAlgebra &irrep, double tol) {
    Tracker tr("irrep_homomorphism",
               {{"n", irrep.n}, {"d", irrep.d}, {"kind", to_string(irrep.kind)}, {"label", to_string(irrep.label)},
                {"basis", to_string(irrep.basis)}},
               tol);
    const auto perms = all_permutations(irrep.n);
    for (const auto &s : perms)
        for (const auto &r : perms) {
            const auto prod = mul_generators(s, r);
            const Matrix lhs = irrep.image(s) * irrep.image(r);
            const Matrix rhs = std::pow(irrep.d, prod.power) * irrep.image(prod.result);
            tr.add(gap(lhs, rhs), to_cycle_string(s) + "^t * " + to_cycle_string(r) + "^t");
        }
    return tr.finish(std::to_string(perms.size() * perms.size()) + " generator products respected");
}

VerificationReport verify_irrep_against_oracle(const IrrepOfAlgebra &irrep, double tol) {
    const int n = irrep.n, d = irrep.d;
    VerificationReport hom = verify_irrep_homomorphism(irrep, tol);
    Tracker tr("irrep_against_oracle",
               {{"n", n}, {"d", d}, {"kind", to_string(irrep.kind)}, {"label", to_string(irrep.label)},
                {"basis", to_string(irrep.basis)}},
               tol);
    tr.add(hom.max_residual, hom.details);

    // Every linear relation among the operators V(σ)^{t_n} must hold in the irrep.
    Oracle oracle(n, d);
    const auto perms = all_permutations(n);
    const Matrix g = gram_matrix(oracle.generators());
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    int relations = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        if (es.eigenvalues()(k) > 1e-8 * top)
            continue;
        ++relations;
        Matrix sum = Matrix::Zero(irrep.dimension, irrep.dimension);
        for (const auto &p : perms)
            sum += es.eigenvectors()(static_cast<Eigen::Index>(p.rank()), k) * irrep.image(p);
        tr.add(sum.size() ? sum.cwiseAbs().maxCoeff() : 0.0, "linear relation " + std::to_string(relations));
    }

    const auto report = structure_report(n, d);
    if (irrep.kind == IrrepKind::M) {
        bool found = false;
        for (const auto &b : report.m_blocks)
            if (b.alpha == irrep.label) {
                found = true;
                if (b.rank != irrep.dimension)
                    tr.fail("dimension " + std::to_string(irrep.dimension) + " differs from rank Q = " +
                            std::to_string(b.rank));
            }
        if (!found)
            tr.fail("label (" + to_string(irrep.label) + ") is not a block of M");
    } else {
        for (const auto &p : perms)
            if (!p.fixes(n) && !irrep.image(p).isZero(0.0))
                tr.fail("image of " + to_cycle_string(p) + "^t is not exactly zero");
    }
    return tr.finish("homomorphism holds, " + std::to_string(relations) +
                     " operator relations respected, dimension " + std::to_string(irrep.dimension));
}

VerificationReport verify_basis_equivalence(const Partition &alpha, int d, int n, double tol) {
    Tracker tr("basis_equivalence", {{"n", n}, {"d", d}, {"alpha", to_string(alpha)}}, tol);
    const auto mf = irrep_M_f(alpha, d, n);
    const auto me = irrep_M_e(alpha, d, n);
    for (const auto &p : all_permutations(n))
        tr.add(std::abs(mf.image(p).trace() - me.image(p).trace()), "trace at " + to_cycle_string(p) + "^t");
    if (n >= 3)
        for (const auto &p : all_permutations(n - 1)) {
            double chars = 0.0;
            for (const auto &box : add_box(alpha))
                chars += character(box.nu, p);
            tr.add(std::abs(mf.image(p.extended(n)).trace() - chars), "branching at " + to_cycle_string(p));
        }
    return tr.finish("f- and e-basis traces agree; restriction to S(n-1) follows add_box");
}

VerificationReport verify_dimension_theorem(int n, int d) {
    Tracker tr("dimension_theorem", nd(n, d), 0.0);
    const auto perms = all_permutations(n);
    std::vector<SparseMatrix> plain, transposed;
    for (const auto &p : perms) {
        plain.push_back(perm_operator(p, d).matrix);
        transposed.push_back(partial_transpose_last(perm_operator(p, d)).matrix);
    }
    const Matrix gp = gram_matrix(plain);
    const int dim_plain = psd_rank(gp);
    const int dim_t = span_dimension(transposed);
    const auto report = structure_report(n, d);
    const long long formula = report.dim_formula;
    if (dim_plain != formula || dim_t != formula || report.dim_total != formula)
        tr.fail("span V = " + std::to_string(dim_plain) + ", span V^t = " + std::to_string(dim_t) +
                ", structure = " + std::to_string(report.dim_total) + ", formula = " + std::to_string(formula));

    // E_ij^α as combinations of V(g): Gram(E) = C Gram(V) C^T.
    std::vector<std::pair<Partition, int>> rows;
    for (const auto &alpha : partitions_of(n)) {
        const int w = YoungIrrep::get(alpha)->dimension();
        for (int k = 0; k < w * w; ++k)
            rows.emplace_back(alpha, k);
    }
    Matrix c = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(perms.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto phi = YoungIrrep::get(rows[r].first);
        const int w = phi->dimension();
        const int i = rows[r].second / w, j = rows[r].second % w;
        for (const auto &g : perms)
            c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(g.rank())) =
                w * phi->image(g.inverse())(j, i) / static_cast<double>(perms.size());
    }
    const Matrix ge = c * gp * c.transpose();
    const int rank_e = psd_rank(ge);
    long long nonzero_families = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].second == 0 && ge(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) > 0.5) {
            const long long w = YoungIrrep::get(rows[r].first)->dimension();
            nonzero_families += w * w;
        }
    if (rank_e != dim_plain || nonzero_families != dim_plain)
        tr.fail("span E = " + std::to_string(rank_e) + ", nonzero E families carry " +
                std::to_string(nonzero_families) + ", span V = " + std::to_string(dim_plain));
    const bool e_independent = rank_e == static_cast<int>(rows.size());
    const bool v_independent = dim_plain == static_cast<int>(perms.size());
    if (e_independent != v_independent)
        tr.fail("independence of {E_ij} and of {V(g)} disagree");
    return tr.finish("span V = span V^t = structure = formula = " + std::to_string(formula) +
                     (v_independent ? " (independent)" : " (dependent)"));
}

VerificationReport verify_e_operators(int m, int n, int d, double tol) {
    Tracker tr("e_operators", {{"m", m}, {"n", n}, {"d", d}}, tol);
    if (m < 1 || m > n)
        throw std::invalid_argument("verify_e_operators: requires 1 <= m <= n");
    if (checked_tensor_dimension(n, d, default_oracle_cap()) > 1024)
        throw std::invalid_argument("verify_e_operators: d^n above 1024 is not supported by the dense check");
    const auto group = all_permutations(m);
    std::vector<Matrix> images;
    for (const auto &g : group)
        images.push_back(Matrix(perm_operator(g.extended(n), d).matrix));
    const Eigen::Index size = images.front().rows();

    const auto labels = partitions_of(m);
    std::vector<std::vector<std::vector<Matrix>>> e;
    std::vector<std::shared_ptr<const YoungIrrep>> phi;
    std::vector<double> mult;
    for (const auto &alpha : labels) {
        e.push_back(matrix_operators_E(images, alpha));
        phi.push_back(YoungIrrep::get(alpha));
        double k = 0.0;
        for (const auto &g : group)
            k += character(alpha, g) * images[g.rank()].trace();
        mult.push_back(k / static_cast<double>(group.size()));
    }

    for (const auto &g : group) {
        Matrix sum = Matrix::Zero(size, size);
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const Matrix f = phi[a]->image(g);
            for (Eigen::Index i = 0; i < f.rows(); ++i)
                for (Eigen::Index j = 0; j < f.cols(); ++j)
                    sum += f(i, j) * e[a][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        tr.add(gap(sum, images[g.rank()]), "I: expansion of D(" + to_cycle_string(g) + ")");
    }

    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < labels.size(); ++b) {
            const auto wa = e[a].size(), wb = e[b].size();
            for (std::size_t i = 0; i < wa; ++i)
                for (std::size_t j = 0; j < wa; ++j)
                    for (std::size_t k = 0; k < wb; ++k)
                        for (std::size_t l = 0; l < wb; ++l) {
                            const Matrix &x = e[a][i][j], &y = e[b][k][l];
                            const std::string where = "E^" + to_string(labels[a]) + "_" + std::to_string(i + 1) +
                                                      std::to_string(j + 1) + ", E^" + to_string(labels[b]) + "_" +
                                                      std::to_string(k + 1) + std::to_string(l + 1);
                            const double hs = (x.transpose() * y).trace();
                            const double expect_hs = (a == b && i == k && j == l) ? mult[a] : 0.0;
                            tr.add(std::abs(hs - expect_hs), "II: " + where);
                            const Matrix expect = (a == b && j == k) ? e[a][i][l] : Matrix::Zero(size, size);
                            tr.add(gap(x * y, expect), "III: " + where);
                        }
        }

    for (const auto &h : group)
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const Matrix f = phi[a]->image(h);
            const auto w = e[a].size();
            for (std::size_t i = 0; i < w; ++i)
                for (std::size_t j = 0; j < w; ++j) {
                    Matrix rhs = Matrix::Zero(size, size);
                    for (std::size_t k = 0; k < w; ++k)
                        rhs += f(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) * e[a][k][j];
                    tr.add(gap(images[h.rank()] * e[a][i][j], rhs),
                           "IV: D(" + to_cycle_string(h) + ") E^" + to_string(labels[a]) + "_" +
                               std::to_string(i + 1) + std::to_string(j + 1));
                }
        }
    return tr.finish("expansion, orthogonality, composition and covariance hold for " +
                     std::to_string(labels.size()) + " irreps of S(" + std::to_string(m) + ")");
}

VerificationReport verify_matrix_units(const Partition &alpha, int n, int d, double tol) {
    Tracker tr("matrix_units", {{"n", n}, {"d", d}, {"alpha", to_string(alpha)}}, tol);
    if (alpha.height() > d)
        throw std::invalid_argument("verify_matrix_units: requires d >= h(alpha)");
    const auto ctx = AlgebraContext::numeric(n, d);
    Oracle oracle(n, d);
    const Matrix q = q_matrix(alpha, d, n);
    const ReducedBasis rb = xa_reduce(q);
    const auto f = oracle_family(oracle, matrix_units(u_family(alpha, ctx), rb));
    const std::size_t r = f.size();
    Eigen::FullPivLU<Matrix> lu(q);
    lu.setThreshold(1e-9);
    if (static_cast<Eigen::Index>(r) != lu.rank())
        tr.fail(std::to_string(r) + " surviving indices but rank Q = " + std::to_string(lu.rank()));
    const SparseMatrix zero(oracle.dimension(), oracle.dimension());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l)
                    tr.add(gap(SparseMatrix(f[i][j] * f[k][l]), j == k ? f[i][l] : zero),
                           "f_" + std::to_string(i + 1) + std::to_string(j + 1) + " f_" + std::to_string(k + 1) +
                               std::to_string(l + 1));
    for (std::size_t i = 0; i < r; ++i)
        if (Matrix(f[i][i]).trace() < 1.0 - tol)
            tr.fail("f_" + std::to_string(i + 1) + std::to_string(i + 1) + " vanishes under the oracle");
    std::vector<SparseMatrix> all;
    for (const auto &row : f)
        all.insert(all.end(), row.begin(), row.end());
    if (span_dimension(all) != static_cast<int>(r * r))
        tr.fail("matrix units are linearly dependent");
    return tr.finish(std::to_string(r * r) + " matrix units, U(" + to_string(alpha) + ") = M(" + std::to_string(r) + ")");
}

VerificationReport verify_unit(int n, int d, double tol) {
    Tracker tr("unit_of_M", nd(n, d), tol);
    Oracle oracle(n, d);
    const Element e = unit_of_M(n, d);
    const SparseMatrix ie = oracle.image(e);
    tr.add(gap(SparseMatrix(ie * ie), ie), "e^2 = e");
    SparseMatrix one(oracle.dimension(), oracle.dimension());
    one.setIdentity();
    const SparseMatrix complement = one - ie;
    const auto perms = all_permutations(n);
    std::vector<SparseMatrix> s_gens;
    for (const auto &p : perms)
        if (p.fixes(n))
            s_gens.push_back(oracle.generator(p) * complement);
    for (const auto &p : perms) {
        if (p.fixes(n))
            continue;
        const SparseMatrix &m = oracle.generator(p);
        const std::string name = to_cycle_string(p) + "^t";
        tr.add(gap(SparseMatrix(ie * m), m), "e m at " + name);
        tr.add(gap(SparseMatrix(m * ie), m), "m e at " + name);
        for (const auto &s : s_gens) {
            tr.add(max_abs(m * s), "M S at " + name);
            tr.add(max_abs(s * m), "S M at " + name);
        }
    }
    return tr.finish("e is idempotent, acts as 1 on M, and M S = S M = 0 (" + std::to_string(e.terms().size()) +
                     " terms)");
}

std::vector<VerificationReport> run_suite(const std::string &suite, int n, int d, double tol) {
    static const std::vector<std::string> known = {"all", "mul", "spectra", "irreps", "dims", "appc"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw std::invalid_argument("unknown suite '" + suite + "' (all, mul, spectra, irreps, dims, appc)");
    auto pick = [tol](double fallback) { return tol > 0.0 ? tol : fallback; };
    auto want = [&suite](const char *name) { return suite == "all" || suite == name; };
    std::vector<VerificationReport> out;
    const auto ctx = AlgebraContext::numeric(n, d);
    std::vector<Partition> alphas;
    if (n >= 3)
        for (const auto &alpha : partitions_of(n - 2))
            if (alpha.height() <= d)
                alphas.push_back(alpha);

    if (want("mul")) {
        out.push_back(verify_generator_products(n, d, pick(1e-10)));
        out.push_back(verify_adjoint_transport(n, d, 50, pick(1e-12)));
        for (const auto &a : alphas)
            for (const auto &b : alphas)
                out.push_back(verify_u_structure(a, b, ctx, pick(1e-8)));
    }
    if (want("spectra"))
        out.push_back(verify_spectra(n, d, pick(1e-8)));
    if (want("irreps")) {
        for (const auto &irrep : all_irreps(n, d))
            out.push_back(verify_irrep_against_oracle(irrep, pick(1e-8)));
        for (const auto &a : alphas)
            if (!zero_condition(a, d)) {
                out.push_back(verify_irrep_against_oracle(irrep_M_e(a, d, n), pick(1e-8)));
                out.push_back(verify_basis_equivalence(a, d, n, pick(1e-8)));
            }
        out.push_back(verify_unit(n, d, pick(1e-8)));
    }
    if (want("dims"))
        out.push_back(verify_dimension_theorem(n, d));
    if (want("appc") && n >= 3) {
        out.push_back(verify_e_operators(n - 2, n, d, pick(1e-9)));
        for (const auto &a : partitions_of(n - 2))
            out.push_back(verify_reducing_matrix(a, n, d, pick(1e-8)));
        for (const auto &a : alphas)
            out.push_back(verify_matrix_units(a, n, d, pick(1e-8)));
    }
    return out;
}

} // namespace ptalg
