#include "ptalg/irreps.hpp"

#include "ptalg/tensor_oracle.hpp"

#include <Eigen/QR>

#include <future>

namespace ptalg {

namespace {

Permutation t(int m, int x, int y) { return Permutation::transposition(m, x, y); }

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

void check_m_label(const Partition &alpha, int d, int n) {
    if (n < 2)
        throw IrrepError("kind M irrep: requires n >= 2");
    if (d < 1)
        throw IrrepError("kind M irrep: requires d >= 1");
    if (alpha.weight() != n - 2)
        throw IrrepError("kind M irrep: alpha = (" + to_string(alpha) + ") is not a partition of n-2 = " +
                         std::to_string(n - 2));
    if (alpha.height() > d)
        throw IrrepError("kind M irrep: h(" + to_string(alpha) + ") = " + std::to_string(alpha.height()) +
                         " exceeds d = " + std::to_string(d) + ", so the block is absent");
}

/// n = 2: V(12)^{t_2} acts as d on M.
IrrepOfAlgebra n2_m_irrep(int d, BasisTag basis) {
    IrrepOfAlgebra out{IrrepKind::M, Partition(), 2, d, 1, basis, {}};
    for (const auto &p : all_permutations(2))
        out.images.push_back(Matrix::Constant(1, 1, p.is_identity() ? 1.0 : static_cast<double>(d)));
    return out;
}

long long dimension_formula(int n, int d) {
    long long sum = 0;
    for (const auto &mu : partitions_of(n))
        if (mu.height() <= d)
            sum += mu.dimension() * mu.dimension();
    return sum;
}

} // namespace

std::string to_string(IrrepKind kind) { return kind == IrrepKind::M ? "M" : "S"; }

std::string to_string(BasisTag tag) {
    switch (tag) {
    case BasisTag::f:
        return "f";
    case BasisTag::e:
        return "e";
    default:
        return "none";
    }
}

IrrepKind parse_irrep_kind(std::string_view text) {
    if (text == "M" || text == "m")
        return IrrepKind::M;
    if (text == "S" || text == "s")
        return IrrepKind::S;
    throw std::invalid_argument("unknown irrep kind '" + std::string(text) + "'");
}

BasisTag parse_basis_tag(std::string_view text) {
    if (text == "f")
        return BasisTag::f;
    if (text == "e")
        return BasisTag::e;
    if (text == "none")
        return BasisTag::none;
    throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

const Matrix &IrrepOfAlgebra::image(const Permutation &sigma) const {
    if (sigma.degree() != n)
        throw std::invalid_argument("IrrepOfAlgebra::image: degree mismatch");
    return images[sigma.rank()];
}

bool operator==(const IrrepOfAlgebra &a, const IrrepOfAlgebra &b) {
    if (a.kind != b.kind || a.label != b.label || a.n != b.n || a.d != b.d || a.dimension != b.dimension ||
        a.basis != b.basis || a.images.size() != b.images.size())
        return false;
    for (std::size_t k = 0; k < a.images.size(); ++k)
        if (a.images[k].rows() != b.images[k].rows() || a.images[k].cols() != b.images[k].cols() ||
            a.images[k] != b.images[k])
            return false;
    return true;
}

Matrix IrrepOfAlgebra::image(const Element &x) const {
    const auto &ctx = x.context();
    if (ctx.n != n || ctx.d != d || ctx.symbolic)
        throw std::invalid_argument("IrrepOfAlgebra::image: element context differs from the irrep's (n, d)");
    Matrix out = Matrix::Zero(dimension, dimension);
    for (const auto &[p, c] : x.terms())
        out += c * image(p);
    return out;
}

IrrepOfAlgebra irrep_M_f(const Partition &alpha, int d, int n) {
    check_m_label(alpha, d, n);
    if (n == 2)
        return n2_m_irrep(d, BasisTag::f);

    const SpectralQ s = spectral_q(alpha, d, n);
    const ReducedBasis rb = xa_reduce(s);
    const int w = static_cast<int>(alpha.dimension());
    const auto k = static_cast<Eigen::Index>(rb.surviving.size());
    Matrix zk(rb.z.rows(), k);
    Vector root(k);
    for (Eigen::Index c = 0; c < k; ++c) {
        zk.col(c) = rb.z.col(rb.surviving[static_cast<std::size_t>(c)]);
        root(c) = std::sqrt(rb.lambda(rb.surviving[static_cast<std::size_t>(c)]));
    }

    std::vector<Matrix> transposed; // image of V(an)^{t_n}, a = 1..n-1
    for (int a = 1; a <= n - 1; ++a) {
        const Matrix rows = zk.middleRows((a - 1) * w, w);
        transposed.push_back(root.asDiagonal() * (rows.transpose() * rows) * root.asDiagonal());
    }

    std::vector<std::shared_ptr<const YoungIrrep>> kept;
    for (const auto &b : s.z.blocks)
        if (!(s.theta && b.nu == *s.theta))
            kept.push_back(YoungIrrep::get(b.nu));
    auto restricted_image = [&](const Permutation &p) {
        std::vector<Matrix> blocks;
        for (const auto &psi : kept)
            blocks.push_back(psi->image(p));
        return direct_sum(blocks);
    };

    IrrepOfAlgebra out{IrrepKind::M, alpha, n, d, static_cast<int>(k), BasisTag::f, {}};
    for (const auto &sigma : all_permutations(n)) {
        if (sigma.fixes(n)) {
            out.images.push_back(restricted_image(sigma.restricted(n - 1)));
            continue;
        }
        const int a = classify(sigma).a;
        const Permutation hat = (sigma * t(n, a, n)).restricted(n - 1);
        out.images.push_back(restricted_image(hat) * transposed[static_cast<std::size_t>(a - 1)]);
    }
    return out;
}

std::vector<Matrix> e_basis_images(const Partition &alpha, int d, int n) {
    InducedRep rep(alpha, n);
    auto phi = YoungIrrep::get(alpha);
    const int m = n - 1;
    const int w = rep.w();
    const int dim = rep.block_dimension();
    std::vector<Matrix> out;
    for (const auto &sigma : all_permutations(n)) {
        if (sigma.fixes(n)) {
            out.push_back(rep.image(sigma.restricted(m)));
            continue;
        }
        const auto [a, b] = classify(sigma);
        const Permutation hat = (t(n, b, n) * sigma).restricted(m);
        Matrix img = Matrix::Zero(dim, dim);
        for (int q = 1; q <= m; ++q) {
            const Permutation g = t(m, b, m) * hat * t(m, a, q) * t(m, q, m);
            Matrix block = phi->image(g.restricted(m - 1));
            if (a == q)
                block *= d;
            img.block((b - 1) * w, (q - 1) * w, w, w) = block;
        }
        out.push_back(std::move(img));
    }
    return out;
}

IrrepOfAlgebra irrep_M_e(const Partition &alpha, int d, int n) {
    check_m_label(alpha, d, n);
    if (n == 2)
        return n2_m_irrep(d, BasisTag::e);
    if (auto theta = zero_condition(alpha, d))
        throw IrrepError("irrep_M_e: det Q(" + to_string(alpha) + ") = 0 at d = " + std::to_string(d) +
                         " (the block nu = (" + to_string(*theta) + ") vanishes); use the f-basis");
    const int dim = (n - 1) * static_cast<int>(alpha.dimension());
    return {IrrepKind::M, alpha, n, d, dim, BasisTag::e, e_basis_images(alpha, d, n)};
}

IrrepOfAlgebra irrep_S(const Partition &nu, int d, int n) {
    if (n < 2)
        throw IrrepError("irrep_S: requires n >= 2");
    if (nu.weight() != n - 1)
        throw IrrepError("irrep_S: nu = (" + to_string(nu) + ") is not a partition of n-1 = " + std::to_string(n - 1));
    if (nu.height() >= d)
        throw IrrepError("irrep_S: h(" + to_string(nu) + ") = " + std::to_string(nu.height()) +
                         " is not below d = " + std::to_string(d) + ", so the block is absent");
    auto psi = YoungIrrep::get(nu);
    const int dim = psi->dimension();
    IrrepOfAlgebra out{IrrepKind::S, nu, n, d, dim, BasisTag::none, {}};
    for (const auto &sigma : all_permutations(n))
        out.images.push_back(sigma.fixes(n) ? psi->image(sigma.restricted(n - 1)) : Matrix::Zero(dim, dim));
    return out;
}

std::vector<IrrepOfAlgebra> all_irreps(int n, int d) {
    if (n < 2 || d < 1)
        throw std::invalid_argument("all_irreps: requires n >= 2 and d >= 1");
    std::vector<std::future<IrrepOfAlgebra>> jobs;
    if (n == 2) {
        jobs.push_back(std::async(std::launch::deferred, [d] { return n2_m_irrep(d, BasisTag::f); }));
    } else {
        for (const auto &alpha : partitions_of(n - 2))
            if (alpha.height() <= d)
                jobs.push_back(std::async(std::launch::async, [alpha, d, n] { return irrep_M_f(alpha, d, n); }));
    }
    for (const auto &nu : partitions_of(n - 1))
        if (nu.height() < d)
            jobs.push_back(std::async(std::launch::async, [nu, d, n] { return irrep_S(nu, d, n); }));
    std::vector<IrrepOfAlgebra> out;
    for (auto &job : jobs)
        out.push_back(job.get());
    return out;
}

bool StructureReport::consistent() const {
    return dim_M + dim_S == dim_total && dim_total == dim_formula && (!oracle_dim || *oracle_dim == dim_total);
}

StructureReport structure_report(int n, int d, bool with_oracle) {
    if (n < 2 || d < 1)
        throw std::invalid_argument("structure_report: requires n >= 2 and d >= 1");
    StructureReport r;
    r.n = n;
    r.d = d;
    if (n == 2) {
        r.m_blocks.push_back({Partition(), 1});
    } else {
        for (const auto &alpha : partitions_of(n - 2)) {
            if (alpha.height() > d)
                continue;
            const auto theta = zero_condition(alpha, d);
            const long long full = (n - 1) * alpha.dimension();
            r.m_blocks.push_back({alpha, static_cast<int>(full - (theta ? theta->dimension() : 0))});
        }
    }
    for (const auto &nu : partitions_of(n - 1))
        if (nu.height() < d)
            r.s_blocks.push_back({nu, static_cast<int>(nu.dimension())});
    for (const auto &b : r.m_blocks)
        r.dim_M += static_cast<long long>(b.rank) * b.rank;
    for (const auto &b : r.s_blocks)
        r.dim_S += static_cast<long long>(b.dimension) * b.dimension;
    r.dim_total = r.dim_M + r.dim_S;
    r.dim_formula = dimension_formula(n, d);
    if (with_oracle)
        r.oracle_dim = span_dimension(Oracle(n, d).generators());
    return r;
}

N2Structure n2_special_case(int d) {
    if (d < 2)
        throw IrrepError("n2_special_case: requires d >= 2");
    return {structure_report(2, d), all_irreps(2, d)};
}

Element unit_of_M(int n, int d) {
    if (n < 2 || d < 1)
        throw std::invalid_argument("unit_of_M: requires n >= 2 and d >= 1");
    const auto ctx = AlgebraContext::numeric(n, d);
    if (n == 2)
        return Element::generator(ctx, t(2, 1, 2), 1.0 / d);
    Element e(ctx);
    for (const auto &alpha : partitions_of(n - 2)) {
        if (alpha.height() > d)
            continue;
        const SpectralQ s = spectral_q(alpha, d, n);
        const ReducedBasis rb = xa_reduce(s);
        Matrix c = Matrix::Zero(rb.z.rows(), rb.z.rows());
        for (int k : rb.surviving)
            c += rb.z.col(k) * rb.z.col(k).transpose() / rb.lambda(k);

        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(s.matrix);
        cod.setThreshold(1e-9);
        const double gap = (cod.pseudoInverse() - c).cwiseAbs().maxCoeff();
        if (gap > 1e-8)
            throw SpectralError("unit_of_M: reduced-basis inverse of Q(" + to_string(alpha) +
                                ") differs from its pseudo-inverse by " + std::to_string(gap));

        const auto family = u_family(alpha, ctx);
        for (Eigen::Index i = 0; i < c.rows(); ++i)
            for (Eigen::Index j = 0; j < c.cols(); ++j)
                if (std::abs(c(i, j)) > 1e-14)
                    e += family[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * c(i, j);
    }
    return e;
}

} // namespace ptalg
