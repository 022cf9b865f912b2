#include "ptalg/json_io.hpp"

namespace ptalg {

namespace {

bool same_matrix(const Matrix &a, const Matrix &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

} // namespace

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json &j) {
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto &row = j.at(static_cast<std::size_t>(r));
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("matrix_from_json: ragged rows");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
    }
    return m;
}

void to_json(Json &j, const Partition &p) { j = p.parts(); }

void from_json(const Json &j, Partition &p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(Json &j, const IrrepOfAlgebra &x) {
    Json images = Json::object();
    for (const auto &p : all_permutations(x.n))
        images[to_cycle_string(p)] = matrix_to_json(x.image(p));
    j = Json{{"kind", to_string(x.kind)},
             {"label", x.label},
             {"n", x.n},
             {"d", x.d},
             {"dimension", x.dimension},
             {"basis_tag", to_string(x.basis)},
             {"images", std::move(images)}};
}

void from_json(const Json &j, IrrepOfAlgebra &x) {
    x.kind = parse_irrep_kind(j.at("kind").get<std::string>());
    x.label = j.at("label").get<Partition>();
    x.n = j.at("n").get<int>();
    x.d = j.at("d").get<int>();
    x.dimension = j.at("dimension").get<int>();
    x.basis = parse_basis_tag(j.at("basis_tag").get<std::string>());
    const auto perms = all_permutations(x.n);
    x.images.assign(perms.size(), Matrix());
    const auto &images = j.at("images");
    if (images.size() != perms.size())
        throw std::invalid_argument("irrep record: expected one image per permutation");
    for (const auto &[key, value] : images.items())
        x.images[parse_permutation(key, x.n).rank()] = matrix_from_json(value);
}

void to_json(Json &j, const StructureReport &x) {
    Json m = Json::array(), s = Json::array();
    for (const auto &b : x.m_blocks)
        m.push_back({{"alpha", b.alpha}, {"rank", b.rank}});
    for (const auto &b : x.s_blocks)
        s.push_back({{"nu", b.nu}, {"dimension", b.dimension}});
    j = Json{{"n", x.n},
             {"d", x.d},
             {"m_blocks", std::move(m)},
             {"s_blocks", std::move(s)},
             {"dim_M", x.dim_M},
             {"dim_S", x.dim_S},
             {"dim_total", x.dim_total},
             {"dim_formula", x.dim_formula},
             {"oracle_dim", x.oracle_dim ? Json(*x.oracle_dim) : Json(nullptr)},
             {"consistent", x.consistent()}};
}

void from_json(const Json &j, StructureReport &x) {
    x.n = j.at("n").get<int>();
    x.d = j.at("d").get<int>();
    x.m_blocks.clear();
    x.s_blocks.clear();
    for (const auto &b : j.at("m_blocks"))
        x.m_blocks.push_back({b.at("alpha").get<Partition>(), b.at("rank").get<int>()});
    for (const auto &b : j.at("s_blocks"))
        x.s_blocks.push_back({b.at("nu").get<Partition>(), b.at("dimension").get<int>()});
    x.dim_M = j.at("dim_M").get<long long>();
    x.dim_S = j.at("dim_S").get<long long>();
    x.dim_total = j.at("dim_total").get<long long>();
    x.dim_formula = j.at("dim_formula").get<long long>();
    const auto &o = j.at("oracle_dim");
    x.oracle_dim = o.is_null() ? std::nullopt : std::optional<long long>(o.get<long long>());
}

void to_json(Json &j, const VerificationReport &x) {
    j = Json{{"check", x.check},
             {"params", x.params},
             {"pass", x.pass},
             {"max_residual", x.max_residual},
             {"details", x.details}};
}

void from_json(const Json &j, VerificationReport &x) {
    x.check = j.at("check").get<std::string>();
    x.params = j.at("params");
    x.pass = j.at("pass").get<bool>();
    x.max_residual = j.at("max_residual").get<double>();
    x.details = j.at("details").get<std::string>();
}

bool operator==(const SpectrumReport &a, const SpectrumReport &b) {
    return a.alpha == b.alpha && a.n == b.n && a.d == b.d && same_matrix(a.matrix, b.matrix) &&
           a.eigenpairs == b.eigenpairs && a.rank == b.rank && a.theta == b.theta &&
           a.numerical_eigenvalues == b.numerical_eigenvalues && a.eigen_residual == b.eigen_residual;
}

SpectrumReport spectrum_report(const SpectralQ &s) {
    SpectrumReport r;
    r.alpha = s.alpha;
    r.n = s.n;
    r.d = s.d;
    r.matrix = s.matrix;
    r.eigenpairs = s.eigenpairs;
    r.rank = s.rank;
    r.theta = s.theta;
    r.numerical_eigenvalues.assign(s.numerical_eigenvalues.data(),
                                   s.numerical_eigenvalues.data() + s.numerical_eigenvalues.size());
    r.eigen_residual = s.eigen_residual;
    return r;
}

void to_json(Json &j, const SpectrumReport &x) {
    Json pairs = Json::array();
    for (const auto &ep : x.eigenpairs)
        pairs.push_back({{"nu", ep.nu}, {"lambda", ep.lambda}, {"mult", ep.multiplicity}});
    j = Json{{"alpha", x.alpha},
             {"n", x.n},
             {"d", x.d},
             {"matrix", matrix_to_json(x.matrix)},
             {"eigenpairs", std::move(pairs)},
             {"rank", x.rank},
             {"theta", x.theta ? Json(*x.theta) : Json(nullptr)},
             {"numerical_eigenvalues", x.numerical_eigenvalues},
             {"eigen_residual", x.eigen_residual}};
}

void from_json(const Json &j, SpectrumReport &x) {
    x.alpha = j.at("alpha").get<Partition>();
    x.n = j.at("n").get<int>();
    x.d = j.at("d").get<int>();
    x.matrix = matrix_from_json(j.at("matrix"));
    x.eigenpairs.clear();
    for (const auto &ep : j.at("eigenpairs"))
        x.eigenpairs.push_back({ep.at("nu").get<Partition>(), ep.at("lambda").get<double>(), ep.at("mult").get<int>()});
    x.rank = j.at("rank").get<int>();
    const auto &theta = j.at("theta");
    x.theta = theta.is_null() ? std::nullopt : std::optional<Partition>(theta.get<Partition>());
    x.numerical_eigenvalues = j.at("numerical_eigenvalues").get<std::vector<double>>();
    x.eigen_residual = j.at("eigen_residual").get<double>();
}

} // namespace ptalg
