// ptalg: product tables, Q spectra, irreps, structure reports and
// verification suites for the algebra of partially transposed permutations.

#include "ptalg/json_io.hpp"
#include "ptalg/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ptalg;

namespace {

struct Config {
    int n = 3;
    int d = 2;
    bool symbolic = false;
    std::string alpha;
    std::string nu;
    std::string kind = "m";
    std::string basis = "f";
    std::string format = "text";
    std::string order;
    std::string suite = "all";
    bool oracle = false;
    double tol = 0.0;
    long long cap = 0;
};

std::string power_of_d(int k, const Config &cfg) {
    if (k == 0)
        return "";
    if (cfg.symbolic)
        return k == 1 ? "d" : "d^" + std::to_string(k);
    long long v = 1;
    for (int i = 0; i < k; ++i)
        v *= cfg.d;
    return std::to_string(v);
}

std::string generator_label(const Permutation &p) { return p.is_identity() ? "1" : to_cycle_string(p) + "^t"; }

std::string cell(const GeneratorProduct &g, const Config &cfg) {
    const std::string coef = power_of_d(g.power, cfg);
    if (g.result.is_identity())
        return coef.empty() ? "1" : coef;
    return coef + generator_label(g.result);
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

void print_matrix(std::ostream &os, const Matrix &m, const std::string &indent = "  ") {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        os << indent << "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << std::setw(12) << fmt(m(r, c));
        os << " ]\n";
    }
}

std::vector<Permutation> table_order(const Config &cfg) {
    if (cfg.order.empty())
        return all_permutations(cfg.n);
    std::vector<Permutation> out;
    std::istringstream in(cfg.order);
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            tok = "id";
        if (tok.size() > 2 && tok.substr(tok.size() - 2) == "^t")
            tok.resize(tok.size() - 2);
        out.push_back(parse_permutation(tok, cfg.n));
    }
    return out;
}

int cmd_mul_table(const Config &cfg) {
    if (cfg.order.empty() && cfg.n > 6)
        throw std::invalid_argument("mul-table: n! = " + std::to_string(factorial(cfg.n)) +
                                    " rows is too large; restrict the table with --order");
    const auto gens = table_order(cfg);
    std::vector<std::string> labels;
    for (const auto &g : gens)
        labels.push_back(generator_label(g));
    std::vector<std::vector<std::string>> cells;
    for (const auto &s : gens) {
        cells.emplace_back();
        for (const auto &r : gens)
            cells.back().push_back(cell(mul_generators(s, r), cfg));
    }
    if (cfg.format == "json") {
        Json j{{"n", cfg.n}, {"d", cfg.symbolic ? Json("d") : Json(cfg.d)}, {"generators", labels}, {"cells", cells}};
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "o";
        for (const auto &l : labels)
            std::cout << "," << csv_quote(l);
        std::cout << "\n";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::cout << csv_quote(labels[i]);
            for (const auto &c : cells[i])
                std::cout << "," << csv_quote(c);
            std::cout << "\n";
        }
    } else {
        std::size_t width = 1;
        for (const auto &l : labels)
            width = std::max(width, l.size());
        for (const auto &row : cells)
            for (const auto &c : row)
                width = std::max(width, c.size());
        width += 2;
        std::cout << std::left << std::setw(static_cast<int>(width)) << "o";
        for (const auto &l : labels)
            std::cout << std::setw(static_cast<int>(width)) << l;
        std::cout << "\n";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::cout << std::setw(static_cast<int>(width)) << labels[i];
            for (const auto &c : cells[i])
                std::cout << std::setw(static_cast<int>(width)) << c;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_spectrum(const Config &cfg) {
    if (cfg.alpha.empty())
        throw std::invalid_argument("spectrum: --alpha is required");
    const auto s = spectrum_report(spectral_q(parse_partition(cfg.alpha), cfg.d, cfg.n));
    if (cfg.format == "json") {
        std::cout << Json(s).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "nu,lambda,multiplicity,theta\n";
        for (const auto &ep : s.eigenpairs)
            std::cout << csv_quote(to_string(ep.nu)) << "," << fmt(ep.lambda) << "," << ep.multiplicity << ","
                      << (s.theta && *s.theta == ep.nu ? "yes" : "no") << "\n";
    } else {
        std::cout << "Q(" << to_string(s.alpha) << ") at n = " << s.n << ", d = " << s.d << ":\n";
        print_matrix(std::cout, s.matrix);
        std::cout << "eigenvalues (closed form):\n";
        for (const auto &ep : s.eigenpairs)
            std::cout << "  nu = (" << to_string(ep.nu) << ")  lambda = " << fmt(ep.lambda)
                      << "  multiplicity = " << ep.multiplicity << "\n";
        std::cout << "rank = " << s.rank << "\n";
        std::cout << "theta = " << (s.theta ? "(" + to_string(*s.theta) + ")" : std::string("none")) << "\n";
        std::cout << "closed form vs numerical: max gap " << fmt(s.eigen_residual) << "\n";
    }
    return 0;
}

int cmd_irrep(const Config &cfg) {
    const IrrepKind kind = parse_irrep_kind(cfg.kind);
    IrrepOfAlgebra irrep;
    if (kind == IrrepKind::S) {
        if (cfg.nu.empty())
            throw std::invalid_argument("irrep: kind s needs --nu");
        irrep = irrep_S(parse_partition(cfg.nu), cfg.d, cfg.n);
    } else {
        const Partition alpha = cfg.n == 2 ? Partition() : parse_partition(cfg.alpha);
        if (cfg.n > 2 && cfg.alpha.empty())
            throw std::invalid_argument("irrep: kind m needs --alpha");
        irrep = parse_basis_tag(cfg.basis) == BasisTag::e ? irrep_M_e(alpha, cfg.d, cfg.n)
                                                          : irrep_M_f(alpha, cfg.d, cfg.n);
    }
    if (cfg.format == "json") {
        std::cout << Json(irrep).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "generator,row,col,value\n";
        for (const auto &p : all_permutations(cfg.n)) {
            const Matrix &m = irrep.image(p);
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                for (Eigen::Index c = 0; c < m.cols(); ++c)
                    std::cout << csv_quote(generator_label(p)) << "," << r + 1 << "," << c + 1 << "," << fmt(m(r, c))
                              << "\n";
        }
    } else {
        std::cout << "kind " << to_string(irrep.kind) << ", label (" << to_string(irrep.label) << "), dimension "
                  << irrep.dimension << ", basis " << to_string(irrep.basis) << ", n = " << irrep.n
                  << ", d = " << irrep.d << "\n";
        for (const auto &p : all_permutations(cfg.n)) {
            std::cout << generator_label(p) << ":\n";
            print_matrix(std::cout, irrep.image(p));
        }
    }
    return 0;
}

int cmd_structure(const Config &cfg) {
    const auto r = structure_report(cfg.n, cfg.d, cfg.oracle);
    if (cfg.format == "json") {
        std::cout << Json(r).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "ideal,label,size\n";
        for (const auto &b : r.m_blocks)
            std::cout << "M," << csv_quote(to_string(b.alpha)) << "," << b.rank << "\n";
        for (const auto &b : r.s_blocks)
            std::cout << "S," << csv_quote(to_string(b.nu)) << "," << b.dimension << "\n";
    } else {
        auto blocks = [](const std::vector<std::pair<std::string, int>> &bs) {
            std::string out;
            for (const auto &[label, size] : bs)
                out += (out.empty() ? "" : " + ") + (size == 1 ? std::string("C") : "M(" + std::to_string(size) + ")") +
                       " [" + label + "]";
            return out.empty() ? std::string("0") : out;
        };
        std::vector<std::pair<std::string, int>> m, s;
        for (const auto &b : r.m_blocks)
            m.emplace_back("(" + to_string(b.alpha) + ")", b.rank);
        for (const auto &b : r.s_blocks)
            s.emplace_back("(" + to_string(b.nu) + ")", b.dimension);
        std::cout << "n = " << r.n << ", d = " << r.d << "\n";
        std::cout << "M = " << blocks(m) << "   dim " << r.dim_M << "\n";
        std::cout << "S = " << blocks(s) << "   dim " << r.dim_S << "\n";
        std::cout << "total = " << r.dim_total << ", partition sum = " << r.dim_formula;
        if (r.oracle_dim)
            std::cout << ", oracle span = " << *r.oracle_dim;
        std::cout << (r.consistent() ? "  (consistent)" : "  (INCONSISTENT)") << "\n";
    }
    return r.consistent() ? 0 : 1;
}

int cmd_verify(const Config &cfg) {
    const auto reports = run_suite(cfg.suite, cfg.n, cfg.d, cfg.tol);
    int failures = 0;
    for (const auto &r : reports)
        failures += !r.pass;
    if (cfg.format == "json") {
        std::cout << Json{{"suite", cfg.suite}, {"n", cfg.n}, {"d", cfg.d}, {"failures", failures}, {"reports", reports}}
                         .dump(2)
                  << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "check,params,pass,max_residual,details\n";
        for (const auto &r : reports)
            std::cout << csv_quote(r.check) << "," << csv_quote(r.params.dump()) << "," << (r.pass ? "pass" : "fail")
                      << "," << r.max_residual << "," << csv_quote(r.details) << "\n";
    } else {
        for (const auto &r : reports)
            std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.check << " "
                      << std::setw(40) << r.params.dump() << " residual " << std::setw(10) << std::setprecision(3)
                      << r.max_residual << "  " << r.details << "\n";
        std::cout << reports.size() - static_cast<std::size_t>(failures) << "/" << reports.size() << " checks passed\n";
    }
    return std::min(failures, 125);
}

void add_common(CLI::App *sub, Config &cfg, bool with_d = true) {
    sub->add_option("n,--n", cfg.n, "Number of tensor factors")->check(CLI::Range(2, 12));
    if (with_d)
        sub->add_option("d,--d", cfg.d, "Local dimension")->check(CLI::Range(1, 1000));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Partially transposed permutation operators: tables, spectra, irreps, structure, verification"};
    app.require_subcommand(1);
    Config cfg;
    double tol = 0.0;
    long long cap = 0;
    app.add_option("--tol", tol, "Tolerance override for verification")->check(CLI::PositiveNumber);
    app.add_option("--cap", cap, "Oracle size cap on d^n (default from PTALG_ORACLE_CAP or 4096)")
        ->check(CLI::PositiveNumber);

    auto *mul = app.add_subcommand("mul-table", "Product table of the generators");
    add_common(mul, cfg);
    mul->add_flag("--symbolic", cfg.symbolic, "Keep d symbolic");
    mul->add_option("--order", cfg.order, "Space-separated generators to tabulate, e.g. \"id (132) (12)\"");

    auto *spectrum = app.add_subcommand("spectrum", "Q(alpha), its closed-form spectrum, rank and theta");
    add_common(spectrum, cfg);
    spectrum->add_option("--alpha", cfg.alpha, "Partition of n-2, e.g. 2,1")->required();

    auto *irrep = app.add_subcommand("irrep", "Images of all generators in one irrep");
    add_common(irrep, cfg);
    irrep->add_option("--kind", cfg.kind, "m or s")->check(CLI::IsMember({"m", "s", "M", "S"}));
    irrep->add_option("--alpha", cfg.alpha, "Partition of n-2 (kind m)");
    irrep->add_option("--nu", cfg.nu, "Partition of n-1 (kind s)");
    irrep->add_option("--basis", cfg.basis, "f or e (kind m)")->check(CLI::IsMember({"f", "e"}));

    auto *structure = app.add_subcommand("structure", "Block decomposition into the ideals M and S");
    add_common(structure, cfg);
    structure->add_flag("--oracle", cfg.oracle, "Also measure the span dimension of the operators");

    auto *verify = app.add_subcommand("verify", "Run verification suites");
    add_common(verify, cfg);
    verify->add_option("--suite", cfg.suite, "all, mul, spectra, irreps, dims or appc")
        ->check(CLI::IsMember({"all", "mul", "spectra", "irreps", "dims", "appc"}));

    CLI11_PARSE(app, argc, argv);
    cfg.tol = tol;
    if (cap > 0)
        setenv("PTALG_ORACLE_CAP", std::to_string(cap).c_str(), 1);

    try {
        if (cfg.symbolic && !mul->parsed())
            throw std::invalid_argument("--symbolic is only valid for mul-table");
        if (mul->parsed())
            return cmd_mul_table(cfg);
        if (spectrum->parsed())
            return cmd_spectrum(cfg);
        if (irrep->parsed())
            return cmd_irrep(cfg);
        if (structure->parsed())
            return cmd_structure(cfg);
        return cmd_verify(cfg);
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << " (raise it with --cap)\n";
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}
