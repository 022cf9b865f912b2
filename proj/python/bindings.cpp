#include "ptalg/irreps.hpp"
#include "ptalg/json_io.hpp"
#include "ptalg/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ptalg;

namespace {

Permutation to_perm(const std::vector<int> &images) { return Permutation(images); }

std::vector<int> to_list(const Permutation &p) { return {p.images().begin(), p.images().end()}; }

} // namespace

PYBIND11_MODULE(_ptalg, m) {
    m.doc() = "Partially transposed permutation operator algebras";

    py::register_exception<IrrepError>(m, "IrrepError", PyExc_ValueError);
    py::register_exception<SpectralError>(m, "SpectralError", PyExc_RuntimeError);

    m.def("partitions_of", [](int k) {
        std::vector<std::vector<int>> out;
        for (const auto &p : partitions_of(k))
            out.push_back(p.parts());
        return out;
    });
    m.def("permutations", [](int k) {
        std::vector<std::vector<int>> out;
        for (const auto &p : all_permutations(k))
            out.push_back(to_list(p));
        return out;
    });
    m.def("cycle_string", [](const std::vector<int> &p) { return to_cycle_string(to_perm(p)); });
    m.def("parse_permutation", [](const std::string &text, int k) { return to_list(parse_permutation(text, k)); });
    m.def("mul_generators", [](const std::vector<int> &sigma, const std::vector<int> &rho) {
        const auto g = mul_generators(to_perm(sigma), to_perm(rho));
        return py::make_tuple(g.power, to_list(g.result));
    });

    m.def("q_matrix", [](const std::vector<int> &alpha, int d, int n) { return q_matrix(Partition(alpha), d, n); });
    m.def("spectrum_json", [](const std::vector<int> &alpha, int d, int n) {
        return Json(spectrum_report(spectral_q(Partition(alpha), d, n))).dump();
    });
    m.def("irrep_json", [](const std::string &kind, const std::vector<int> &label, int d, int n,
                           const std::string &basis) {
        const Partition p(label);
        IrrepOfAlgebra irrep;
        if (parse_irrep_kind(kind) == IrrepKind::S)
            irrep = irrep_S(p, d, n);
        else if (parse_basis_tag(basis) == BasisTag::e)
            irrep = irrep_M_e(p, d, n);
        else
            irrep = irrep_M_f(p, d, n);
        return Json(irrep).dump();
    });
    m.def("structure_json", [](int n, int d, bool oracle) { return Json(structure_report(n, d, oracle)).dump(); });
    m.def("verify_json", [](const std::string &suite, int n, int d, double tol) {
        return Json(run_suite(suite, n, d, tol)).dump();
    });
    m.def("unit_of_M", [](int n, int d) {
        std::map<std::string, double> out;
        const Element e = unit_of_M(n, d);
        for (const auto &[sigma, c] : e.terms())
            out[to_cycle_string(sigma)] = c;
        return out;
    });
}
