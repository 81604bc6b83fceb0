#include "darcais/cli.hpp"
#include "darcais/cyclo.hpp"
#include "darcais/gfp.hpp"
#include "darcais/hooks.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/roots.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace darcais;

namespace {

// Arbitrary-precision values cross the boundary as decimal strings; the
// python wrapper turns them back into ints.
std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    for (long k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_str());
    return out;
}

IntPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return IntPoly(std::move(c));
}

std::string report_json(const Report& r) { return r.to_line(); }

} // namespace

PYBIND11_MODULE(_darcais, m) {
    m.doc() = "Exact arithmetic for D'Arcais polynomials";

    m.def("darcais_coeffs", [](const std::string& g_spec, long N) {
        auto A = darcais_sequence(ArithFn::parse(g_spec), N);
        std::vector<std::vector<std::string>> out;
        out.reserve(A.size());
        for (const auto& a : A) out.push_back(coeff_strings(a));
        return out;
    }, py::arg("g") = "sigma", py::arg("n"));

    m.def("eval_A", [](const std::string& g_spec, long n, const std::string& x) {
        auto A = darcais_sequence(ArithFn::parse(g_spec), n);
        return A[n].eval(Int(x)).get_str();
    }, py::arg("g"), py::arg("n"), py::arg("x"));

    m.def("product_expansion", [](long r, long N) {
        std::vector<std::string> out;
        for (const auto& v : product_expansion_oracle(r, N)) out.push_back(v.get_str());
        return out;
    }, py::arg("r"), py::arg("n"));

    m.def("cyclotomic", [](long mval) {
        return coeff_strings(cyclotomic_poly(mval));
    }, py::arg("m"));

    m.def("partition_count", [](long n) { return partitions(n).size(); }, py::arg("n"));

    m.def("hook_lengths", [](const std::vector<long>& parts) {
        return hook_multiset(Partition{parts});
    }, py::arg("parts"));

    m.def("inertial", [](long p, long mval) {
        auto sd = inertial_data(p, mval);
        return py::make_tuple(sd.e, sd.f, sd.g_count);
    }, py::arg("p"), py::arg("m"));

    m.def("min_poly", [](long mval, const std::vector<std::string>& coords) {
        std::vector<Int> c;
        for (const auto& s : coords) c.emplace_back(s);
        auto mp = min_poly(CycloElem::from_coords(mval, std::move(c)));
        return py::make_tuple(coeff_strings(mp.poly), mp.primitive);
    }, py::arg("m"), py::arg("coords"));

    m.def("verify_pentagonal", [](long N) {
        return report_json(pentagonal_pattern_check(N));
    }, py::arg("n"));

    m.def("verify_periodicity", [](const std::string& g, std::uint64_t p, long N) {
        return report_json(verify_periodicity(ArithFn::parse(g), p, N));
    }, py::arg("g"), py::arg("p"), py::arg("n"));

    m.def("verify_zmija", [](const std::string& g) {
        return report_json(zmija_conditions(ArithFn::parse(g)));
    }, py::arg("g") = "sigma");

    m.def("verify_roots_of_unity", [](const std::string& g, long N, long M) {
        return report_json(verify_roots_of_unity(ArithFn::parse(g), N, M));
    }, py::arg("g"), py::arg("n"), py::arg("m"));

    m.def("certify", [](const std::vector<std::string>& minpoly, const std::string& g,
                        std::uint64_t p) {
        return report_json(
            modp_nonvanishing_certificate(poly_from_strings(minpoly), ArithFn::parse(g), p));
    }, py::arg("minpoly"), py::arg("g"), py::arg("p"));

    m.def("verify_hooklength", [](long n) {
        return report_json(verify_hook_length_identity(n));
    }, py::arg("n"));

    m.def("factor_modp", [](const std::vector<std::string>& coeffs, std::uint64_t p) {
        auto fl = factor_gfp(reduce_mod_p(poly_from_strings(coeffs), p));
        std::vector<std::pair<std::vector<std::uint64_t>, long>> out;
        for (const auto& fac : fl.factors)
            out.emplace_back(fac.poly.coeffs(), fac.multiplicity);
        return out;
    }, py::arg("coeffs"), py::arg("p"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"darcais"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
