#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casson/circle_bundle.hpp"
#include "casson/cli/run.hpp"
#include "casson/cup_ring.hpp"
#include "casson/equivariant.hpp"
#include "casson/errors.hpp"
#include "casson/floer.hpp"
#include "casson/seifert.hpp"
#include "casson/surgery.hpp"

namespace py = pybind11;
using namespace casson;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::int_ integer(const Integer& z)
{
    return py::int_(py::str(z.get_str()));
}

Integer from_py(const py::int_& z)
{
    return Integer(py::str(z).cast<std::string>());
}

SeifertMatrix knot(const Rows& rows)
{
    return SeifertMatrix(rows);
}

SurgeryPresentation presentation(const std::vector<std::pair<Rows, py::int_>>& steps)
{
    SurgeryPresentation p;
    for (const auto& [rows, q] : steps)
        p.steps.push_back({SeifertMatrix(rows), from_py(q)});
    return p;
}

std::array<long, kFloerGradings> ranks8(const std::vector<long>& ranks)
{
    if (ranks.size() != kFloerGradings)
        throw Error(ErrorCode::SizeMismatch, "expected 8 ranks");
    std::array<long, kFloerGradings> r{};
    std::copy(ranks.begin(), ranks.end(), r.begin());
    return r;
}

CupRing ring(const std::string& name)
{
    if (name == "T4")
        return presets::torus_ring();
    if (name == "S1xT3")
        return product_ring(presets::three_torus());
    if (name == "S1x#3(S1xS2)")
        return product_ring(presets::connected_sum_s1xs2());
    throw Error(ErrorCode::InvalidArgument, "unknown ring preset " + name);
}

} // namespace

PYBIND11_MODULE(_casson, m)
{
    m.doc() = "Exact Casson-type invariants";

    // Messages carry the error code as a "Code: " prefix.
    py::register_exception<Error>(m, "CassonError", PyExc_ValueError);

    m.def("preset", [](const std::string& name) { return presets::by_name(name).rows(); }, py::arg("name"));
    m.def("preset_names", &presets::names);
    m.def("torus_knot_seifert", [](int p, int q) { return torus_knot_seifert(p, q).rows(); });
    m.def("mirror", [](const Rows& s) { return mirror(knot(s)).rows(); });
    m.def("connected_sum", [](const Rows& a, const Rows& b) { return connected_sum(knot(a), knot(b)).rows(); });

    m.def(
        "alexander_polynomial",
        [](const Rows& s) {
            py::dict out;
            const auto d = alexander_polynomial(knot(s));
            for (const auto& [e, c] : d.terms())
                out[py::int_(e)] = integer(c);
            return out;
        },
        "Alexander polynomial as {exponent: coefficient}.");
    m.def("alexander_string", [](const Rows& s) { return alexander_polynomial(knot(s)).to_string(); });
    m.def("tl_signature", [](const Rows& s, long num, int den) { return tl_signature(knot(s), num, den); },
          py::arg("seifert"), py::arg("num"), py::arg("den"));
    m.def("signature_spectrum", [](const Rows& s, int n) { return signature_spectrum(knot(s), n).values; });
    m.def("arf_invariant", [](const Rows& s) { return arf_invariant(knot(s)); });

    m.def("casson", [](const std::vector<std::pair<Rows, py::int_>>& steps) { return integer(casson::casson(presentation(steps))); });
    m.def("rohlin", [](const std::vector<std::pair<Rows, py::int_>>& steps) { return rohlin(presentation(steps)); });
    m.def("mubar_double_branched", [](const Rows& s) { return fraction(mubar_double_branched(knot(s))); });
    m.def("rohlin_double_branched", [](const Rows& s) { return rohlin_double_branched(knot(s)); });

    m.def(
        "equivariant_casson_branched",
        [](int n, const py::int_& quotient_casson, const std::vector<long>& spectrum) {
            BranchedQuotientData d{n, from_py(quotient_casson), SignatureSpectrum{n, spectrum}};
            d.validate();
            return fraction(equivariant_casson_branched(d));
        },
        py::arg("n"), py::arg("quotient_casson"), py::arg("spectrum"));
    m.def(
        "equivariant_casson_free",
        [](int n, const py::int_& q, const py::int_& base_casson, const Rows& s) {
            FreeQuotientData d{n, from_py(q), from_py(base_casson), knot(s)};
            d.validate();
            return fraction(equivariant_casson_free(d));
        },
        py::arg("n"), py::arg("q"), py::arg("base_casson"), py::arg("knot"));

    m.def("lefschetz", [](const std::vector<long>& ranks, const std::string& token) {
        FloerMap map = token == "-id" ? FloerMap{MinusIdentityMap{}} : FloerMap{IdentityMap{}};
        return integer(lefschetz(FloerData::uniform(ranks8(ranks), map)));
    }, py::arg("ranks"), py::arg("maps") = "id");
    m.def("deduce_sign_pattern", [](const std::vector<long>& ranks, long target) {
        const auto p = deduce_sign_pattern(ranks8(ranks), target);
        return std::vector<int>(p.begin(), p.end());
    });
    m.def("seifert_tau_lefschetz", [](long b1, long b3, long b5, long b7) {
        return integer(seifert_tau_lefschetz(b1, b3, b5, b7));
    });

    m.def("det4", [](const std::string& name) { return det4(ring(name)); });
    m.def("four_orbit_count", [](const std::string& name, unsigned w) {
        return four_orbit_count(ring(name), static_cast<H2Class>(w));
    });
    m.def("donaldson_mod2", [](const std::string& name, unsigned w) {
        return donaldson_mod2(ring(name), static_cast<H2Class>(w));
    });
    m.def("admissible", [](const std::string& name, unsigned w) { return admissible(ring(name), static_cast<H2Class>(w)); });

    m.def("circle_bundle_rho", [](const Rows& s, long euler) {
        return integer(circle_bundle_rho({knot(s), euler}).value);
    }, py::arg("seifert"), py::arg("euler") = 1);
    m.def("circle_bundle_furuta_ohta", [](const Rows& s, long euler) {
        return integer(circle_bundle_furuta_ohta({knot(s), euler}).value);
    }, py::arg("seifert"), py::arg("euler") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Runs the command line; returns (exit_code, stdout, stderr).");
}
