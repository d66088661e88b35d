#include "oulp/harness.hpp"
#include "oulp/modem.hpp"
#include "oulp/prototype.hpp"
#include "oulp/qam.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace oulp;

namespace {

Parity to_parity(const std::string& p)
{
    if (p == "even")
        return Parity::even;
    if (p == "odd")
        return Parity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd', got '" + p + "'");
}

py::list points_of(const BerRecord& r)
{
    py::list out;
    for (const auto& p : r.points) {
        py::dict d;
        d["system"] = p.system;
        d["L"] = p.L;
        d["Nt"] = p.Nt;
        d["Nr"] = p.Nr;
        d["ebn0_db"] = p.ebn0_db;
        d["tco_s"] = p.tco_s;
        d["bits"] = p.bits;
        d["errors"] = p.errors;
        d["ber"] = p.ber;
        d["seconds"] = p.seconds;
        out.append(d);
    }
    return out;
}

py::dict record_of(const BerRecord& r)
{
    py::dict d;
    d["axis"] = r.axis;
    d["points"] = points_of(r);
    py::list fails;
    for (const auto& f : r.failures)
        fails.append(py::make_tuple(f.ebn0_db, f.tco_s, f.message));
    d["failures"] = fails;
    d["csv"] = format_results(r);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "FBMC/OULP link-level simulator";

    py::register_exception<DesignError>(m, "DesignError", PyExc_RuntimeError);

    py::class_<PrototypeFilter>(m, "PrototypeFilter")
        .def_readonly("coeffs", &PrototypeFilter::coeffs)
        .def_readonly("L", &PrototypeFilter::L)
        .def_readonly("overlap", &PrototypeFilter::overlap)
        .def_readonly("sample_period", &PrototypeFilter::sample_period)
        .def_property_readonly("support", &PrototypeFilter::support)
        .def("residual", &orthogonality_residual)
        .def("__repr__", [](const PrototypeFilter& f) {
            return "<PrototypeFilter L=" + std::to_string(f.L) + " overlap=" + std::to_string(f.overlap) +
                   " support=" + std::to_string(f.support()) + ">";
        });

    m.def("design_iota", &design_iota, py::arg("L"), py::arg("overlap") = kDefaultOverlap,
          py::arg("sample_period") = 100e-9);
    m.def(
        "xi_coefficient",
        [](const PrototypeFilter& f, int kappa, int ell, const std::string& parity) {
            return xi_coefficient(f, kappa, ell, to_parity(parity));
        },
        py::arg("f"), py::arg("kappa"), py::arg("ell"), py::arg("parity") = "even");
    m.def(
        "xi_row",
        [](const PrototypeFilter& f, int kappa, const std::string& parity) {
            return xi_row(f, kappa, to_parity(parity));
        },
        py::arg("f"), py::arg("kappa"), py::arg("parity") = "even");
    m.def(
        "gain_vector",
        [](const PrototypeFilter& f, int kappa, const std::string& parity, int delta) {
            return gain_vector_v(f, kappa, to_parity(parity), delta);
        },
        py::arg("f"), py::arg("kappa") = 0, py::arg("parity") = "even", py::arg("delta") = 1);

    py::class_<TimeDomainSignal>(m, "Signal")
        .def_readonly("samples", &TimeDomainSignal::samples)
        .def_readonly("origin", &TimeDomainSignal::origin)
        .def("__len__", &TimeDomainSignal::length);

    py::class_<OulpTransceiver>(m, "Transceiver")
        .def(py::init<PrototypeFilter, int>(), py::arg("f"), py::arg("delta") = 1)
        .def_property_readonly("L", &OulpTransceiver::L)
        .def_property_readonly("tx_gain", &OulpTransceiver::tx_gain)
        .def(
            "transmit",
            [](const OulpTransceiver& t, const std::vector<CVec>& Q, double amplitude) {
                return t.transmit(Q, amplitude);
            },
            py::arg("Q"), py::arg("amplitude") = 1.0)
        .def(
            "analyze",
            [](const OulpTransceiver& t, const TimeDomainSignal& s, long k) {
                return analyze_slot(s, t.filter(), k);
            },
            py::arg("signal"), py::arg("k"))
        .def(
            "receive_slot",
            [](const OulpTransceiver& t, const CVec& r, const CVec& taps, double N0, long k, double amplitude) {
                return t.receive_slot({r}, {{taps}}, N0, k, amplitude)[0];
            },
            py::arg("r"), py::arg("taps") = CVec{1.0}, py::arg("N0") = 0.0, py::arg("k") = 0,
            py::arg("amplitude") = 1.0);

    m.def("qam16_constellation", &qam16_constellation);
    m.def("qam16_map", &qam16_map, py::arg("bits"));
    m.def("qam16_demap", &qam16_demap, py::arg("symbols"));
    m.def("noise_power", &noise_power, py::arg("ebn0_db"), py::arg("bits_per_symbol") = 4);

    m.def(
        "check_config", [](const std::string& text) { parse_config(text); }, py::arg("text"),
        "Parse and validate a JSON config; raises ValueError on unknown keys or bad values.");
    m.def(
        "ber_sweep",
        [](const std::string& text) {
            SimConfig c = parse_config(text);
            BerRecord r;
            {
                py::gil_scoped_release nogil;
                r = run_ber_sweep(c);
            }
            return record_of(r);
        },
        py::arg("config"));
    m.def(
        "coherence_sweep",
        [](const std::string& text) {
            SimConfig c = parse_config(text);
            BerRecord r;
            {
                py::gil_scoped_release nogil;
                r = run_coherence_sweep(c);
            }
            return record_of(r);
        },
        py::arg("config"));
    m.def(
        "noise_probe",
        [](const PrototypeFilter& f, int Lc, int trials, std::uint64_t seed, int workers) {
            ProbeResult r;
            {
                py::gil_scoped_release nogil;
                r = noise_correlation_probe(f, Lc, trials, seed, workers);
            }
            return py::make_tuple(r.empirical, r.analytic);
        },
        py::arg("f"), py::arg("Lc") = 1, py::arg("trials") = 100000, py::arg("seed") = 1,
        py::arg("workers") = 0);
}
