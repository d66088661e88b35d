#include "oulp/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace oulp;

namespace {

struct Overrides {
    std::string config;
    std::string system;
    int L = 0;
    std::string ebn0;
    std::string tco;
    long long seed = -1;
    std::string out;
    std::string plot;
};

std::vector<double> parse_values(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        size_t used = 0;
        double v = std::stod(cell, &used);
        if (used != cell.size())
            throw std::invalid_argument("bad number '" + cell + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty value list");
    return out;
}

void add_common(CLI::App* sub, Overrides& o)
{
    sub->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--system", o.system, "oulp or ofdm");
    sub->add_option("--L", o.L, "number of subchannels");
    sub->add_option("--ebn0", o.ebn0, "Eb/N0 in dB, comma-separated, 'inf' allowed");
    sub->add_option("--tco", o.tco, "coherence time in seconds, comma-separated, 'inf' allowed");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--out", o.out, "output CSV path (default stdout)");
}

SimConfig resolve(const Overrides& o)
{
    SimConfig c = o.config.empty() ? SimConfig{} : load_config(o.config);
    if (!o.system.empty())
        c.system = system_from_string(o.system);
    if (o.L > 0)
        c.L = o.L;
    if (!o.ebn0.empty())
        c.ebn0_db = parse_values(o.ebn0);
    if (!o.tco.empty())
        c.tco_s = parse_values(o.tco);
    if (o.seed >= 0)
        c.seed = static_cast<std::uint64_t>(o.seed);
    if (!o.out.empty())
        c.out = o.out;
    validate(c);
    return c;
}

void make_parent(const std::string& path)
{
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty())
        std::filesystem::create_directories(parent);
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    make_parent(path);
    std::ofstream out(path);
    if (!out || !(out << text))
        throw std::runtime_error("cannot write '" + path + "'");
}

int finish(const BerRecord& rec, const SimConfig& c, const std::string& plot)
{
    if (c.out.empty() || c.out == "-")
        std::cout << format_results(rec);
    else {
        make_parent(c.out);
        persist_results(rec, c.out);
    }
    if (!plot.empty()) {
        make_parent(plot);
        emit_plot_data(rec, plot);
    }
    for (const auto& f : rec.failures)
        std::cerr << "point ebn0=" << f.ebn0_db << " tco=" << f.tco_s << " failed: " << f.message
                  << "\n";
    return rec.failures.empty() ? 0 : 1;
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"OULP / FBMC link-level simulator"};
    app.require_subcommand(1);

    Overrides ber, coh, xi, probe;
    auto* s_ber = app.add_subcommand("ber-sweep", "BER versus Eb/N0");
    add_common(s_ber, ber);
    s_ber->add_option("--plot", ber.plot, "also write per-curve plot series");
    auto* s_coh = app.add_subcommand("coherence-sweep", "BER versus coherence time at one Eb/N0");
    add_common(s_coh, coh);
    s_coh->add_option("--plot", coh.plot, "also write per-curve plot series");
    auto* s_xi = app.add_subcommand("xi-table", "interference coefficients of the prototype filter");
    add_common(s_xi, xi);
    int span = 4;
    s_xi->add_option("--span", span, "kappa and ell range [-span, span]");
    auto* s_probe = app.add_subcommand("noise-probe", "post-purification noise correlation across slots");
    add_common(s_probe, probe);

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_ber->parsed()) {
            SimConfig c = resolve(ber);
            return finish(run_ber_sweep(c), c, ber.plot);
        }
        if (s_coh->parsed()) {
            SimConfig c = resolve(coh);
            return finish(run_coherence_sweep(c), c, coh.plot);
        }
        if (s_xi->parsed()) {
            SimConfig c = resolve(xi);
            PrototypeFilter f = design_iota(c.L, c.overlap, c.pdp.sample_period_ns * 1e-9);
            std::ostringstream os;
            os << "kappa,ell,parity,re,im\n";
            for (Parity p : {Parity::even, Parity::odd})
                for (int k = -span; k <= span; ++k)
                    for (int l = -span; l <= span; ++l) {
                        cdouble x = xi_coefficient(f, k, l, p);
                        os << k << ',' << l << ',' << (p == Parity::even ? "even" : "odd") << ','
                           << fmt(x.real()) << ',' << fmt(x.imag()) << "\n";
                    }
            write_text(c.out, os.str());
            return 0;
        }
        if (s_probe->parsed()) {
            SimConfig c = resolve(probe);
            PrototypeFilter f = design_iota(c.L, c.overlap, c.pdp.sample_period_ns * 1e-9);
            ProbeResult r = noise_correlation_probe(f, c.probe_lc, c.probe_trials, c.seed, c.workers);
            std::ostringstream os;
            os << "k,empirical,analytic\n";
            for (size_t k = 0; k < r.empirical.size(); ++k)
                os << k << ',' << fmt(r.empirical[k]) << ',' << fmt(r.analytic[k]) << "\n";
            write_text(c.out, os.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
