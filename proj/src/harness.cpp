#include "oulp/harness.hpp"

#include "oulp/fft.hpp"
#include "oulp/qam.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace oulp {

const char* const kCsvHeader = "system,L,Nt,Nr,ebn0_db,tco_s,bits,errors,ber,seconds";

std::string to_string(SystemKind s) { return s == SystemKind::oulp ? "oulp" : "ofdm"; }

SystemKind system_from_string(const std::string& s)
{
    if (s == "oulp")
        return SystemKind::oulp;
    if (s == "ofdm")
        return SystemKind::ofdm;
    throw std::invalid_argument("unknown system '" + s + "' (expected oulp or ofdm)");
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

template <class Fn>
void parallel_for(int n, int workers, Fn&& fn)
{
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next++; i < n; i = next++)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

double parse_real(const nlohmann::json& v, const std::string& key)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "infinity")
            return std::numeric_limits<double>::infinity();
    }
    throw std::invalid_argument("config key '" + key + "' expects a number or \"inf\"");
}

std::vector<double> parse_list(const nlohmann::json& v, const std::string& key)
{
    std::vector<double> out;
    if (v.is_array())
        for (const auto& e : v)
            out.push_back(parse_real(e, key));
    else
        out.push_back(parse_real(v, key));
    return out;
}

std::string fmt_real(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

SimConfig parse_config(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text, nullptr, true, true);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config must be an object");

    SimConfig c;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const auto& v = it.value();
        try {
            if (k == "system")
                c.system = system_from_string(v.get<std::string>());
            else if (k == "L")
                c.L = v.get<int>();
            else if (k == "overlap")
                c.overlap = v.get<int>();
            else if (k == "delta")
                c.delta = v.get<int>();
            else if (k == "modulation")
                c.modulation = v.get<std::string>();
            else if (k == "Nt")
                c.Nt = v.get<int>();
            else if (k == "Nr")
                c.Nr = v.get<int>();
            else if (k == "stbc") {
                std::string s = v.get<std::string>();
                if (s == "alamouti")
                    c.stbc = StbcCode::alamouti;
                else if (s == "none")
                    c.stbc = StbcCode::uncoded;
                else
                    throw std::invalid_argument("stbc must be alamouti or none");
            } else if (k == "pdp") {
                if (!v.is_object())
                    throw std::invalid_argument("pdp must be an object");
                for (auto p = v.begin(); p != v.end(); ++p) {
                    if (p.key() == "gains_db")
                        c.pdp.gains_db = p.value().get<std::vector<double>>();
                    else if (p.key() == "delays_ns")
                        c.pdp.delays_ns = p.value().get<std::vector<double>>();
                    else if (p.key() == "sample_period_ns")
                        c.pdp.sample_period_ns = p.value().get<double>();
                    else
                        throw std::invalid_argument("unknown key 'pdp." + p.key() + "'");
                }
            } else if (k == "fading")
                c.fading = v.get<bool>();
            else if (k == "tco_s")
                c.tco_s = parse_list(v, k);
            else if (k == "ebn0_db")
                c.ebn0_db = parse_list(v, k);
            else if (k == "target_errors")
                c.target_errors = v.get<std::uint64_t>();
            else if (k == "max_bits")
                c.max_bits = v.get<std::uint64_t>();
            else if (k == "seed")
                c.seed = v.get<std::uint64_t>();
            else if (k == "out")
                c.out = v.get<std::string>();
            else if (k == "frame_slots")
                c.frame_slots = v.get<int>();
            else if (k == "cp_len")
                c.cp_len = v.get<int>();
            else if (k == "workers")
                c.workers = v.get<int>();
            else if (k == "batch_frames")
                c.batch_frames = v.get<int>();
            else if (k == "probe_trials")
                c.probe_trials = v.get<int>();
            else if (k == "probe_lc")
                c.probe_lc = v.get<int>();
            else
                throw std::invalid_argument("unknown config key '" + k + "'");
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config key '" + k + "': " + e.what());
        }
    }
    validate(c);
    return c;
}

SimConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void validate(const SimConfig& c)
{
    auto fail = [](const std::string& m) { throw std::invalid_argument("invalid config: " + m); };
    if (c.L < 8 || c.L % 4 != 0)
        fail("L must be >= 8 and divisible by 4");
    if (c.overlap < 3)
        fail("overlap must be >= 3");
    if (c.delta < 1 || 2 * c.delta + 1 > c.L)
        fail("delta out of range");
    if (c.modulation != "16qam")
        fail("only 16qam modulation is supported");
    if (c.Nt < 1 || c.Nt > 2 || c.Nr < 1)
        fail("Nt must be 1 or 2 and Nr >= 1");
    if (c.stbc == StbcCode::alamouti && c.Nt != 2)
        fail("alamouti requires Nt = 2");
    if (c.frame_slots < 2 || (c.stbc == StbcCode::alamouti && c.frame_slots % 2 != 0))
        fail("frame_slots must be >= 2 (even for alamouti)");
    if (c.tco_s.empty() || c.ebn0_db.empty())
        fail("sweep lists must be nonempty");
    for (double t : c.tco_s)
        if (!(t > 0.0))
            fail("coherence times must be positive");
    for (double e : c.ebn0_db)
        if (std::isnan(e))
            fail("Eb/N0 must be a number");
    if (c.max_bits == 0 || c.target_errors == 0)
        fail("max_bits and target_errors must be positive");
    if (c.cp_len < 0 || c.cp_len > c.L)
        fail("cp_len out of range");
    if (c.batch_frames < 1)
        fail("batch_frames must be positive");
    if (c.probe_lc < 1 || c.probe_lc > c.L / 2)
        fail("probe_lc out of range");
}

double noise_power(double ebn0_db, int bits_per_symbol)
{
    if (std::isinf(ebn0_db) && ebn0_db > 0)
        return 0.0;
    return 1.0 / (bits_per_symbol * std::pow(10.0, ebn0_db / 10.0));
}

Link::Link(const SimConfig& cfg) : cfg_(cfg), pdp_(discretize_pdp(cfg.pdp))
{
    validate(cfg_);
    if (pdp_.collision)
        std::cerr << "warning: power-delay profile taps share a delay bin\n";
    if (cfg_.system == SystemKind::oulp) {
        if (pdp_.Lc() > cfg_.L / 2)
            throw std::invalid_argument("channel length exceeds L/2");
        oulp_ = std::make_shared<OulpTransceiver>(
            design_iota(cfg_.L, cfg_.overlap, cfg_.pdp.sample_period_ns * 1e-9), cfg_.delta);
    } else {
        ofdm_ = {cfg_.L, cfg_.cp_len};
        if (!cp_covers(ofdm_, pdp_.Lc()))
            std::cerr << "warning: cyclic prefix " << ofdm_.cp_len << " shorter than channel length "
                      << pdp_.Lc() << " - 1; residual ISI expected\n";
    }
}

std::uint64_t Link::bits_per_frame() const
{
    const std::uint64_t per_slot = cfg_.system == SystemKind::oulp ? cfg_.L / 2 : cfg_.L;
    const std::uint64_t streams = cfg_.stbc == StbcCode::alamouti ? 1 : cfg_.Nt;
    return static_cast<std::uint64_t>(cfg_.frame_slots) * per_slot * 4 * streams;
}

namespace {

struct FrameData {
    std::vector<std::vector<int>> tx;        // [slot][symbol]
    std::vector<std::vector<CVec>> streams;  // [antenna][slot] grids
};

FrameData draw_frame(int K, int P, int Nt, StbcCode code, Rng& rng)
{
    const CVec& C = qam16_constellation();
    std::uniform_int_distribution<int> pick(0, 15);
    const int per_slot = code == StbcCode::alamouti ? P : P * Nt;
    FrameData f;
    f.tx.assign(K, std::vector<int>(per_slot));
    for (auto& slot : f.tx)
        for (auto& s : slot)
            s = pick(rng);
    f.streams.assign(Nt, std::vector<CVec>(K, CVec(P)));
    if (code == StbcCode::alamouti) {
        for (int k = 0; k + 1 < K; k += 2)
            for (int e = 0; e < P; ++e) {
                Eigen::Matrix2cd Q = alamouti_encode(C[f.tx[k][e]], C[f.tx[k + 1][e]]);
                for (int i = 0; i < 2; ++i) {
                    f.streams[i][k][e] = Q(i, 0);
                    f.streams[i][k + 1][e] = Q(i, 1);
                }
            }
    } else {
        for (int k = 0; k < K; ++k)
            for (int e = 0; e < P; ++e)
                for (int i = 0; i < Nt; ++i)
                    f.streams[i][k][e] = C[f.tx[k][e * Nt + i]];
    }
    return f;
}

} // namespace

FrameCount Link::detect(const std::vector<std::vector<CVec>>& chi,
                        const std::vector<std::vector<std::vector<CVec>>>& hdiag,
                        const std::vector<std::vector<int>>& tx) const
{
    const CVec& C = qam16_constellation();
    const int K = static_cast<int>(chi.size());
    const int P = static_cast<int>(chi[0][0].size());
    FrameCount fc;
    fc.bits = bits_per_frame();
    if (cfg_.stbc == StbcCode::alamouti) {
        for (int k = 0; k + 1 < K; k += 2)
            for (int e = 0; e < P; ++e) {
                MimoBlock b = collect_block(chi, hdiag, k, e, 2);
                std::vector<int> d = ml_detect(b.chi, b.Xi, C, StbcCode::alamouti);
                fc.errors += bit_errors(d[0], tx[k][e]) + bit_errors(d[1], tx[k + 1][e]);
            }
    } else {
        const int Nr = cfg_.Nr, Nt = cfg_.Nt;
        Eigen::MatrixXcd y(Nr, 1), X(Nr, Nt);
        for (int k = 0; k < K; ++k)
            for (int e = 0; e < P; ++e) {
                for (int j = 0; j < Nr; ++j) {
                    y(j, 0) = chi[k][j][e];
                    for (int i = 0; i < Nt; ++i)
                        X(j, i) = hdiag[k][j][i][e];
                }
                std::vector<int> d = ml_detect(y, X, C, StbcCode::uncoded);
                for (int i = 0; i < Nt; ++i)
                    fc.errors += bit_errors(d[i], tx[k][e * Nt + i]);
            }
    }
    return fc;
}

FrameCount Link::oulp_frame(double N0, double tco, Rng& rng) const
{
    const OulpTransceiver& tr = *oulp_;
    const int L = cfg_.L, P = L / 2, K = cfg_.frame_slots;
    const int Nt = cfg_.Nt, Nr = cfg_.Nr;
    const double a = 1.0 / std::sqrt(static_cast<double>(Nt));
    const double ts = cfg_.pdp.sample_period_ns * 1e-9;

    FrameData fd = draw_frame(K, P, Nt, cfg_.stbc, rng);
    std::vector<CVec> tx(Nt);
    long origin = 0;
    for (int i = 0; i < Nt; ++i) {
        TimeDomainSignal s = tr.transmit(fd.streams[i], a);
        origin = s.origin;
        tx[i] = std::move(s.samples);
    }
    const long n_out = static_cast<long>(tx[0].size()) + pdp_.Lc() - 1;
    const int slots = static_cast<int>((n_out + P - 1) / P);
    ChannelRealization ch = cfg_.fading
        ? sample_channel(pdp_.powers, tco, slots, P * ts, P, Nt, Nr, rng)
        : static_channel(pdp_.powers, slots, P * ts, P, Nt, Nr);
    std::vector<CVec> rx = apply_channel(tx, ch, N0, rng);

    std::vector<TimeDomainSignal> rsig(Nr);
    for (int j = 0; j < Nr; ++j) {
        rsig[j].samples = std::move(rx[j]);
        rsig[j].slot_stride = P;
        rsig[j].origin = origin;
    }
    std::vector<std::vector<CVec>> chi(K);
    std::vector<std::vector<std::vector<CVec>>> hdiag(K);
    const double g = a * tr.tx_gain();
    std::vector<CVec> r(Nr);
    for (int k = 0; k < K; ++k) {
        for (int j = 0; j < Nr; ++j)
            r[j] = analyze_slot(rsig[j], tr.filter(), k);
        int c = ch.slot_of_sample(origin + static_cast<long>(k) * P);
        auto taps = ch.slot_taps(c);
        chi[k] = tr.receive_slot(r, taps, N0, k, a);
        hdiag[k].assign(Nr, std::vector<CVec>(Nt));
        for (int j = 0; j < Nr; ++j)
            for (int i = 0; i < Nt; ++i) {
                hdiag[k][j][i] = fft_padded(taps[j][i], P);
                for (auto& v : hdiag[k][j][i])
                    v *= g;
            }
    }
    return detect(chi, hdiag, fd.tx);
}

FrameCount Link::ofdm_frame(double N0, double tco, Rng& rng) const
{
    const int L = cfg_.L, K = cfg_.frame_slots;
    const int Nt = cfg_.Nt, Nr = cfg_.Nr;
    const int S = ofdm_.slot_samples();
    const double a = 1.0 / std::sqrt(static_cast<double>(Nt));
    const double ts = cfg_.pdp.sample_period_ns * 1e-9;

    FrameData fd = draw_frame(K, L, Nt, cfg_.stbc, rng);
    std::vector<CVec> tx(Nt);
    for (int i = 0; i < Nt; ++i)
        tx[i] = ofdm_modulate(fd.streams[i], ofdm_, a).samples;
    const long n_out = static_cast<long>(tx[0].size()) + pdp_.Lc() - 1;
    const int slots = static_cast<int>((n_out + S - 1) / S);
    ChannelRealization ch = cfg_.fading
        ? sample_channel(pdp_.powers, tco, slots, S * ts, S, Nt, Nr, rng)
        : static_channel(pdp_.powers, slots, S * ts, S, Nt, Nr);
    std::vector<CVec> rx = apply_channel(tx, ch, N0, rng);

    std::vector<std::vector<CVec>> chi(K, std::vector<CVec>(Nr));
    for (int j = 0; j < Nr; ++j) {
        std::vector<CVec> y = ofdm_demodulate(rx[j], ofdm_, K);
        for (int k = 0; k < K; ++k)
            chi[k][j] = std::move(y[k]);
    }
    std::vector<std::vector<std::vector<CVec>>> hdiag(K);
    for (int k = 0; k < K; ++k) {
        hdiag[k] = channel_ffts(ch, k, L);
        for (auto& row : hdiag[k])
            for (auto& h : row)
                for (auto& v : h)
                    v *= a;
    }
    return detect(chi, hdiag, fd.tx);
}

FrameCount Link::simulate_frame(double ebn0_db, double tco_s, std::uint64_t point,
                                std::uint64_t frame) const
{
    Rng rng = make_rng(cfg_.seed, {point, frame});
    const double N0 = noise_power(ebn0_db);
    return cfg_.system == SystemKind::oulp ? oulp_frame(N0, tco_s, rng) : ofdm_frame(N0, tco_s, rng);
}

BerPoint run_point(const Link& link, double ebn0_db, double tco_s, std::uint64_t point_index)
{
    const SimConfig& c = link.config();
    BerPoint p;
    p.system = to_string(c.system);
    p.L = c.L;
    p.Nt = c.Nt;
    p.Nr = c.Nr;
    p.ebn0_db = ebn0_db;
    p.tco_s = tco_s;
    const int workers = resolve_workers(c.workers);
    const std::uint64_t fbits = link.bits_per_frame();
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t frame = 0;
    while (p.errors < c.target_errors && p.bits < c.max_bits) {
        std::uint64_t remaining = (c.max_bits - p.bits + fbits - 1) / fbits;
        int batch = static_cast<int>(std::min<std::uint64_t>(c.batch_frames, remaining));
        std::vector<FrameCount> res(batch);
        parallel_for(batch, workers, [&](int b) {
            res[b] = link.simulate_frame(ebn0_db, tco_s, point_index, frame + b);
        });
        for (const auto& r : res) {
            p.bits += r.bits;
            p.errors += r.errors;
        }
        frame += batch;
    }
    p.ber = p.bits ? static_cast<double>(p.errors) / p.bits : 0.0;
    p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return p;
}

namespace {

BerRecord sweep(const SimConfig& cfg, bool coherence_major)
{
    Link link(cfg);
    BerRecord rec;
    rec.axis = coherence_major ? "tco_s" : "ebn0_db";
    auto one = [&](size_t ti, double e) {
        try {
            rec.points.push_back(run_point(link, e, cfg.tco_s[ti], ti));
        } catch (const std::exception& ex) {
            rec.failures.push_back({e, cfg.tco_s[ti], ex.what()});
        }
    };
    if (coherence_major) {
        for (double e : cfg.ebn0_db)
            for (size_t ti = 0; ti < cfg.tco_s.size(); ++ti)
                one(ti, e);
    } else {
        for (size_t ti = 0; ti < cfg.tco_s.size(); ++ti)
            for (double e : cfg.ebn0_db)
                one(ti, e);
    }
    return rec;
}

} // namespace

BerRecord run_ber_sweep(const SimConfig& cfg) { return sweep(cfg, false); }

BerRecord run_coherence_sweep(const SimConfig& cfg)
{
    if (cfg.ebn0_db.size() != 1)
        throw std::invalid_argument("coherence sweep needs exactly one Eb/N0 value");
    return sweep(cfg, true);
}

ProbeResult noise_correlation_probe(const PrototypeFilter& f, int Lc, int trials,
                                    std::uint64_t seed, int workers)
{
    if (trials < 10000)
        throw std::invalid_argument("noise_correlation_probe: needs at least 10000 trials");
    const int L = f.L, P = L / 2, lags = 5;
    if (Lc < 1 || Lc > P)
        throw std::invalid_argument("noise_correlation_probe: channel length out of range");
    const long top = lags - 1;

    const int chunk = 1000;
    const int chunks = (trials + chunk - 1) / chunk;
    std::vector<CVec> partial(chunks, CVec(lags, 0.0));
    parallel_for(chunks, resolve_workers(workers), [&](int c) {
        Rng rng = make_rng(seed, {0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(c)});
        const int n = std::min(chunk, trials - c * chunk);
        TimeDomainSignal w;
        w.slot_stride = P;
        w.origin = f.half();
        w.samples.resize(top * P + f.support());
        std::vector<CVec> Psi(lags);
        for (int t = 0; t < n; ++t) {
            for (auto& s : w.samples)
                s = complex_gaussian(rng, 1.0);
            for (long k = 0; k < lags; ++k) {
                CVec Omega = ifft(analyze_slot(w, f, k));
                Psi[k] = fft(purify(Omega, parity_of(k), Lc));
            }
            for (int lag = 0; lag < lags; ++lag)
                for (int e = 0; e < P; ++e)
                    partial[c][lag] += Psi[top][e] * std::conj(Psi[top - lag][e]);
        }
    });
    CVec acc(lags, 0.0);
    for (const auto& p : partial)
        for (int lag = 0; lag < lags; ++lag)
            acc[lag] += p[lag];

    ProbeResult out;
    const Parity kp = parity_of(top);
    auto half_sum = [&](int kappa) {
        CVec v = ifft(xi_row(f, kappa, kp));
        cdouble s = 0.0;
        const int start = kp == Parity::even ? 0 : P;
        for (int a = start; a < start + P; ++a)
            s += v[a] * static_cast<double>(L);
        return s;
    };
    const double phi0 = std::abs(half_sum(0));
    for (int lag = 0; lag < lags; ++lag) {
        out.empirical.push_back(std::abs(acc[lag]) / acc[0].real());
        out.analytic.push_back(std::abs(half_sum(lag)) / phi0);
    }
    return out;
}

std::string format_results(const BerRecord& record, bool header)
{
    std::ostringstream os;
    if (header)
        os << kCsvHeader << "\n";
    for (const auto& p : record.points) {
        char sec[32];
        std::snprintf(sec, sizeof(sec), "%.6f", p.seconds);
        os << p.system << ',' << p.L << ',' << p.Nt << ',' << p.Nr << ',' << fmt_real(p.ebn0_db)
           << ',' << fmt_real(p.tco_s) << ',' << p.bits << ',' << p.errors << ','
           << fmt_real(p.ber) << ',' << sec << "\n";
    }
    return os.str();
}

void persist_results(const BerRecord& record, const std::string& path, bool append)
{
    bool fresh = true;
    if (append) {
        std::ifstream probe(path);
        fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write results to '" + path + "'");
    out << format_results(record, fresh);
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

BerRecord read_results(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read results from '" + path + "'");
    BerRecord rec;
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("'" + path + "' does not start with the results header");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        if (f.size() != 10)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 10 fields");
        BerPoint p;
        p.system = f[0];
        p.L = std::stoi(f[1]);
        p.Nt = std::stoi(f[2]);
        p.Nr = std::stoi(f[3]);
        p.ebn0_db = std::stod(f[4]);
        p.tco_s = std::stod(f[5]);
        p.bits = std::stoull(f[6]);
        p.errors = std::stoull(f[7]);
        p.ber = std::stod(f[8]);
        p.seconds = std::stod(f[9]);
        rec.points.push_back(p);
    }
    return rec;
}

void emit_plot_data(const BerRecord& record, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write plot data to '" + path + "'");
    const bool by_tco = record.axis == "tco_s";
    out << "curve," << record.axis << ",ber\n";
    for (const auto& p : record.points) {
        std::string curve = p.system + "_L" + std::to_string(p.L) + "_" + std::to_string(p.Nt) +
                            "x" + std::to_string(p.Nr) + "_" +
                            (by_tco ? "ebn0=" + fmt_real(p.ebn0_db) : "tco=" + fmt_real(p.tco_s));
        out << curve << ',' << fmt_real(by_tco ? p.tco_s : p.ebn0_db) << ',' << fmt_real(p.ber)
            << "\n";
    }
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace oulp
