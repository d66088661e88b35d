#include "oulp/ofdm.hpp"

#include "oulp/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace oulp {

TimeDomainSignal ofdm_modulate(const std::vector<CVec>& symbols, const OfdmConfig& cfg,
                               double amplitude)
{
    if (cfg.L <= 0 || cfg.cp_len < 0 || cfg.cp_len > cfg.L)
        throw std::invalid_argument("ofdm_modulate: invalid configuration");
    const int S = cfg.slot_samples();
    TimeDomainSignal s;
    s.slot_stride = S;
    s.origin = 0;
    s.samples.assign(symbols.size() * S, 0.0);
    const double scale = amplitude * std::sqrt(static_cast<double>(cfg.L));
    CVec t(cfg.L);
    for (size_t k = 0; k < symbols.size(); ++k) {
        if (static_cast<int>(symbols[k].size()) != cfg.L)
            throw std::invalid_argument("ofdm_modulate: slot length mismatch");
        ifft(symbols[k].data(), t.data(), cfg.L);
        cdouble* out = s.samples.data() + k * S;
        for (int n = 0; n < cfg.cp_len; ++n)
            out[n] = scale * t[cfg.L - cfg.cp_len + n];
        for (int n = 0; n < cfg.L; ++n)
            out[cfg.cp_len + n] = scale * t[n];
    }
    return s;
}

std::vector<CVec> ofdm_demodulate(const CVec& received, const OfdmConfig& cfg, int K)
{
    const int S = cfg.slot_samples();
    if (static_cast<long>(received.size()) < static_cast<long>(K) * S)
        throw std::invalid_argument("ofdm_demodulate: signal shorter than K slots");
    const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.L));
    std::vector<CVec> out(K, CVec(cfg.L));
    for (int k = 0; k < K; ++k) {
        fft(received.data() + static_cast<long>(k) * S + cfg.cp_len, out[k].data(), cfg.L);
        for (auto& v : out[k])
            v *= scale;
    }
    return out;
}

bool cp_covers(const OfdmConfig& cfg, int Lc) { return Lc <= cfg.cp_len + 1; }

double ofdm_efficiency_loss(const OfdmConfig& cfg)
{
    return 100.0 * cfg.cp_len / static_cast<double>(cfg.cp_len + cfg.L);
}

} // namespace oulp
