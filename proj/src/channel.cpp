#include "oulp/channel.hpp"

#include "oulp/fft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace oulp {

PowerDelayProfile PowerDelayProfile::vehicular()
{
    return {{0.0, -1.0, -9.0, -10.0, -15.0, -20.0}, {0.0, 100.0, 300.0, 500.0, 800.0, 1300.0}, 100.0};
}

PowerDelayProfile PowerDelayProfile::flat() { return {{0.0}, {0.0}, 100.0}; }

DiscretePdp discretize_pdp(const PowerDelayProfile& pdp)
{
    if (!(pdp.sample_period_ns > 0.0))
        throw std::invalid_argument("discretize_pdp: sample period must be positive");
    if (pdp.gains_db.empty() || pdp.gains_db.size() != pdp.delays_ns.size())
        throw std::invalid_argument("discretize_pdp: gains and delays must be nonempty and paired");
    for (size_t i = 0; i < pdp.delays_ns.size(); ++i) {
        if (pdp.delays_ns[i] < 0.0)
            throw std::invalid_argument("discretize_pdp: negative delay");
        if (i > 0 && !(pdp.delays_ns[i] > pdp.delays_ns[i - 1]))
            throw std::invalid_argument("discretize_pdp: delays must be strictly increasing");
    }
    DiscretePdp out;
    long last = std::lround(pdp.delays_ns.back() / pdp.sample_period_ns);
    out.powers.assign(last + 1, 0.0);
    std::vector<int> hits(last + 1, 0);
    double total = 0.0;
    for (size_t i = 0; i < pdp.gains_db.size(); ++i) {
        long bin = std::lround(pdp.delays_ns[i] / pdp.sample_period_ns);
        double p = std::pow(10.0, pdp.gains_db[i] / 10.0);
        out.powers[bin] += p;
        total += p;
        if (++hits[bin] > 1)
            out.collision = true;
    }
    for (double& p : out.powers)
        p /= total;
    return out;
}

std::vector<std::vector<CVec>> ChannelRealization::slot_taps(int slot) const
{
    std::vector<std::vector<CVec>> out(Nr, std::vector<CVec>(Nt));
    for (int j = 0; j < Nr; ++j)
        for (int i = 0; i < Nt; ++i)
            out[j][i] = tap(slot, j, i);
    return out;
}

int ChannelRealization::slot_of_sample(long n) const
{
    long s = n / slot_samples;
    return static_cast<int>(std::clamp<long>(s, 0, slots - 1));
}

double ar_coefficient(double slot_duration, double tco)
{
    if (std::isinf(tco))
        return 1.0;
    if (!(tco > 0.0))
        throw std::invalid_argument("coherence time must be positive");
    return std::pow(0.5, slot_duration / tco);
}

ChannelRealization sample_channel(const RVec& powers, double tco, int slots, double slot_duration,
                                  int slot_samples, int Nt, int Nr, Rng& rng)
{
    if (slots <= 0 || slot_samples <= 0 || Nt <= 0 || Nr <= 0 || powers.empty())
        throw std::invalid_argument("sample_channel: invalid dimensions");
    ChannelRealization ch;
    ch.Nt = Nt;
    ch.Nr = Nr;
    ch.Lc = static_cast<int>(powers.size());
    ch.slots = slots;
    ch.slot_samples = slot_samples;
    ch.slot_duration = slot_duration;
    ch.tco = tco;
    ch.rho = ar_coefficient(slot_duration, tco);
    ch.taps.assign(static_cast<size_t>(slots) * Nr * Nt, CVec(ch.Lc));
    const double innov = std::sqrt(std::max(0.0, 1.0 - ch.rho * ch.rho));
    for (int s = 0; s < slots; ++s)
        for (int j = 0; j < Nr; ++j)
            for (int i = 0; i < Nt; ++i) {
                CVec& h = ch.tap(s, j, i);
                for (int m = 0; m < ch.Lc; ++m) {
                    cdouble w = powers[m] > 0.0 ? complex_gaussian(rng, powers[m]) : cdouble{};
                    h[m] = s == 0 ? w : ch.rho * ch.tap(s - 1, j, i)[m] + innov * w;
                }
            }
    return ch;
}

ChannelRealization sample_channel(const RVec& powers, double tco, int slots, double slot_duration,
                                  int slot_samples, int Nt, int Nr, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return sample_channel(powers, tco, slots, slot_duration, slot_samples, Nt, Nr, rng);
}

ChannelRealization static_channel(const RVec& powers, int slots, double slot_duration,
                                  int slot_samples, int Nt, int Nr)
{
    if (slots <= 0 || slot_samples <= 0 || Nt <= 0 || Nr <= 0 || powers.empty())
        throw std::invalid_argument("static_channel: invalid dimensions");
    ChannelRealization ch;
    ch.Nt = Nt;
    ch.Nr = Nr;
    ch.Lc = static_cast<int>(powers.size());
    ch.slots = slots;
    ch.slot_samples = slot_samples;
    ch.slot_duration = slot_duration;
    ch.tco = std::numeric_limits<double>::infinity();
    CVec h(ch.Lc);
    for (int m = 0; m < ch.Lc; ++m)
        h[m] = std::sqrt(std::max(0.0, powers[m]));
    ch.taps.assign(static_cast<size_t>(slots) * Nr * Nt, h);
    return ch;
}

std::vector<CVec> apply_channel(const std::vector<CVec>& tx, const ChannelRealization& ch,
                                double N0, Rng& rng)
{
    if (static_cast<int>(tx.size()) != ch.Nt)
        throw std::invalid_argument("apply_channel: expected " + std::to_string(ch.Nt) +
                                    " transmit signals");
    long n_in = 0;
    for (const auto& s : tx)
        n_in = std::max<long>(n_in, static_cast<long>(s.size()));
    const long n_out = n_in + ch.Lc - 1;
    if ((n_out + ch.slot_samples - 1) / ch.slot_samples > ch.slots)
        throw std::invalid_argument("apply_channel: realization does not cover the signal");

    std::vector<CVec> rx(ch.Nr, CVec(n_out, 0.0));
    for (int j = 0; j < ch.Nr; ++j) {
        for (int i = 0; i < ch.Nt; ++i) {
            const CVec& x = tx[i];
            const long nx = static_cast<long>(x.size());
            for (long n = 0; n < n_out; ++n) {
                const CVec& h = ch.tap(ch.slot_of_sample(n), j, i);
                cdouble acc = 0.0;
                const long m_lo = std::max<long>(0, n - nx + 1);
                const long m_hi = std::min<long>(ch.Lc - 1, n);
                for (long m = m_lo; m <= m_hi; ++m)
                    acc += h[m] * x[n - m];
                rx[j][n] += acc;
            }
        }
        if (N0 > 0.0)
            for (auto& v : rx[j])
                v += complex_gaussian(rng, N0);
    }
    return rx;
}

std::vector<std::vector<CVec>> channel_ffts(const ChannelRealization& ch, int slot, int points)
{
    if (ch.Lc > points)
        throw std::invalid_argument("channel_ffts: channel length " + std::to_string(ch.Lc) +
                                    " exceeds " + std::to_string(points) + " points");
    std::vector<std::vector<CVec>> out(ch.Nr, std::vector<CVec>(ch.Nt));
    for (int j = 0; j < ch.Nr; ++j)
        for (int i = 0; i < ch.Nt; ++i)
            out[j][i] = fft_padded(ch.tap(slot, j, i), points);
    return out;
}

} // namespace oulp
