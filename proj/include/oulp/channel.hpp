#pragma once

#include "oulp/rng.hpp"
#include "oulp/types.hpp"

#include <cstdint>
#include <vector>

namespace oulp {

struct PowerDelayProfile {
    RVec gains_db;
    RVec delays_ns;
    double sample_period_ns = 100.0;

    static PowerDelayProfile vehicular();
    static PowerDelayProfile flat();
};

struct DiscretePdp {
    RVec powers;
    bool collision = false;
    int Lc() const { return static_cast<int>(powers.size()); }
};

DiscretePdp discretize_pdp(const PowerDelayProfile& pdp);

struct ChannelRealization {
    int Nt = 1;
    int Nr = 1;
    int Lc = 1;
    int slots = 0;
    int slot_samples = 0;
    double slot_duration = 0.0;
    double tco = 0.0;
    double rho = 1.0;
    std::vector<CVec> taps;  // index (slot * Nr + j) * Nt + i

    const CVec& tap(int slot, int j, int i) const { return taps[(slot * Nr + j) * Nt + i]; }
    CVec& tap(int slot, int j, int i) { return taps[(slot * Nr + j) * Nt + i]; }
    // taps[j][i] of one slot
    std::vector<std::vector<CVec>> slot_taps(int slot) const;
    int slot_of_sample(long n) const;
};

// 0.5^(slot_duration / tco); an infinite coherence time gives 1.
double ar_coefficient(double slot_duration, double tco);

ChannelRealization sample_channel(const RVec& powers, double tco, int slots, double slot_duration,
                                  int slot_samples, int Nt, int Nr, Rng& rng);
ChannelRealization sample_channel(const RVec& powers, double tco, int slots, double slot_duration,
                                  int slot_samples, int Nt, int Nr, std::uint64_t seed);

// Deterministic taps sqrt(powers) on every link and slot.
ChannelRealization static_channel(const RVec& powers, int slots, double slot_duration,
                                  int slot_samples, int Nt, int Nr);

// Per rx antenna: sum over tx of the slot-switched linear convolution, plus AWGN of variance N0.
// Output length is input length + Lc - 1.
std::vector<CVec> apply_channel(const std::vector<CVec>& tx, const ChannelRealization& ch,
                                double N0, Rng& rng);

// [j][i] DFTs of the zero-padded taps of one slot.
std::vector<std::vector<CVec>> channel_ffts(const ChannelRealization& ch, int slot, int points);

} // namespace oulp
