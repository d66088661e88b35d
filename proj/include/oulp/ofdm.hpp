#pragma once

#include "oulp/modem.hpp"
#include "oulp/types.hpp"

#include <vector>

namespace oulp {

struct OfdmConfig {
    int L = 128;
    int cp_len = 12;

    int slot_samples() const { return L + cp_len; }
};

// Unitary IDFT per slot, last cp_len samples prepended. Unit-power symbols give unit-power samples.
TimeDomainSignal ofdm_modulate(const std::vector<CVec>& symbols, const OfdmConfig& cfg,
                               double amplitude = 1.0);

// Strips the prefix and applies the unitary DFT; result[k][l] = H_l X_l for a static
// channel no longer than cp_len + 1.
std::vector<CVec> ofdm_demodulate(const CVec& received, const OfdmConfig& cfg, int K);

bool cp_covers(const OfdmConfig& cfg, int Lc);

// Percentage of air time spent on the prefix.
double ofdm_efficiency_loss(const OfdmConfig& cfg);

} // namespace oulp
