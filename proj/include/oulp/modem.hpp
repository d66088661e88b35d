#pragma once

#include "oulp/prototype.hpp"
#include "oulp/types.hpp"

#include <vector>

namespace oulp {

// samples[origin + m] holds the value at lattice time m (slot k is centered at m = k L/2).
struct TimeDomainSignal {
    CVec samples;
    int slot_stride = 0;
    long origin = 0;

    long length() const { return static_cast<long>(samples.size()); }
    cdouble at_lattice(long m) const
    {
        long i = origin + m;
        return (i < 0 || i >= length()) ? cdouble{} : samples[i];
    }
};

struct OulpFrameGrid {
    int L = 0;
    std::vector<CVec> q;  // K x L/2
    std::vector<CVec> D;  // K x L
    std::vector<CVec> d;  // K x L, d_k = gain * F_L D_k
};

CVec oulp_load(const CVec& q, long k, const InterferenceTable& table);

OulpFrameGrid build_grid(const std::vector<CVec>& q, const InterferenceTable& table,
                         double gain = 1.0);

TimeDomainSignal synthesize(const std::vector<CVec>& d, const PrototypeFilter& f);
TimeDomainSignal synthesize(const OulpFrameGrid& grid, const PrototypeFilter& f);

std::vector<CVec> analyze(const TimeDomainSignal& signal, const PrototypeFilter& f, int K);
CVec analyze_slot(const TimeDomainSignal& signal, const PrototypeFilter& f, long k);

// SISO interference eliminator. N0 is the regularizer of the MMSE estimate.
CVec interference_eliminate(const CVec& r, const CVec& Hdiag, double N0, Parity kp);

// Nr x Nt form: r[j], H[j][i]; the MMSE estimate is joint over transmit streams per subchannel.
std::vector<CVec> interference_eliminate(const std::vector<CVec>& r,
                                         const std::vector<std::vector<CVec>>& H, double N0,
                                         Parity kp);

// Subtracts a known interference half instead of the estimate.
CVec interference_eliminate_genie(const CVec& r, const CVec& Hdiag, const CVec& Y_in);

// Zeroes the desired half: the selector applied to the interfered part.
CVec select_interfered(const CVec& Y, Parity kp);

CVec purify(const CVec& Rtilde, Parity kp, int Lc);

struct FinalOutput {
    CVec chi;
    CVec hdiag;
};

FinalOutput final_transform(const CVec& x, const CVec& taps);

// Full single-link transceiver: data symbols Q per slot are precoded q = F^-1 Q, loaded,
// scaled to unit average power per sample, and recovered as chi = gain * H * Q + noise.
class OulpTransceiver {
public:
    explicit OulpTransceiver(PrototypeFilter f, int delta = 1);

    const PrototypeFilter& filter() const { return filter_; }
    const InterferenceTable& table() const { return table_; }
    int L() const { return filter_.L; }

    // Amplitude applied to the loaded vectors for unit-power transmission.
    double tx_gain() const { return tx_gain_; }
    // Expected per-subchannel power of the interference-laden matched-filter vector
    // for a stream of amplitude a is a^2 * subchannel_power().
    double subchannel_power() const { return subchannel_power_; }

    TimeDomainSignal transmit(const std::vector<CVec>& Q, double amplitude = 1.0) const;

    // Receives slot k: r[j] matched-filter outputs, taps[j][i] of that slot.
    // Returns chi[j]; effective channel is amplitude * tx_gain * H_{L/2}.
    std::vector<CVec> receive_slot(const std::vector<CVec>& r,
                                   const std::vector<std::vector<CVec>>& taps, double N0,
                                   long k, double amplitude) const;

private:
    PrototypeFilter filter_;
    InterferenceTable table_;
    double tx_gain_ = 1.0;
    double subchannel_power_ = 1.0;
};

} // namespace oulp
