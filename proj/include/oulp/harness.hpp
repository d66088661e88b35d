#pragma once

#include "oulp/channel.hpp"
#include "oulp/mimo.hpp"
#include "oulp/modem.hpp"
#include "oulp/ofdm.hpp"
#include "oulp/prototype.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace oulp {

enum class SystemKind { oulp, ofdm };

std::string to_string(SystemKind s);
SystemKind system_from_string(const std::string& s);

struct SimConfig {
    SystemKind system = SystemKind::oulp;
    int L = 128;
    int overlap = kDefaultOverlap;
    int delta = 1;
    std::string modulation = "16qam";
    int Nt = 1;
    int Nr = 1;
    StbcCode stbc = StbcCode::uncoded;
    PowerDelayProfile pdp = PowerDelayProfile::vehicular();
    bool fading = true;
    std::vector<double> tco_s = {80e-3};
    std::vector<double> ebn0_db = {0.0, 5.0, 10.0, 15.0, 20.0};
    std::uint64_t target_errors = 200;
    std::uint64_t max_bits = 2000000;
    std::uint64_t seed = 1;
    std::string out;
    int frame_slots = 32;
    int cp_len = 12;
    int workers = 0;
    int batch_frames = 16;
    int probe_trials = 100000;
    int probe_lc = 1;
};

// Structured-text (JSON) config; unknown keys are rejected.
SimConfig parse_config(const std::string& text);
SimConfig load_config(const std::string& path);
void validate(const SimConfig& cfg);

struct BerPoint {
    std::string system;
    int L = 0;
    int Nt = 1;
    int Nr = 1;
    double ebn0_db = 0.0;
    double tco_s = 0.0;
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
    double ber = 0.0;
    double seconds = 0.0;

    // Wall time is excluded: records compare equal when the simulated outcome matches.
    bool operator==(const BerPoint& o) const
    {
        return system == o.system && L == o.L && Nt == o.Nt && Nr == o.Nr &&
               same(ebn0_db, o.ebn0_db) && same(tco_s, o.tco_s) && bits == o.bits &&
               errors == o.errors;
    }

private:
    static bool same(double a, double b) { return a == b || (std::isinf(a) && std::isinf(b)); }
};

struct PointFailure {
    double ebn0_db;
    double tco_s;
    std::string message;
};

struct BerRecord {
    std::vector<BerPoint> points;
    std::vector<PointFailure> failures;
    std::string axis = "ebn0_db";

    bool operator==(const BerRecord& o) const { return points == o.points; }
};

struct FrameCount {
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
};

// Shared, read-only state for one system configuration.
class Link {
public:
    explicit Link(const SimConfig& cfg);

    const SimConfig& config() const { return cfg_; }
    const DiscretePdp& pdp() const { return pdp_; }
    const OulpTransceiver* oulp() const { return oulp_.get(); }
    std::uint64_t bits_per_frame() const;

    // One frame at the given point; the RNG stream is keyed by (seed, point, frame).
    FrameCount simulate_frame(double ebn0_db, double tco_s, std::uint64_t point,
                              std::uint64_t frame) const;

private:
    FrameCount oulp_frame(double N0, double tco, Rng& rng) const;
    FrameCount ofdm_frame(double N0, double tco, Rng& rng) const;
    FrameCount detect(const std::vector<std::vector<CVec>>& chi,
                      const std::vector<std::vector<std::vector<CVec>>>& hdiag,
                      const std::vector<std::vector<int>>& tx) const;

    SimConfig cfg_;
    DiscretePdp pdp_;
    std::shared_ptr<const OulpTransceiver> oulp_;
    OfdmConfig ofdm_;
};

double noise_power(double ebn0_db, int bits_per_symbol = 4);

BerPoint run_point(const Link& link, double ebn0_db, double tco_s, std::uint64_t point_index);

BerRecord run_ber_sweep(const SimConfig& cfg);
BerRecord run_coherence_sweep(const SimConfig& cfg);

struct ProbeResult {
    RVec empirical;  // |phi_k| / phi_0, k = 0..4
    RVec analytic;
};

ProbeResult noise_correlation_probe(const PrototypeFilter& f, int Lc, int trials,
                                    std::uint64_t seed = 1, int workers = 0);

void persist_results(const BerRecord& record, const std::string& path, bool append = false);
std::string format_results(const BerRecord& record, bool header = true);
BerRecord read_results(const std::string& path);
void emit_plot_data(const BerRecord& record, const std::string& path);

extern const char* const kCsvHeader;

int resolve_workers(int requested);

} // namespace oulp
