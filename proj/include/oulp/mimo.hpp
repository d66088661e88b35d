#pragma once

#include "oulp/types.hpp"

#include <Eigen/Dense>

#include <vector>

namespace oulp {

enum class StbcCode { alamouti, uncoded };

// Rows are transmit antennas, columns are time slots: [[s1, -s2*], [s2, s1*]].
Eigen::Matrix2cd alamouti_encode(cdouble s1, cdouble s2);

// chi: Nr x T received block, Xi: Nr x Nt channel. Returns constellation indices:
// alamouti -> {s1, s2}; uncoded -> T * Nt indices, slot-major.
std::vector<int> ml_detect(const Eigen::MatrixXcd& chi, const Eigen::MatrixXcd& Xi,
                           const CVec& constellation, StbcCode code);

// Brute-force search over every codeword; lexicographically lowest index wins ties.
std::vector<int> ml_detect_exhaustive(const Eigen::MatrixXcd& chi, const Eigen::MatrixXcd& Xi,
                                      const CVec& constellation, StbcCode code);

int nearest_point(cdouble z, const CVec& constellation);

struct MimoBlock {
    Eigen::MatrixXcd chi;  // Nr x K_block
    Eigen::MatrixXcd Xi;   // Nr x Nt, taken from the first slot of the block
    double drift = 0.0;    // max relative change of Xi across the block
    bool drifted = false;
};

// chi[slot][j] and hdiag[slot][j][i] hold per-subchannel values; block starts at slot k0.
MimoBlock collect_block(const std::vector<std::vector<CVec>>& chi,
                        const std::vector<std::vector<std::vector<CVec>>>& hdiag, long k0,
                        int eta, int K_block = 2, double drift_threshold = 0.1);

} // namespace oulp
