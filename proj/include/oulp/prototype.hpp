#pragma once

#include "oulp/types.hpp"

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oulp {

// Real, even-symmetric prototype filter on the lattice dT = L/2, dF = 1/L.
// coeffs[i] holds f(i - half()), so the filter is centered on m = 0.
struct PrototypeFilter {
    RVec coeffs;
    int L = 0;
    int overlap = 0;
    double sample_period = 100e-9;

    int half() const { return static_cast<int>(coeffs.size() / 2); }
    int support() const { return static_cast<int>(coeffs.size()); }
    double at(long m) const
    {
        long i = m + half();
        return (i < 0 || i >= static_cast<long>(coeffs.size())) ? 0.0 : coeffs[i];
    }
};

class DesignError : public std::runtime_error {
public:
    DesignError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_residual(achieved)
    {
    }
    double achieved_residual;
};

constexpr double kResidualBound = 1e-8;
constexpr int kDefaultOverlap = 5;

PrototypeFilter design_iota(int L, int overlap = kDefaultOverlap, double sample_period = 100e-9);

// Builds a filter from arbitrary coefficients (odd length, centered), normalized to unit energy.
PrototypeFilter make_filter(RVec coeffs, int L, int overlap, double sample_period = 100e-9);

double orthogonality_residual(const PrototypeFilter& f);

cdouble xi_coefficient(const PrototypeFilter& f, int kappa, int ell, Parity kp);

// All L values of xi^{kp}_{kappa, ell}, ell = 0..L-1.
CVec xi_row(const PrototypeFilter& f, int kappa, Parity kp);

// Padded column [xi_0 .. xi_D, 0 .. 0, xi_-D .. xi_-1].
CVec padded_xi(const PrototypeFilter& f, int kappa, Parity kp, int delta);

CVec gain_vector_v(const PrototypeFilter& f, int kappa, Parity kp, int delta);

struct InterferenceTable {
    int L = 0;
    int delta = 1;
    std::vector<int> kappas;
    // keyed by (parity index, kappa)
    std::map<std::pair<int, int>, CVec> xi_bar;
    std::map<std::pair<int, int>, CVec> v;

    const CVec& gains(Parity kp, int kappa) const;
    const CVec& column(Parity kp, int kappa) const;
    cdouble xi(Parity kp, int kappa, int ell) const;
};

InterferenceTable build_interference_table(const PrototypeFilter& f, int delta = 1,
                                           std::vector<int> kappas = {-1, 0, 1});

Eigen::MatrixXcd build_interference_matrix(const InterferenceTable& t, int kappa, Parity kp);

Eigen::MatrixXcd circulant(const CVec& first_column);

} // namespace oulp
