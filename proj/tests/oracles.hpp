#pragma once

#include "oulp/prototype.hpp"
#include "oulp/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace oracle {

using oulp::cdouble;
using oulp::CVec;

inline Eigen::MatrixXcd dft_matrix(int n)
{
    Eigen::MatrixXcd F(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            F(r, c) = std::polar(1.0, -2.0 * M_PI * double(r) * c / n);
    return F;
}

inline Eigen::MatrixXcd idft_matrix(int n) { return dft_matrix(n).adjoint() / double(n); }

inline Eigen::VectorXcd to_eigen(const CVec& v)
{
    Eigen::VectorXcd e(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        e[i] = v[i];
    return e;
}

inline CVec from_eigen(const Eigen::VectorXcd& e) { return CVec(e.data(), e.data() + e.size()); }

// Z(r, c) = col[(r - c) mod n], built entry by entry.
inline Eigen::MatrixXcd dense_circulant(const CVec& col)
{
    const int n = static_cast<int>(col.size());
    Eigen::MatrixXcd Z(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            Z(r, c) = col[((r - c) % n + n) % n];
    return Z;
}

inline CVec padded(const CVec& taps, int n)
{
    CVec out(n, 0.0);
    std::copy(taps.begin(), taps.end(), out.begin());
    return out;
}

// f_{k,l}(m) = f(m - kL/2) e^{j 2 pi l m / L} e^{j pi (l + k) / 2}
inline cdouble lattice_fn(const oulp::PrototypeFilter& f, long k, long l, long m)
{
    const long L = f.L;
    const double ph = 2.0 * M_PI * double((l * m) % L) / L + M_PI * double(((l + k) % 4 + 4) % 4) / 2.0;
    return f.at(m - k * L / 2) * std::polar(1.0, ph);
}

// <f_{k,l}, f_{k',l'}> by direct summation over the overlapping support.
inline cdouble inner(const oulp::PrototypeFilter& f, long k, long l, long kp, long lp)
{
    const long L = f.L;
    const long lo = std::max(k, kp) * L / 2 - f.half();
    const long hi = std::min(k, kp) * L / 2 + f.half();
    cdouble s = 0.0;
    for (long m = lo; m <= hi; ++m)
        s += lattice_fn(f, k, l, m) * std::conj(lattice_fn(f, kp, lp, m));
    return s;
}

inline double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Gray 16-QAM over AWGN, unit symbol energy, N0 = 1 / (4 Eb/N0).
inline double qam16_ber(double ebn0_db)
{
    const double esn0 = 4.0 * std::pow(10.0, ebn0_db / 10.0);
    const double a = std::sqrt(esn0 / 5.0);
    return 0.25 * (3.0 * qfunc(a) + 2.0 * qfunc(3.0 * a) - qfunc(5.0 * a));
}

inline CVec random_cvec(std::mt19937_64& rng, int n, double var = 1.0)
{
    std::normal_distribution<double> g(0.0, std::sqrt(var / 2.0));
    CVec v(n);
    for (auto& x : v)
        x = {g(rng), g(rng)};
    return v;
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace oracle
