#include "oulp/prototype.hpp"

#include "oulp/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace oulp {

namespace {

constexpr double kPi = std::numbers::pi;

int next_pow2(int n)
{
    int m = 1;
    while (m < n)
        m <<= 1;
    return m;
}

// Alternating time / frequency normalization of a sampled Gaussian.
RVec orthogonalized_gaussian(int L, int span, int iters)
{
    const int N = span * L + 1;
    const int h = span * L / 2;
    const int P = L / 2;
    const int M = next_pow2(4 * N);
    const int Q = M / L;

    RVec f(N);
    for (int i = 0; i < N; ++i) {
        double t = (i - h) * std::sqrt(2.0) / L;
        f[i] = std::pow(2.0, 0.25) * std::exp(-kPi * t * t);
    }

    RVec e(P), eq(Q);
    CVec buf(M), X(M), back(M);
    for (int it = 0; it < iters; ++it) {
        std::fill(e.begin(), e.end(), 0.0);
        for (int i = 0; i < N; ++i)
            e[wrap(i - h, P)] += f[i] * f[i];
        for (int i = 0; i < N; ++i)
            f[i] /= std::sqrt(e[wrap(i - h, P)]);

        std::fill(buf.begin(), buf.end(), 0.0);
        for (int i = 0; i < N; ++i)
            buf[wrap(i - h, M)] = f[i];
        fft(buf.data(), X.data(), M);
        std::fill(eq.begin(), eq.end(), 0.0);
        for (int k = 0; k < M; ++k)
            eq[k % Q] += X[k].real() * X[k].real();
        for (int k = 0; k < M; ++k)
            X[k] = X[k].real() / std::sqrt(eq[k % Q]);
        ifft(X.data(), back.data(), M);

        double energy = 0.0;
        for (int i = 0; i < N; ++i) {
            f[i] = back[wrap(i - h, M)].real();
            energy += f[i] * f[i];
        }
        for (double& v : f)
            v /= std::sqrt(energy);
    }
    return f;
}

// Even-lag autocorrelation constraints of one polyphase class: sum_t g[t] g[t+lag] = (2/L) [lag == 0].
void class_constraints(const Eigen::VectorXd& g, const std::vector<int>& lags, double target,
                       Eigen::VectorXd& c, Eigen::MatrixXd& J)
{
    const int n = static_cast<int>(g.size());
    c.resize(lags.size());
    J.setZero(lags.size(), n);
    for (size_t i = 0; i < lags.size(); ++i) {
        int l = lags[i];
        double s = 0.0;
        for (int t = 0; t + l < n; ++t) {
            s += g[t] * g[t + l];
            J(i, t) += g[t + l];
            J(i, t + l) += g[t];
        }
        c[i] = s - (l == 0 ? target : 0.0);
    }
}

// Closest point to g0 on the constraint manifold by repeated linearized projection.
Eigen::VectorXd nearest_orthogonal(const Eigen::VectorXd& g0, const std::vector<int>& lags,
                                   double target)
{
    Eigen::VectorXd x = g0, c;
    Eigen::MatrixXd J;
    for (int it = 0; it < 200; ++it) {
        class_constraints(x, lags, target, c, J);
        Eigen::VectorXd d = x - g0;
        Eigen::MatrixXd JJ = J * J.transpose();
        Eigen::VectorXd lam = JJ.ldlt().solve(c - J * d);
        Eigen::VectorXd xn = g0 - J.transpose() * lam;
        double step = (xn - x).cwiseAbs().maxCoeff();
        x = xn;
        if (step < 1e-16)
            break;
    }
    return x;
}

// Self-mirrored classes: ends pinned to a tiny value, the rest solved under mirror symmetry.
Eigen::VectorXd pinned_symmetric(Eigen::VectorXd g, double target, double pin)
{
    const int n = static_cast<int>(g.size());
    double sgn = g[0] < 0 ? -1.0 : 1.0;
    g[0] = g[n - 1] = pin * sgn * std::sqrt(target);

    std::vector<int> lags;
    for (int l = 0; l < n - 2; l += 2)
        lags.push_back(l);
    const int nu = (n + 1) / 2 - 1;
    if (nu <= 0 || lags.empty())
        return g;

    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, nu);
    for (int k = 0; k < nu; ++k) {
        S(1 + k, k) = 1.0;
        S(n - 2 - k, k) = 1.0;
    }
    Eigen::VectorXd c;
    Eigen::MatrixXd J;
    for (int it = 0; it < 200; ++it) {
        class_constraints(g, lags, target, c, J);
        Eigen::MatrixXd Ju = J * S;
        Eigen::VectorXd step = Ju.completeOrthogonalDecomposition().solve(c);
        for (int k = 0; k < nu; ++k) {
            g[1 + k] -= step[k];
            if (n - 2 - k != 1 + k)
                g[n - 2 - k] -= step[k];
        }
        if (step.cwiseAbs().maxCoeff() < 1e-17)
            break;
    }
    return g;
}

// Enforces exact real-orthogonality class by class. Class r = { m : m = r mod L/2 }.
void refine_classes(RVec& f, int L, double pin)
{
    const int h = static_cast<int>(f.size() / 2);
    const int P = L / 2;
    const double target = 2.0 / L;
    auto members = [&](int r) {
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(f.size()); ++i)
            if (wrap(i - h, P) == r)
                idx.push_back(i);
        return idx;
    };
    for (int r = 0; r <= L / 4; ++r) {
        std::vector<int> idx = members(r);
        Eigen::VectorXd g(idx.size());
        for (size_t s = 0; s < idx.size(); ++s)
            g[s] = f[idx[s]];
        if (r == 0 || r == L / 4) {
            g = pinned_symmetric(g, target, pin);
        } else {
            std::vector<int> lags;
            for (int l = 0; l < g.size(); l += 2)
                lags.push_back(l);
            g = nearest_orthogonal(g, lags, target);
        }
        for (size_t s = 0; s < idx.size(); ++s)
            f[idx[s]] = g[s];
        if (r != 0 && r != L / 4) {
            std::vector<int> mirror = members(P - r);
            for (size_t s = 0; s < mirror.size(); ++s)
                f[mirror[s]] = g[g.size() - 1 - s];
        }
    }
}

void normalize(RVec& c)
{
    double e = 0.0;
    for (double v : c)
        e += v * v;
    for (double& v : c)
        v /= std::sqrt(e);
}

} // namespace

PrototypeFilter make_filter(RVec coeffs, int L, int overlap, double sample_period)
{
    if (coeffs.size() % 2 == 0)
        throw std::invalid_argument("prototype filter needs an odd number of coefficients");
    if (L < 4 || L % 4 != 0)
        throw std::invalid_argument("L must be a positive multiple of 4");
    normalize(coeffs);
    PrototypeFilter f;
    f.coeffs = std::move(coeffs);
    f.L = L;
    f.overlap = overlap;
    f.sample_period = sample_period;
    return f;
}

PrototypeFilter design_iota(int L, int overlap, double sample_period)
{
    if (L < 8 || L % 4 != 0)
        throw std::invalid_argument("design_iota: L must be >= 8 and divisible by 4, got " +
                                    std::to_string(L));
    if (overlap < 3)
        throw std::invalid_argument("design_iota: overlap must be >= 3, got " +
                                    std::to_string(overlap));

    const int guard = 8;
    RVec wide = orthogonalized_gaussian(L, overlap + guard, 60);
    const int cw = static_cast<int>(wide.size() / 2);
    const int h = overlap * L / 2;
    RVec c(wide.begin() + (cw - h), wide.begin() + (cw + h + 1));
    normalize(c);
    refine_classes(c, L, 1e-5);
    for (int i = 0; i < h; ++i) {
        double s = 0.5 * (c[i] + c[c.size() - 1 - i]);
        c[i] = c[c.size() - 1 - i] = s;
    }

    PrototypeFilter f = make_filter(std::move(c), L, overlap, sample_period);
    double res = orthogonality_residual(f);
    if (!(res <= kResidualBound)) {
        std::ostringstream os;
        os << "design_iota: overlap " << overlap << " at L=" << L
           << " cannot meet the real-orthogonality bound " << kResidualBound
           << " (achieved residual " << res << ")";
        throw DesignError(os.str(), res);
    }
    return f;
}

CVec xi_row(const PrototypeFilter& f, int kappa, Parity kp)
{
    const int L = f.L;
    const int h = f.half();
    const long shift = static_cast<long>(kappa) * L / 2;
    CVec fold(L, 0.0);
    for (long m = -h; m <= h; ++m) {
        double a = f.at(m + shift);
        if (a != 0.0)
            fold[wrap(m, L)] += a * f.at(m);
    }
    CVec row = fft(fold);
    const int k1 = parity_index(kp);
    for (int ell = 0; ell < L; ++ell) {
        double sgn = ((static_cast<long>(ell) * k1) % 2 == 0) ? 1.0 : -1.0;
        row[ell] *= sgn * neg_j_pow(kappa + ell);
    }
    return row;
}

cdouble xi_coefficient(const PrototypeFilter& f, int kappa, int ell, Parity kp)
{
    const int L = f.L;
    const int h = f.half();
    const long shift = static_cast<long>(kappa) * L / 2;
    cdouble acc = 0.0;
    for (long m = -h; m <= h; ++m) {
        double a = f.at(m + shift);
        if (a == 0.0)
            continue;
        double ph = -2.0 * kPi * static_cast<double>(wrap(static_cast<long>(ell) * m, L)) / L;
        acc += a * f.at(m) * cdouble(std::cos(ph), std::sin(ph));
    }
    const int k1 = parity_index(kp);
    double sgn = (wrap(static_cast<long>(ell) * k1, 2) == 0) ? 1.0 : -1.0;
    return acc * sgn * neg_j_pow(static_cast<long>(kappa) + ell);
}

double orthogonality_residual(const PrototypeFilter& f)
{
    const int span = (f.support() + f.L / 2 - 1) / (f.L / 2);
    double worst = 0.0;
    for (Parity kp : {Parity::even, Parity::odd}) {
        for (int kappa = -span; kappa <= span; ++kappa) {
            CVec row = xi_row(f, kappa, kp);
            for (int ell = 0; ell < f.L; ++ell) {
                double re = row[ell].real();
                if (kappa == 0 && ell == 0)
                    re -= 1.0;
                worst = std::max(worst, std::abs(re));
            }
        }
    }
    return worst;
}

CVec padded_xi(const PrototypeFilter& f, int kappa, Parity kp, int delta)
{
    if (delta < 1 || 2 * delta + 1 > f.L)
        throw std::invalid_argument("truncation radius out of range");
    CVec row = xi_row(f, kappa, kp);
    CVec col(f.L, 0.0);
    for (int ell = -delta; ell <= delta; ++ell)
        col[wrap(ell, f.L)] = row[wrap(ell, f.L)];
    return col;
}

CVec gain_vector_v(const PrototypeFilter& f, int kappa, Parity kp, int delta)
{
    CVec v = ifft(padded_xi(f, kappa, kp, delta));
    for (auto& x : v)
        x *= static_cast<double>(f.L);
    return v;
}

const CVec& InterferenceTable::gains(Parity kp, int kappa) const
{
    auto it = v.find({parity_index(kp), kappa});
    if (it == v.end())
        throw std::out_of_range("time offset " + std::to_string(kappa) + " not in table");
    return it->second;
}

const CVec& InterferenceTable::column(Parity kp, int kappa) const
{
    auto it = xi_bar.find({parity_index(kp), kappa});
    if (it == xi_bar.end())
        throw std::out_of_range("time offset " + std::to_string(kappa) + " not in table");
    return it->second;
}

cdouble InterferenceTable::xi(Parity kp, int kappa, int ell) const
{
    return column(kp, kappa)[wrap(ell, L)];
}

InterferenceTable build_interference_table(const PrototypeFilter& f, int delta,
                                           std::vector<int> kappas)
{
    InterferenceTable t;
    t.L = f.L;
    t.delta = delta;
    t.kappas = std::move(kappas);
    for (Parity kp : {Parity::even, Parity::odd}) {
        for (int kappa : t.kappas) {
            std::pair<int, int> key{parity_index(kp), kappa};
            t.xi_bar[key] = padded_xi(f, kappa, kp, delta);
            CVec v = ifft(t.xi_bar[key]);
            for (auto& x : v)
                x *= static_cast<double>(f.L);
            t.v[key] = std::move(v);
        }
    }
    return t;
}

Eigen::MatrixXcd circulant(const CVec& col)
{
    const int n = static_cast<int>(col.size());
    Eigen::MatrixXcd Z(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            Z(r, c) = col[wrap(r - c, n)];
    return Z;
}

Eigen::MatrixXcd build_interference_matrix(const InterferenceTable& t, int kappa, Parity kp)
{
    return circulant(t.column(kp, kappa));
}

} // namespace oulp
