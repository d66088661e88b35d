#include "oulp/modem.hpp"

#include "oulp/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oulp {

namespace {

constexpr double kMinGain = 1e-6;

int half_start(Parity kp, int L) { return kp == Parity::even ? 0 : L / 2; }

} // namespace

CVec oulp_load(const CVec& q, long k, const InterferenceTable& table)
{
    const int L = table.L;
    if (static_cast<int>(q.size()) != L / 2)
        throw std::invalid_argument("oulp_load: expected " + std::to_string(L / 2) +
                                    " symbols, got " + std::to_string(q.size()));
    const Parity kp = parity_of(k);
    const CVec& v = table.gains(kp, 0);
    const int s = half_start(kp, L);
    CVec D(L, 0.0);
    for (int n = 0; n < L / 2; ++n) {
        cdouble g = v[s + n];
        if (std::abs(g) < kMinGain)
            throw std::domain_error("oulp_load: gain " + std::to_string(std::abs(g)) +
                                    " at subchannel " + std::to_string(s + n) + " too small");
        D[s + n] = q[n] / g;
    }
    return D;
}

OulpFrameGrid build_grid(const std::vector<CVec>& q, const InterferenceTable& table, double gain)
{
    OulpFrameGrid g;
    g.L = table.L;
    g.q = q;
    for (size_t k = 0; k < q.size(); ++k) {
        g.D.push_back(oulp_load(q[k], static_cast<long>(k), table));
        CVec d = fft(g.D.back());
        for (auto& x : d)
            x *= gain;
        g.d.push_back(std::move(d));
    }
    return g;
}

TimeDomainSignal synthesize(const std::vector<CVec>& d, const PrototypeFilter& f)
{
    const int L = f.L;
    const int h = f.half();
    const long K = static_cast<long>(d.size());
    TimeDomainSignal s;
    s.slot_stride = L / 2;
    s.origin = h;
    s.samples.assign(K == 0 ? 0 : (K - 1) * (L / 2) + f.support(), 0.0);

    CVec pre(L), b(L);
    for (long k = 0; k < K; ++k) {
        if (static_cast<int>(d[k].size()) != L)
            throw std::invalid_argument("synthesize: slot vector length mismatch");
        for (int l = 0; l < L; ++l)
            pre[l] = d[k][l] * std::conj(neg_j_pow(l));
        ifft(pre.data(), b.data(), L);
        const cdouble slot_phase = std::conj(neg_j_pow(k));
        const long center = k * (L / 2);
        for (int i = -h; i <= h; ++i) {
            long m = center + i;
            s.samples[s.origin + m] += slot_phase * (static_cast<double>(L) * f.at(i)) * b[wrap(m, L)];
        }
    }
    return s;
}

TimeDomainSignal synthesize(const OulpFrameGrid& grid, const PrototypeFilter& f)
{
    return synthesize(grid.d, f);
}

CVec analyze_slot(const TimeDomainSignal& signal, const PrototypeFilter& f, long k)
{
    const int L = f.L;
    const int h = f.half();
    const long center = k * (L / 2);
    CVec fold(L, 0.0);
    for (int i = -h; i <= h; ++i) {
        long m = center + i;
        fold[wrap(m, L)] += signal.at_lattice(m) * f.at(i);
    }
    CVec r = fft(fold);
    for (int l = 0; l < L; ++l)
        r[l] *= neg_j_pow(l + k);
    return r;
}

std::vector<CVec> analyze(const TimeDomainSignal& signal, const PrototypeFilter& f, int K)
{
    std::vector<CVec> out;
    out.reserve(K);
    for (int k = 0; k < K; ++k)
        out.push_back(analyze_slot(signal, f, k));
    return out;
}

CVec select_interfered(const CVec& Y, Parity kp)
{
    const int L = static_cast<int>(Y.size());
    CVec out = Y;
    const int s = half_start(kp, L);
    for (int n = 0; n < L / 2; ++n)
        out[s + n] = 0.0;
    return out;
}

CVec interference_eliminate(const CVec& r, const CVec& Hdiag, double N0, Parity kp)
{
    const int L = static_cast<int>(r.size());
    if (static_cast<int>(Hdiag.size()) != L)
        throw std::invalid_argument("interference_eliminate: channel length mismatch");
    if (N0 < 0.0)
        throw std::invalid_argument("interference_eliminate: negative noise power");
    CVec yhat(L);
    for (int l = 0; l < L; ++l) {
        double p = std::norm(Hdiag[l]) + N0;
        if (p == 0.0)
            throw std::domain_error("interference_eliminate: singular channel at subchannel " +
                                    std::to_string(l) + " with zero noise");
        yhat[l] = std::conj(Hdiag[l]) * r[l] / p;
    }
    CVec Yin = select_interfered(ifft(yhat), kp);
    CVec yin = fft(Yin);
    CVec out(L);
    for (int l = 0; l < L; ++l)
        out[l] = r[l] - Hdiag[l] * yin[l];
    return out;
}

std::vector<CVec> interference_eliminate(const std::vector<CVec>& r,
                                         const std::vector<std::vector<CVec>>& H, double N0,
                                         Parity kp)
{
    const int Nr = static_cast<int>(r.size());
    if (Nr == 0 || static_cast<int>(H.size()) != Nr)
        throw std::invalid_argument("interference_eliminate: receive antenna mismatch");
    const int Nt = static_cast<int>(H[0].size());
    const int L = static_cast<int>(r[0].size());
    if (N0 < 0.0)
        throw std::invalid_argument("interference_eliminate: negative noise power");
    if (Nr == 1 && Nt == 1)
        return {interference_eliminate(r[0], H[0][0], N0, kp)};

    std::vector<CVec> yhat(Nt, CVec(L));
    Eigen::MatrixXcd Hl(Nr, Nt);
    Eigen::VectorXcd rl(Nr);
    for (int l = 0; l < L; ++l) {
        for (int j = 0; j < Nr; ++j) {
            rl[j] = r[j][l];
            for (int i = 0; i < Nt; ++i)
                Hl(j, i) = H[j][i][l];
        }
        Eigen::MatrixXcd A = Hl.adjoint() * Hl;
        A.diagonal().array() += N0;
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
        if (!lu.isInvertible())
            throw std::domain_error("interference_eliminate: singular channel at subchannel " +
                                    std::to_string(l) + " with zero noise");
        Eigen::VectorXcd y = lu.solve(Hl.adjoint() * rl);
        for (int i = 0; i < Nt; ++i)
            yhat[i][l] = y[i];
    }
    std::vector<CVec> yin(Nt);
    for (int i = 0; i < Nt; ++i)
        yin[i] = fft(select_interfered(ifft(yhat[i]), kp));
    std::vector<CVec> out = r;
    for (int j = 0; j < Nr; ++j)
        for (int i = 0; i < Nt; ++i)
            for (int l = 0; l < L; ++l)
                out[j][l] -= H[j][i][l] * yin[i][l];
    return out;
}

CVec interference_eliminate_genie(const CVec& r, const CVec& Hdiag, const CVec& Y_in)
{
    CVec yin = fft(Y_in);
    CVec out(r.size());
    for (size_t l = 0; l < r.size(); ++l)
        out[l] = r[l] - Hdiag[l] * yin[l];
    return out;
}

CVec purify(const CVec& R, Parity kp, int Lc)
{
    const int L = static_cast<int>(R.size());
    if (Lc < 1 || Lc > L / 2)
        throw std::invalid_argument("purify: channel length " + std::to_string(Lc) +
                                    " outside [1, " + std::to_string(L / 2) + "]");
    const int keep = half_start(kp, L);
    const int fold = L / 2 - keep;
    CVec x(R.begin() + keep, R.begin() + keep + L / 2);
    for (int i = 0; i < Lc - 1; ++i)
        x[i] += R[fold + i];
    return x;
}

FinalOutput final_transform(const CVec& x, const CVec& taps)
{
    const int P = static_cast<int>(x.size());
    return {fft(x), fft_padded(taps, P)};
}

OulpTransceiver::OulpTransceiver(PrototypeFilter f, int delta)
    : filter_(std::move(f)), table_(build_interference_table(filter_, delta))
{
    const int L = filter_.L;
    const CVec& v0 = table_.gains(Parity::even, 0);
    double inv = 0.0;
    for (int n = 0; n < L / 2; ++n)
        inv += 1.0 / v0[n].real();
    inv /= (L / 2);
    // symbols are unit energy, precoded q has E|q|^2 = 2/L
    tx_gain_ = std::sqrt(1.0 / (2.0 * inv));

    const CVec& vo = table_.gains(Parity::odd, 0);
    const CVec& vp = table_.gains(Parity::even, 1);
    const CVec& vm = table_.gains(Parity::even, -1);
    double leak = 0.0;
    for (int n = L / 2; n < L; ++n)
        leak += std::norm(vp[n] / vo[n]) + std::norm(vm[n] / vo[n]);
    subchannel_power_ = tx_gain_ * tx_gain_ * (2.0 / L) * (L / 2 + leak);
}

TimeDomainSignal OulpTransceiver::transmit(const std::vector<CVec>& Q, double amplitude) const
{
    std::vector<CVec> q;
    q.reserve(Q.size());
    for (const auto& s : Q)
        q.push_back(ifft(s));
    OulpFrameGrid g = build_grid(q, table_, amplitude * tx_gain_);
    return synthesize(g, filter_);
}

std::vector<CVec> OulpTransceiver::receive_slot(const std::vector<CVec>& r,
                                                const std::vector<std::vector<CVec>>& taps,
                                                double N0, long k, double amplitude) const
{
    const int L = filter_.L;
    const int Nr = static_cast<int>(r.size());
    const int Nt = static_cast<int>(taps.at(0).size());
    int Lc = 1;
    std::vector<std::vector<CVec>> H(Nr, std::vector<CVec>(Nt));
    for (int j = 0; j < Nr; ++j)
        for (int i = 0; i < Nt; ++i) {
            H[j][i] = fft_padded(taps[j][i], L);
            Lc = std::max(Lc, static_cast<int>(taps[j][i].size()));
        }
    const double reg = N0 / (amplitude * amplitude * subchannel_power_);
    const Parity kp = parity_of(k);
    std::vector<CVec> rt = interference_eliminate(r, H, reg, kp);
    std::vector<CVec> chi(Nr);
    for (int j = 0; j < Nr; ++j)
        chi[j] = fft(purify(ifft(rt[j]), kp, Lc));
    return chi;
}

} // namespace oulp
