#include "oulp/mimo.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oulp {

Eigen::Matrix2cd alamouti_encode(cdouble s1, cdouble s2)
{
    Eigen::Matrix2cd Q;
    Q << s1, -std::conj(s2), s2, std::conj(s1);
    return Q;
}

int nearest_point(cdouble z, const CVec& constellation)
{
    int best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(constellation.size()); ++i) {
        double d = std::norm(z - constellation[i]);
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return best;
}

namespace {

void check(const Eigen::MatrixXcd& chi, const Eigen::MatrixXcd& Xi, const CVec& constellation)
{
    if (constellation.empty())
        throw std::invalid_argument("ml_detect: empty constellation");
    if (chi.rows() != Xi.rows())
        throw std::invalid_argument("ml_detect: receive dimension mismatch");
    if (!Xi.allFinite() || !chi.allFinite())
        throw std::invalid_argument("ml_detect: non-finite input");
}

// For each slot, exhaustive over Nt-tuples.
std::vector<int> uncoded_search(const Eigen::MatrixXcd& chi, const Eigen::MatrixXcd& Xi,
                                const CVec& c)
{
    const int Nt = static_cast<int>(Xi.cols());
    const int M = static_cast<int>(c.size());
    long total = 1;
    for (int i = 0; i < Nt; ++i)
        total *= M;
    std::vector<int> out;
    Eigen::VectorXcd s(Nt);
    std::vector<int> digits(Nt);
    for (int t = 0; t < chi.cols(); ++t) {
        double best = std::numeric_limits<double>::infinity();
        std::vector<int> arg(Nt, 0);
        for (long code = 0; code < total; ++code) {
            long rem = code;
            for (int i = Nt - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rem % M);
                rem /= M;
                s[i] = c[digits[i]];
            }
            double d = (chi.col(t) - Xi * s).squaredNorm();
            if (d < best) {
                best = d;
                arg = digits;
            }
        }
        out.insert(out.end(), arg.begin(), arg.end());
    }
    return out;
}

} // namespace

std::vector<int> ml_detect_exhaustive(const Eigen::MatrixXcd& chi, const Eigen::MatrixXcd& Xi,
                                      const CVec& constellation, StbcCode code)
{
    check(chi, Xi, constellation);
    if (code == StbcCode::uncoded)
        return uncoded_search(chi, Xi, constellation);
    if (Xi.cols() != 2 || chi.cols() != 2)
        throw std::invalid_argument("ml_detect: Alamouti needs Nt = 2 and a 2-slot block");
    const int M = static_cast<int>(constellation.size());
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> arg{0, 0};
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b) {
            Eigen::MatrixXcd Q = alamouti_encode(constellation[a], constellation[b]);
            double d = (chi - Xi * Q).squaredNorm();
            if (d < best) {
                best = d;
                arg = {a, b};
            }
        }
    return arg;
}

std::vector<int> ml_detect(const Eigen::MatrixXcd& chi, const Eigen::MatrixXcd& Xi,
                           const CVec& constellation, StbcCode code)
{
    check(chi, Xi, constellation);
    if (code == StbcCode::uncoded) {
        if (Xi.cols() != 1)
            return uncoded_search(chi, Xi, constellation);
        double g = Xi.col(0).squaredNorm();
        std::vector<int> out;
        for (int t = 0; t < chi.cols(); ++t) {
            cdouble z = Xi.col(0).dot(chi.col(t));
            out.push_back(g > 0.0 ? nearest_point(z / g, constellation) : 0);
        }
        return out;
    }
    if (Xi.cols() != 2 || chi.cols() != 2)
        throw std::invalid_argument("ml_detect: Alamouti needs Nt = 2 and a 2-slot block");
    cdouble z1 = 0.0, z2 = 0.0;
    for (int j = 0; j < Xi.rows(); ++j) {
        cdouble h1 = Xi(j, 0), h2 = Xi(j, 1);
        cdouble a = chi(j, 0), b = chi(j, 1);
        z1 += std::conj(h1) * a + h2 * std::conj(b);
        z2 += std::conj(h2) * a - h1 * std::conj(b);
    }
    double g = Xi.squaredNorm();
    if (g == 0.0)
        return {0, 0};
    return {nearest_point(z1 / g, constellation), nearest_point(z2 / g, constellation)};
}

MimoBlock collect_block(const std::vector<std::vector<CVec>>& chi,
                        const std::vector<std::vector<std::vector<CVec>>>& hdiag, long k0,
                        int eta, int K_block, double drift_threshold)
{
    if (k0 < 0 || k0 + K_block > static_cast<long>(chi.size()) ||
        k0 + K_block > static_cast<long>(hdiag.size()))
        throw std::out_of_range("collect_block: block exceeds frame");
    const int Nr = static_cast<int>(chi[k0].size());
    const int Nt = static_cast<int>(hdiag[k0][0].size());
    MimoBlock b;
    b.chi.resize(Nr, K_block);
    b.Xi.resize(Nr, Nt);
    for (int j = 0; j < Nr; ++j) {
        for (int t = 0; t < K_block; ++t)
            b.chi(j, t) = chi[k0 + t][j][eta];
        for (int i = 0; i < Nt; ++i)
            b.Xi(j, i) = hdiag[k0][j][i][eta];
    }
    double ref = b.Xi.norm();
    for (int t = 1; t < K_block; ++t) {
        Eigen::MatrixXcd X(Nr, Nt);
        for (int j = 0; j < Nr; ++j)
            for (int i = 0; i < Nt; ++i)
                X(j, i) = hdiag[k0 + t][j][i][eta];
        double rel = ref > 0.0 ? (X - b.Xi).norm() / ref : 0.0;
        b.drift = std::max(b.drift, rel);
    }
    b.drifted = b.drift > drift_threshold;
    return b;
}

} // namespace oulp
