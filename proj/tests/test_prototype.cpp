#include "oracles.hpp"

#include "oulp/fft.hpp"
#include "oulp/prototype.hpp"

#include <doctest.h>

using namespace oulp;

TEST_CASE("designed IOTA filter meets the real-orthogonality bound")
{
    for (int L : {8, 16, 32, 128}) {
        CAPTURE(L);
        PrototypeFilter f = design_iota(L);
        CHECK(orthogonality_residual(f) <= 1e-8);
        CHECK(f.support() == f.overlap * L + 1);
        double e = 0.0;
        for (double c : f.coeffs)
            e += c * c;
        CHECK(e == doctest::Approx(1.0).epsilon(1e-12));
        for (int m = 0; m <= f.half(); ++m)
            CHECK(f.at(m) == f.at(-m));
    }
}

TEST_CASE("residual agrees with direct summation of lattice inner products")
{
    PrototypeFilter f = design_iota(16);
    double worst = 0.0;
    for (int kappa = -11; kappa <= 11; ++kappa)
        for (int ell = -8; ell < 8; ++ell) {
            cdouble ip = oracle::inner(f, -kappa, -ell, 0, 0);
            double target = (kappa == 0 && ell == 0) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(ip.real() - target));
        }
    CHECK(worst <= 1e-8);
    CHECK(orthogonality_residual(f) == doctest::Approx(worst).epsilon(1e-3).scale(1e-12));
}

TEST_CASE("rectangular pulse violates real orthogonality")
{
    const int L = 32;
    PrototypeFilter rect = make_filter(RVec(L + 1, 1.0), L, 1);
    CHECK(orthogonality_residual(rect) > 1e-2);
    CHECK(xi_coefficient(rect, 0, 0, Parity::even).real() == doctest::Approx(1.0));
}

TEST_CASE("too short an overlap is rejected with the achieved residual")
{
    CHECK_THROWS_AS(design_iota(30), std::invalid_argument);
    CHECK_THROWS_AS(design_iota(4), std::invalid_argument);
    CHECK_THROWS_AS(design_iota(32, 2), std::invalid_argument);
    try {
        design_iota(32, 4);
        FAIL("overlap 4 should not reach the bound");
    } catch (const DesignError& e) {
        CHECK(e.achieved_residual > kResidualBound);
        CHECK(e.achieved_residual < 1e-3);
    }
}

TEST_CASE("xi matches the lattice inner product for every offset and parity")
{
    PrototypeFilter f = design_iota(16);
    for (int kp = 0; kp < 4; ++kp)
        for (int lp : {0, 5, 11})
            for (int kappa = -3; kappa <= 3; ++kappa)
                for (int ell = -4; ell <= 4; ++ell) {
                    cdouble direct = oracle::inner(f, kp - kappa, lp - ell, kp, lp);
                    cdouble xi = xi_coefficient(f, kappa, ell, parity_of(kp));
                    CHECK(std::abs(direct - xi) < 1e-12);
                }
}

TEST_CASE("xi structure: unit center, periodicity, parity rule, small tail")
{
    const int L = 32;
    PrototypeFilter f = design_iota(L);
    CHECK(std::abs(xi_coefficient(f, 0, 0, Parity::even) - 1.0) < 1e-10);
    CHECK(std::abs(xi_coefficient(f, 0, 0, Parity::odd) - 1.0) < 1e-10);
    for (int kappa = -2; kappa <= 2; ++kappa)
        for (int ell = -(L - 1); ell < L; ++ell) {
            cdouble e = xi_coefficient(f, kappa, ell, Parity::even);
            cdouble o = xi_coefficient(f, kappa, ell, Parity::odd);
            CHECK(std::abs(o - e * std::polar(1.0, M_PI * ell)) < 1e-12);
            if (ell + L < L)
                CHECK(std::abs(xi_coefficient(f, kappa, ell + L, Parity::even) - e) < 1e-12);
            int wrapped = std::min(std::abs(ell), L - std::abs(ell));
            if (wrapped > 1 && std::abs(kappa) <= 1)
                CHECK(std::abs(e) < 0.05);
            CHECK(std::abs(e.real()) < 1e-8 + (kappa == 0 && ell == 0 ? 1.0 : 0.0));
        }
    CVec row = xi_row(f, 1, Parity::odd);
    for (int ell = 0; ell < L; ++ell)
        CHECK(std::abs(row[ell] - xi_coefficient(f, 1, ell, Parity::odd)) < 1e-12);
}

TEST_CASE("gain vector follows the sinusoidal closed form")
{
    for (int L : {32, 128}) {
        PrototypeFilter f = design_iota(L);
        CVec ve = gain_vector_v(f, 0, Parity::even, 1);
        CVec vo = gain_vector_v(f, 0, Parity::odd, 1);
        double dev = 0.0;
        for (int n = 0; n < L; ++n) {
            dev = std::max(dev, std::abs(ve[n] - (1.0 + 0.8822 * std::sin(2.0 * M_PI * n / L))));
            CHECK(std::abs(ve[n].imag()) < 1e-12);
            CHECK(std::abs(vo[n] - (2.0 - ve[n])) < 2e-3);
        }
        CHECK(dev <= 2e-3);
        CHECK(std::abs(ve[0] - 1.0) < 1e-3);
        CHECK(std::abs(ve[L / 4] - 1.8822) < 1e-3);
    }
}

TEST_CASE("interference matrix is the banded circulant of the padded xi column")
{
    const int L = 16;
    PrototypeFilter f = design_iota(L);
    InterferenceTable t = build_interference_table(f, 1);
    for (Parity kp : {Parity::even, Parity::odd})
        for (int kappa : {-1, 0, 1}) {
            Eigen::MatrixXcd Z = build_interference_matrix(t, kappa, kp);
            CVec col(L, 0.0);
            col[0] = xi_coefficient(f, kappa, 0, kp);
            col[1] = xi_coefficient(f, kappa, 1, kp);
            col[L - 1] = xi_coefficient(f, kappa, -1, kp);
            CHECK(oracle::max_abs(Z - oracle::dense_circulant(col)) < 1e-14);
            for (int r = 1; r < L; ++r)
                for (int c = 0; c < L; ++c)
                    CHECK(Z(r, c) == Z(0, ((c - r) % L + L) % L));
        }
    Eigen::MatrixXcd Z0 = build_interference_matrix(t, 0, Parity::even);
    CHECK(std::abs(std::abs(Z0(1, 0)) - 0.4411) < 1e-3);
}

TEST_CASE("interference matrix is diagonalised by the DFT")
{
    std::mt19937_64 rng(7);
    for (int L : {16, 32, 64}) {
        PrototypeFilter f = design_iota(L);
        InterferenceTable t = build_interference_table(f, 1);
        Eigen::MatrixXcd F = oracle::dft_matrix(L), Fi = oracle::idft_matrix(L);
        for (Parity kp : {Parity::even, Parity::odd})
            for (int kappa : {-1, 0, 1}) {
                Eigen::MatrixXcd V = Fi * build_interference_matrix(t, kappa, kp) * F;
                Eigen::VectorXcd v = oracle::to_eigen(t.gains(kp, kappa));
                CHECK(oracle::max_abs(V - Eigen::MatrixXcd(v.asDiagonal())) <= 1e-10);
                Eigen::VectorXcd vbar = L * Fi * oracle::to_eigen(t.column(kp, kappa));
                CHECK(oracle::max_abs(vbar - v) <= 1e-12);
            }
        for (int trial = 0; trial < 20; ++trial) {
            CVec col = oracle::random_cvec(rng, L);
            Eigen::MatrixXcd V = Fi * circulant(col) * F;
            CVec v = ifft(col);
            for (auto& x : v)
                x *= double(L);
            CHECK(oracle::max_abs(V - Eigen::MatrixXcd(oracle::to_eigen(v).asDiagonal())) <= 1e-10);
        }
    }
}
