#include "oracles.hpp"

#include "oulp/channel.hpp"
#include "oulp/fft.hpp"
#include "oulp/ofdm.hpp"
#include "oulp/qam.hpp"

#include <doctest.h>

using namespace oulp;

TEST_CASE("16-QAM mapping")
{
    const CVec& C = qam16_constellation();
    double e = 0.0;
    for (auto c : C)
        e += std::norm(c) / 16.0;
    CHECK(std::abs(e - 1.0) < 1e-12);

    std::vector<std::uint8_t> bits;
    for (int i = 0; i < 16; ++i)
        for (int b = 3; b >= 0; --b)
            bits.push_back((i >> b) & 1);
    CHECK(qam16_demap(qam16_map(bits)) == bits);

    const double d = 2.0 / std::sqrt(10.0);
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            if (std::abs(std::abs(C[a] - C[b]) - d) < 1e-12)
                CHECK(bit_errors(a, b) == 1);

    CHECK_THROWS_AS(qam16_map(std::vector<std::uint8_t>(6, 0)), std::invalid_argument);
}

TEST_CASE("OFDM modulation layout")
{
    OfdmConfig cfg{16, 4};
    CHECK(OfdmConfig{}.slot_samples() == 140);
    std::vector<CVec> sym(1, CVec(16, 1.0));
    TimeDomainSignal s = ofdm_modulate(sym, cfg);
    CHECK(s.length() == 20);
    for (int n = 0; n < 20; ++n)
        CHECK(std::abs(s.samples[n] - (n == 4 ? 4.0 : 0.0)) < 1e-12);

    std::mt19937_64 g(1);
    std::vector<CVec> X(50);
    for (auto& x : X)
        x = oracle::random_cvec(g, 16);
    double px = 0.0, ps = 0.0;
    for (auto& x : X)
        for (auto v : x)
            px += std::norm(v);
    TimeDomainSignal t = ofdm_modulate(X, cfg);
    for (int k = 0; k < 50; ++k)
        for (int n = 0; n < 16; ++n)
            ps += std::norm(t.samples[k * 20 + 4 + n]);
    CHECK(std::abs(ps / px - 1.0) < 1e-10);
}

TEST_CASE("OFDM demodulation through a static channel")
{
    OfdmConfig cfg{32, 4};
    std::mt19937_64 g(2);
    std::vector<CVec> X(6);
    for (auto& x : X)
        x = oracle::random_cvec(g, 32);
    Rng rng = make_rng(3);
    TimeDomainSignal s = ofdm_modulate(X, cfg);

    std::vector<CVec> flat = ofdm_demodulate(s.samples, cfg, 6);
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 32; ++l)
            CHECK(std::abs(flat[k][l] - X[k][l]) < 1e-10);

    for (int Lc : {3, 5, 8}) {
        RVec p(Lc, 1.0 / Lc);
        ChannelRealization ch = sample_channel(p, std::numeric_limits<double>::infinity(), 8, 1e-6,
                                               cfg.slot_samples(), 1, 1, 40 + Lc);
        CVec y = apply_channel({s.samples}, ch, 0.0, rng)[0];
        std::vector<CVec> R = ofdm_demodulate(y, cfg, 6);
        CVec H = channel_ffts(ch, 0, 32)[0][0];
        double worst = 0.0;
        for (int k = 1; k < 6; ++k)
            for (int l = 0; l < 32; ++l)
                worst = std::max(worst, std::abs(R[k][l] - H[l] * X[k][l]));
        CAPTURE(Lc);
        if (cp_covers(cfg, Lc))
            CHECK(worst < 1e-10);
        else
            CHECK(worst > 1e-3);
    }
    CHECK_THROWS_AS(ofdm_demodulate(CVec(10), cfg, 1), std::invalid_argument);
}

TEST_CASE("prefix overhead")
{
    CHECK(ofdm_efficiency_loss({128, 12}) == doctest::Approx(8.571).epsilon(1e-3));
    CHECK(ofdm_efficiency_loss({256, 12}) == doctest::Approx(4.478).epsilon(1e-3));
    CHECK(ofdm_efficiency_loss({512, 12}) == doctest::Approx(2.290).epsilon(1e-3));
}
