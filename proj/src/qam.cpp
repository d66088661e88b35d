#include "oulp/qam.hpp"

#include "oulp/mimo.hpp"

#include <cmath>
#include <stdexcept>

namespace oulp {

namespace {

double gray_level(int two_bits)
{
    static const double levels[4] = {-3.0, -1.0, 3.0, 1.0};
    return levels[two_bits & 3];
}

} // namespace

const CVec& qam16_constellation()
{
    static const CVec points = [] {
        CVec c(16);
        const double s = 1.0 / std::sqrt(10.0);
        for (int i = 0; i < 16; ++i)
            c[i] = cdouble(gray_level(i >> 2), gray_level(i)) * s;
        return c;
    }();
    return points;
}

int qam16_index(const std::uint8_t* bits)
{
    return (bits[0] & 1) << 3 | (bits[1] & 1) << 2 | (bits[2] & 1) << 1 | (bits[3] & 1);
}

void qam16_bits(int index, std::uint8_t* bits)
{
    for (int b = 0; b < 4; ++b)
        bits[b] = static_cast<std::uint8_t>((index >> (3 - b)) & 1);
}

CVec qam16_map(const std::vector<std::uint8_t>& bits)
{
    if (bits.size() % 4 != 0)
        throw std::invalid_argument("qam16_map: bit count must be a multiple of 4");
    const CVec& c = qam16_constellation();
    CVec out(bits.size() / 4);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = c[qam16_index(bits.data() + 4 * i)];
    return out;
}

std::vector<std::uint8_t> qam16_demap(const CVec& symbols)
{
    const CVec& c = qam16_constellation();
    std::vector<std::uint8_t> bits(symbols.size() * 4);
    for (size_t i = 0; i < symbols.size(); ++i)
        qam16_bits(nearest_point(symbols[i], c), bits.data() + 4 * i);
    return bits;
}

} // namespace oulp
