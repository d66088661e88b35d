#pragma once

#include <complex>
#include <vector>

namespace oulp {

using cdouble = std::complex<double>;
using CVec = std::vector<cdouble>;
using RVec = std::vector<double>;

enum class Parity { even, odd };

inline Parity parity_of(long k) { return (k % 2 == 0) ? Parity::even : Parity::odd; }
inline int parity_index(Parity p) { return p == Parity::even ? 0 : 1; }

// floor modulo, result in [0, n)
inline long wrap(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

// (-j)^e for integer e
inline cdouble neg_j_pow(long e)
{
    switch (wrap(e, 4)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
    }
}

} // namespace oulp
