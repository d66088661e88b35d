#pragma once

#include "oulp/types.hpp"

namespace oulp {

// X[k] = sum_n x[n] exp(-j 2 pi k n / N), no scaling
CVec fft(const CVec& x);

// x[n] = (1/N) sum_k X[k] exp(+j 2 pi k n / N)
CVec ifft(const CVec& X);

// Same transforms on raw buffers; in and out must not alias.
void fft(const cdouble* in, cdouble* out, int n);
void ifft(const cdouble* in, cdouble* out, int n);

// Zero-pads (or rejects) taps to `points` and returns their DFT.
CVec fft_padded(const CVec& taps, int points);

} // namespace oulp
