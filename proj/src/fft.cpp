#include "oulp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace oulp {

namespace {

class PlanCache {
public:
    ~PlanCache()
    {
        for (auto& kv : plans_)
            fftw_destroy_plan(kv.second);
    }

    fftw_plan get(int n, int sign)
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end())
            return it->second;
        fftw_complex* a = fftw_alloc_complex(n);
        fftw_complex* b = fftw_alloc_complex(n);
        fftw_plan p = fftw_plan_dft_1d(n, a, b, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(a);
        fftw_free(b);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache()
{
    static PlanCache c;
    return c;
}

void run(const cdouble* in, cdouble* out, int n, int sign)
{
    if (n <= 0)
        throw std::invalid_argument("fft length must be positive");
    fftw_plan p = cache().get(n, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

void fft(const cdouble* in, cdouble* out, int n) { run(in, out, n, FFTW_FORWARD); }

void ifft(const cdouble* in, cdouble* out, int n)
{
    run(in, out, n, FFTW_BACKWARD);
    double s = 1.0 / n;
    for (int i = 0; i < n; ++i)
        out[i] *= s;
}

CVec fft(const CVec& x)
{
    CVec y(x.size());
    fft(x.data(), y.data(), static_cast<int>(x.size()));
    return y;
}

CVec ifft(const CVec& X)
{
    CVec y(X.size());
    ifft(X.data(), y.data(), static_cast<int>(X.size()));
    return y;
}

CVec fft_padded(const CVec& taps, int points)
{
    if (static_cast<int>(taps.size()) > points)
        throw std::invalid_argument("tap count " + std::to_string(taps.size()) +
                                    " exceeds transform size " + std::to_string(points));
    CVec buf(points, 0.0);
    std::copy(taps.begin(), taps.end(), buf.begin());
    return fft(buf);
}

} // namespace oulp
