#include "shearlet/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace shearlet {

namespace {

// plan creation is not thread-safe; execution via fftw_execute_dft on
// distinct buffers is. Plans are cached per (size, sign) forever.
std::mutex plan_mutex;

fftw_plan get_plan(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<fftw_complex> tmp(static_cast<size_t>(n) * n);
    fftw_plan p = fftw_plan_dft_2d(n, n, tmp.data(), tmp.data(), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

}  // namespace

void dft2(const ComplexGrid& in, ComplexGrid& out, int sign) {
    if (in.n1 != in.n2) throw config_error("dft2: grid must be square");
    int n = in.n1;
    if (out.n1 != n || out.n2 != n) out = ComplexGrid(n, n);
    fftw_plan p = get_plan(n, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    // const_cast is safe: out-of-place c2c does not write the input
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cd*>(in.v.data())),
                     reinterpret_cast<fftw_complex*>(out.v.data()));
}

ComplexGrid field_of_spectrum(const ComplexGrid& spec) {
    ComplexGrid out;
    dft2(spec, out, +1);
    return out;
}

ComplexGrid spectrum_of_field(const ComplexGrid& samples) {
    ComplexGrid out;
    dft2(samples, out, -1);
    double inv = 1.0 / (static_cast<double>(samples.n1) * samples.n2);
    for (auto& z : out.v) z *= inv;
    return out;
}

}  // namespace shearlet
