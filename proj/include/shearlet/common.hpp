#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace shearlet {

using cd = std::complex<double>;

// dense row-major N1 x N2 array; the workhorse container for grids and
// per-band coefficient blocks
template <class T>
struct Array2 {
    int n1 = 0, n2 = 0;
    std::vector<T> v;

    Array2() = default;
    Array2(int r, int c) : n1(r), n2(c), v(static_cast<size_t>(r) * c) {}
    Array2(int r, int c, T fill) : n1(r), n2(c), v(static_cast<size_t>(r) * c, fill) {}

    T& operator()(int i, int k) { return v[static_cast<size_t>(i) * n2 + k]; }
    const T& operator()(int i, int k) const { return v[static_cast<size_t>(i) * n2 + k]; }
    size_t size() const { return v.size(); }
};

using RealGrid = Array2<double>;
using ComplexGrid = Array2<cd>;

// integer FFT frequency at row/column index i: 0..N/2-1, then -N/2..-1
inline int freq_of(int i, int N) { return i < (N + 1) / 2 ? i : i - N; }

// index of integer frequency xi in natural FFT order
inline int index_of(int xi, int N) { return ((xi % N) + N) % N; }

inline int64_t floordiv(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline int64_t posmod(int64_t a, int64_t b) {
    int64_t r = a % b;
    return r < 0 ? r + b : r;
}

inline int64_t pow2(int e) { return int64_t(1) << e; }
inline int64_t pow4(int e) { return int64_t(1) << (2 * e); }

// largest j with 4^j <= N
inline int default_j_max(int N) {
    int j = 0;
    while (pow4(j + 1) <= N) ++j;
    return j;
}

int thread_count();  // SHEARLET_THREADS, else hardware_concurrency

// chunked parallel loop over [0, n); deterministic results require the body
// to write only to disjoint slots (no cross-chunk reductions here).  Nested
// calls run serially in the caller's thread.
void parallel_for(int n, const std::function<void(int)>& body);

// shortest round-trip decimal form, 17 significant digits
std::string fmt_g17(double x);

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace shearlet
