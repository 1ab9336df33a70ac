#include "shearlet/common.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace shearlet {

int thread_count() {
    if (const char* s = std::getenv("SHEARLET_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {
thread_local bool inside_parallel = false;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    int nt = std::min(thread_count(), n);
    if (nt <= 1 || n <= 1 || inside_parallel) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([=, &body] {
            inside_parallel = true;
            for (int i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace shearlet
