#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace whsolve::detail {
namespace {

struct Scratch {
    fftw_complex* buf = nullptr;
    int n = 0;
    ~Scratch() {
        if (buf) fftw_free(buf);
    }
    fftw_complex* get(int want) {
        if (want > n) {
            if (buf) fftw_free(buf);
            buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<size_t>(want)));
            if (!buf) throw std::bad_alloc();
            n = want;
        }
        return buf;
    }
};

// FFTW planning is not thread-safe; execution of an existing plan on new arrays is.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        auto* tmp = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<size_t>(n)));
        fftw_plan p = fftw_plan_dft_1d(n, tmp, tmp, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
        fftw_free(tmp);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }
    ~PlanCache() {
        for (auto& kv : plans_) fftw_destroy_plan(kv.second);
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void dft(std::complex<double>* data, int n, int sign) {
    if (n <= 0) return;
    fftw_plan p = cache().get(n, sign);
    thread_local Scratch scratch;
    fftw_complex* buf = scratch.get(n);
    std::memcpy(buf, data, sizeof(fftw_complex) * static_cast<size_t>(n));
    fftw_execute_dft(p, buf, buf);
    std::memcpy(static_cast<void*>(data), buf, sizeof(fftw_complex) * static_cast<size_t>(n));
}

}  // namespace whsolve::detail
