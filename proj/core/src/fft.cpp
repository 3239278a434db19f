#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace mdphase::detail {
namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// FFTW's planner mutates global state; execution via fftw_execute_dft on
// caller buffers is safe once the plan exists. FFTW_UNALIGNED keeps the plan
// valid for any std::vector storage.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        const auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::vector<std::complex<double>> probe(static_cast<std::size_t>(n));
        auto* buf = reinterpret_cast<fftw_complex*>(probe.data());
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

    ~PlanCache() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

void run(std::vector<std::complex<double>>& a, int sign) {
    thread_local PlanCache cache;
    const int n = static_cast<int>(a.size());
    fftw_plan plan = cache.get(n, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(plan, buf, buf);
}

} // namespace

void fft_forward(std::vector<std::complex<double>>& a) { run(a, FFTW_FORWARD); }

void fft_backward(std::vector<std::complex<double>>& a) {
    run(a, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(a.size());
    for (auto& x : a) x *= scale;
}

} // namespace mdphase::detail
