#include "quatla/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace quatla::kernels {

namespace {

bool detect_avx2() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() noexcept {
    const bool have = detect_avx2();
    if (const char* env = std::getenv("QUATLA_KERNELS")) {
        const std::string_view v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && have) return Backend::avx2;
    }
    return have ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{initial_backend()};
    return b;
}

} // namespace

bool avx2_available() noexcept {
    static const bool have = detect_avx2();
    return have;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) throw std::invalid_argument("avx2 backend not supported on this CPU");
    current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) noexcept { return b == Backend::avx2 ? "avx2" : "scalar"; }

void mix_pair(std::span<Complex> x, std::span<Complex> y, Complex a, Complex b, Complex c, Complex d) {
    if (active_backend() == Backend::avx2) return avx2::mix_pair(x, y, a, b, c, d);
    scalar::mix_pair(x, y, a, b, c, d);
}

void sym_update(std::span<double> out, std::span<const double> ha, std::span<const double> hb,
                std::span<const double> ga, std::span<const double> gb, double alpha, double beta,
                double gamma) {
    if (active_backend() == Backend::avx2) return avx2::sym_update(out, ha, hb, ga, gb, alpha, beta, gamma);
    scalar::sym_update(out, ha, hb, ga, gb, alpha, beta, gamma);
}

} // namespace quatla::kernels
