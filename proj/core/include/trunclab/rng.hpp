#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace trunclab {

using Complex = std::complex<double>;

// splitmix64 finalizer; used only to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// A self-contained random stream.  Trial substreams are keyed by
// (master seed, trial index), so results do not depend on how trials are
// scheduled across workers.  Gaussian variates use Box-Muller on explicit
// uniforms to keep the draw sequence independent of the standard library's
// distribution internals.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    static RngStream for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
        std::uint64_t mixed = splitmix64(master_seed ^ splitmix64(trial_index));
        return RngStream(mixed);
    }

    std::uint64_t raw() { return gen_(); }

    // uniform on [0,1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform on (0,1], safe under log()
    double uniform_open() { return 1.0 - uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_open();
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // standard complex Gaussian with E|g|^2 = 1 (re/im independent N(0,1/2))
    Complex complex_gaussian() {
        double u1 = uniform_open();
        double u2 = uniform();
        double radius = std::sqrt(-std::log(u1));  // sqrt(-2 log u)/sqrt(2)
        double angle = 2.0 * 3.14159265358979323846 * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace trunclab
