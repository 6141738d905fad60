#ifndef HTD_RNG_HPP
#define HTD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace htd {

// Seeded RNG with hand-rolled distributions. std::shuffle and the standard
// distributions are implementation-defined, so everything that must be
// reproducible across toolchains draws through this wrapper instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n)
    int uniform_int(int n) { return n <= 1 ? 0 : static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = uniform_int(i + 1);
            std::swap(v[i], v[static_cast<std::size_t>(j)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace htd

#endif
