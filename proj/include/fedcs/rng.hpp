#ifndef FEDCS_RNG_HPP
#define FEDCS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fedcs {

// Stateless seed mixer (splitmix64). Used to derive independent per-purpose
// streams from (seed, round, client, tag) so that adding a consumer never
// perturbs any other stream.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

// Stream tags for derive_seed.
enum SeedTag : std::uint64_t {
    kSeedModelInit = 1,
    kSeedShuffle = 2,
    kSeedRaInit = 3,
    kSeedData = 4,
    kSeedLocalSplit = 5,
    kSeedFineTune = 6,
    kSeedRaPass = 7,
    kSeedSampling = 8,
};

// mt19937_64 with hand-rolled distributions so draws do not depend on the
// standard library's (implementation-defined) distribution algorithms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unbiased integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    // standard normal via Box-Muller (cosine branch only; no cached state)
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // gamma(alpha, 1) by Marsaglia-Tsang; alpha < 1 handled by boosting.
    double gamma(double alpha) {
        if (alpha < 1.0) {
            const double u = uniform();
            return gamma(alpha + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    std::vector<double> dirichlet(double alpha, int dims) {
        std::vector<double> g(dims);
        double sum = 0.0;
        for (int i = 0; i < dims; ++i) {
            g[i] = gamma(alpha);
            sum += g[i];
        }
        if (sum <= 0.0) {  // pathological underflow; fall back to uniform
            for (auto& v : g) v = 1.0 / dims;
            return g;
        }
        for (auto& v : g) v /= sum;
        return g;
    }

    // in-place Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(next_below(i))]);
        }
    }

    // k distinct values from [0, n), returned in ascending order
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        shuffle(pool);
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    std::string save_state() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    void restore_state(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace fedcs

#endif
