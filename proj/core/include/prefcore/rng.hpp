#ifndef PREFCORE_RNG_HPP
#define PREFCORE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace prefcore {

// Deterministic random source for the instance generator and the test corpora.
//
// std::mt19937_64 has a fixed, portable output sequence, but the standard
// *distributions* do not — their mapping from raw bits to values is
// implementation-defined. To keep generated documents bit-identical across
// platforms we derive everything from the raw engine ourselves.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform integer in [lo, hi], inclusive. The modulo bias is irrelevant at
    // the desk-scale ranges used here (hi - lo < 2^32 always).
    int pick(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    // Uniform double in [0, 1).
    double unit() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

    bool chance(double p) { return unit() < p; }

    // Fisher-Yates, driven by pick() so the permutation is platform-stable.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = pick(0, i);
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        }
    }

    // k distinct elements of {0, ..., n-1}, in random order.
    std::vector<int> sample(int n, int k) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        shuffle(pool);
        pool.resize(static_cast<std::size_t>(k));
        return pool;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace prefcore

#endif
