#ifndef RIGIDITY_RNG_HPP
#define RIGIDITY_RNG_HPP

#include <cstdint>

namespace rigidity {

// splitmix64: tiny, fully specified, platform-independent. Verdicts and
// reports must reproduce bit-for-bit from (seed, round), so we avoid
// std::uniform_int_distribution (implementation-defined) entirely.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : origin_(seed), state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [lo, hi] via rejection sampling.
    // Requires lo <= hi < UINT64_MAX.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo + 1;
        // Largest multiple of span representable; x below it keeps x % span uniform.
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + x % span;
    }

    // Child stream keyed on the construction seed, independent of how much
    // of this stream has been consumed.
    SplitRng split(std::uint64_t key) const {
        SplitRng mixer(origin_ ^ (key * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
        return SplitRng(mixer.next());
    }

private:
    std::uint64_t origin_;
    std::uint64_t state_;
};

// Stream tags so each analysis kind draws from its own substream.
enum class Stream : std::uint64_t {
    local = 1,
    global = 2,
    k_min = 3,
    k_sh = 4,
    dot_space = 5,
    hendrickson = 6,
};

inline SplitRng round_rng(std::uint64_t master_seed, Stream stream, std::uint64_t round) {
    return SplitRng(master_seed).split(static_cast<std::uint64_t>(stream)).split(round);
}

}  // namespace rigidity

#endif
