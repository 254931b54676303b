#include "rigidity/prime_pool.hpp"

#include <cmath>
#include <stdexcept>

namespace rigidity {

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("sieve_primes: lo > hi");
    std::vector<bool> composite(hi + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= hi; ++q) {
        if (composite[q]) continue;
        if (q > lo) out.push_back(q);
        for (std::uint64_t m = q * q; m <= hi; m += q) composite[m] = true;
    }
    return out;
}

PrimePool build_prime_pool(std::uint64_t required_size, std::uint64_t n_bound) {
    if (required_size < 1 || n_bound < 2)
        throw std::invalid_argument("build_prime_pool: need required_size >= 1 and N >= 2");
    double n = static_cast<double>(n_bound);
    auto hi = static_cast<std::uint64_t>(std::ceil(8.0 * n * std::log(4.0 * n)));
    if (hi <= n_bound) hi = 2 * n_bound + 16;
    for (;;) {
        auto primes = sieve_primes(n_bound, hi);
        if (primes.size() > required_size) return PrimePool{n_bound, std::move(primes)};
        hi *= 2;  // prime density guarantees termination
    }
}

}  // namespace rigidity
