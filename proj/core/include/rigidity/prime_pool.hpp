#ifndef RIGIDITY_PRIME_POOL_HPP
#define RIGIDITY_PRIME_POOL_HPP

#include "rigidity/rng.hpp"

#include <cstdint>
#include <vector>

namespace rigidity {

// Exactly the primes q with lo < q <= hi, ascending.
std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

// Primes to reduce by, all larger than the Schwartz-Zippel sample bound N.
struct PrimePool {
    std::uint64_t n_bound = 0;           // N
    std::vector<std::uint64_t> primes;   // sorted, every prime > N

    std::uint64_t pick(SplitRng& rng) const {
        return primes[rng.uniform(0, primes.size() - 1)];
    }
};

// Pool with more than `required_size` primes, each > N. The sieve starts at
// ceil(8 N ln(4N)) and the upper bound doubles until the count is reached.
PrimePool build_prime_pool(std::uint64_t required_size, std::uint64_t n_bound);

}  // namespace rigidity

#endif
