#ifndef LCKV_TESTS_RNG_HPP
#define LCKV_TESTS_RNG_HPP

#include <gmpxx.h>

#include <cstdint>

namespace lckv::test {

// splitmix64; fixed seeds keep every property run reproducible
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return next() & 1; }
    mpq_class rational(long bound = 5) {
        mpq_class q(range(-bound, bound), range(1, bound));
        q.canonicalize();
        return q;
    }
    mpq_class nonzero(long bound = 5) {
        for (;;) {
            mpq_class q = rational(bound);
            if (q != 0) return q;
        }
    }

private:
    std::uint64_t s_;
};

}  // namespace lckv::test

#endif
