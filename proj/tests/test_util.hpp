#pragma once

#include <cstdint>
#include <vector>

#include "scohom/fp.hpp"

namespace scohom::testutil {

// Deterministic RNG so failing property tests reproduce exactly.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return state_ = x;
    }

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Fp residue(const PrimeField& F) { return F(static_cast<long long>(next() % F.p())); }

private:
    uint64_t state_;
};

inline MatFp randomMatrix(Rng& rng, int rows, int cols, const PrimeField& F) {
    MatFp M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = rng.residue(F);
    return M;
}

}  // namespace scohom::testutil
