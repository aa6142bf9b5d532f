// tropitac/corpus.hpp - seeded random inputs for the property suites
#pragma once

#include "tropical.hpp"

#include <random>

namespace tropitac::corpus {

using tropical::TropicalPolynomial;

// Up to max_points distinct exponents in [0, box]^2. Two valuation modes: a few small
// integers (large cells, many ties) or sevenths in [-40/7, 0] (mostly triangulations).
inline TropicalPolynomial random_polynomial(std::mt19937_64& rng, int max_points = 12, int box = 4) {
    std::uniform_int_distribution<int> coord(0, box), count(3, max_points), mode(0, 2), few(-2, 0), many(-40, 0);
    for (;;) {
        std::map<lattice::LatticePoint, Rational> v;
        int n = count(rng);
        bool ties = mode(rng) != 0;
        while (static_cast<int>(v.size()) < n) v[{coord(rng), coord(rng)}] = ties ? Rational(few(rng)) : Rational(many(rng), 7);
        try {
            return TropicalPolynomial::make(std::move(v));
        } catch (const DegenerateError&) {
        }
    }
}

inline std::vector<TropicalPolynomial> random_corpus(std::uint64_t seed, int count, int max_points = 12, int box = 4) {
    std::mt19937_64 rng(seed);
    std::vector<TropicalPolynomial> out;
    for (int k = 0; k < count; ++k) out.push_back(random_polynomial(rng, max_points, box));
    return out;
}

}  // namespace tropitac::corpus
