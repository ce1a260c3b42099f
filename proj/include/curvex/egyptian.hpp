#pragma once

#include <vector>

#include "curvex/errors.hpp"
#include "curvex/rat.hpp"

namespace curvex {

// Unit-fraction decomposition r = sum 1/n_i. The integer part is emitted as
// repeated 1s; the fractional remainder is expanded greedily
// (Fibonacci-Sylvester), so those terms are strictly increasing and the
// expansion always terminates because the remainder's numerator strictly
// drops.
struct EgyptianDecomposition {
    std::vector<BigInt> terms;

    Rat total() const {
        Rat s = 0;
        for (const BigInt& t : terms) s += make_rat(1, t);
        return s;
    }
};

inline EgyptianDecomposition egyptian_fraction(const Rat& r) {
    if (r <= 0) throw NonPositive("egyptian_fraction needs a positive rational");
    EgyptianDecomposition out;
    BigInt whole = numerator(r) / denominator(r);
    for (BigInt i = 0; i < whole; ++i) out.terms.emplace_back(1);
    Rat rem = r - Rat(whole);
    while (rem != 0) {
        // ceil(q/p) for remainder p/q
        BigInt p = numerator(rem), q = denominator(rem);
        BigInt n = (q + p - 1) / p;
        out.terms.push_back(n);
        rem -= make_rat(1, n);
    }
    return out;
}

}  // namespace curvex
