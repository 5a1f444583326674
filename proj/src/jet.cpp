#include "tsol/jet.hpp"

#include <cmath>

namespace tsol {

Jet1 powi(const Jet1& a, long long n) {
    if (n == 0) return Jet1::constant(1.0);
    if (n < 0) return 1.0 / powi(a, -n);
    Jet1 acc = Jet1::constant(1.0);
    Jet1 base = a;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Jet1 pow(const Jet1& a, const Jet1& b) {
    bool b_const = b.d1 == 0.0 && b.d2 == 0.0;
    if (b_const && b.f == std::floor(b.f) && std::abs(b.f) <= 64.0)
        return powi(a, static_cast<long long>(b.f));
    return exp(b * log(a));
}

} // namespace tsol
