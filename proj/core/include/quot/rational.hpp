#pragma once

#include <gmpxx.h>
#include <string>

namespace quot {

// Exact rational scalar. mpq_class keeps the spec invariants (reduced,
// positive denominator) via canonicalization.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s); // "p/q" or "p"
std::string rat_str(const Rat& x);

Rat rat_pow(const Rat& x, long k); // k may be negative (x != 0)
Rat binomial(long n, long k);      // generalized: n may be negative; k < 0 -> 0
Rat factorial(long n);

// Ring trait used by the Series/root-engine templates. The `proto` argument
// carries context for rings that need it (jets); Rat ignores it.
template <class C>
struct Ring;

template <>
struct Ring<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static bool is_unit(const Rat& x) { return sgn(x) != 0; }
    static Rat inv(const Rat& x);
    static Rat scale(const Rat& x, const Rat& c) { return x * c; }
    static Rat constant_part(const Rat& x) { return x; }
    static std::string str(const Rat& x) { return rat_str(x); }
};

} // namespace quot
