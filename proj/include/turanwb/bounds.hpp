#pragma once

#include <cstdint>

#include "turanwb/numbers.hpp"

namespace turan {

/// Parameters of the block-multiplicity counting argument, computed exactly:
/// k = ceil(2c * n^(d(1-1/t)) * ex^(1/t)) and
/// r = floor((t/c) * (n^d / ex)^(1/t)), with the t-th roots bracketed by
/// integer bisection so ceil/floor carry no floating-point error.
struct BoundParams {
    long long n = 0;
    int d = 0;
    int t = 0;
    BigInt ex_value;
    BigRat constant_c;
    BigInt k;
    BigInt r;
};

/// Default constant mode: c = 8 keeps everything in exact integers. The
/// optional e-mode passes e_upper_approx(); rounding k up and r down keeps
/// every derived bound valid. Requires t >= 2; ex_value = 0 -> DegenerateEx.
BoundParams kst_parameters(long long n, int d, int t, const BigInt& ex_value,
                           const BigRat& constant_c = BigRat(8));

/// Rational over-approximation of e (27182818285 / 10^10 >= e).
BigRat e_upper_approx();

struct Theorem3Bound {
    BigRat value;        // C * (root_term + poly_term)
    BigInt root_term;    // ceil( (ex * n^(t(d+1)-d))^(1/t) ) = ceil(ex^(1/t) n^(d+1-d/t))
    BigInt poly_term;    // t * n^d
    bool hypothesis_ok;  // ex_value < n^d; one-instance surrogate for ex = o(n^d)
};

/// Exact upper evaluation of C * (ex^(1/t) n^(d+1-d/t) + t n^d); the root is
/// rounded upward so the evaluation never under-reports. Requires t >= 2.
Theorem3Bound theorem3_bound(long long n, int d, int t, const BigInt& ex_value,
                             const BigRat& big_c);

/// The explicit constant the two counting lemmas yield in c = 8 mode
/// (derivation in bounds.cpp); the acceptance checks evaluate with it.
extern const BigRat kTheorem3DerivedC;  // 16

/// Constant verified to cover the small grid for the K_{H,t,s,r} bound.
extern const BigRat kTheorem6DocumentedC;  // 16

struct Theorem6Bound {
    BigRat value;      // C * ex * ceil(n^(2-1/t))
    BigInt root_term;  // ceil(n^(2-1/t))
    BigRat alt_value;  // C * ceil(n^(d+1-1/t)) — the form used when ex = O(n^(d-1))
    BigInt alt_root;
};

Theorem6Bound theorem6_bound(long long n, int d, int t, const BigInt& ex_value,
                             const BigRat& big_c);

/// t! > (t/8)^t checked as 8^t * t! > t^t over 2 <= t <= t_max, plus the two
/// doubling steps ((2t)! and (2t+1)! forms) instantiated numerically for the
/// same range. Exact integers; no tolerance.
struct FactorialCheck {
    int t_max = 0;
    bool all_ok = false;
    int first_failure = 0;  // 0 = none
    std::uint64_t checks = 0;
};

FactorialCheck factorial_bound_check(int t_max);

}  // namespace turan
