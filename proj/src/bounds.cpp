#include "turanwb/bounds.hpp"

#include "turanwb/errors.hpp"

namespace turan {

// Composing the two inequalities in c = 8 mode:
//   ex_{d+1}(n, K_{H,t}) <= k (f_{d+1}(n, k, K_{H,t}) + n),
//   k <= 2c n^{d-d/t} ex^{1/t} + 1,   f_{d+1}(n, k, K_{H,t}) < (t/c)(n^d/ex)^{1/t}
// multiplies out to
//   2t n^d + 2c ex^{1/t} n^{d+1-d/t} + (t/c) (n^d/ex)^{1/t} + n
// and with ex >= 1, n >= 1 the two minor terms are at most (1/c + 1) t n^d,
// so C = max(2c, 3 + 1/c) covers the sum. For c = 8 that is C = 16.
const BigRat kTheorem3DerivedC = BigRat(16);

// No derivation is carried for the K_{H,t,s,r} form; 16 is the documented
// constant the small-grid consistency checks run with.
const BigRat kTheorem6DocumentedC = BigRat(16);

BigRat e_upper_approx() { return BigRat(BigInt("27182818285"), ipow(BigInt(10), 10)); }

BoundParams kst_parameters(long long n, int d, int t, const BigInt& ex_value,
                           const BigRat& constant_c) {
    if (t < 2) throw InvalidArgument("kst_parameters: t must be >= 2");
    if (n < 1 || d < 1) throw InvalidArgument("kst_parameters: n, d must be >= 1");
    if (ex_value == 0) throw DegenerateEx("kst_parameters: ex_value must be positive");
    if (ex_value < 0 || constant_c <= 0)
        throw InvalidArgument("kst_parameters: negative input");

    BoundParams p;
    p.n = n;
    p.d = d;
    p.t = t;
    p.ex_value = ex_value;
    p.constant_c = constant_c;
    // k = ceil(2c * (n^{d(t-1)} * ex)^{1/t})
    BigInt radicand_k = ipow(BigInt(n), static_cast<unsigned long long>(d) *
                                            static_cast<unsigned long long>(t - 1)) *
                        ex_value;
    p.k = ceil_scaled_root(2 * constant_c, radicand_k, static_cast<unsigned>(t));
    // r = floor((t/c) * (n^d / ex)^{1/t})
    BigRat beta = BigRat(t) / constant_c;
    BigRat y(ipow(BigInt(n), static_cast<unsigned long long>(d)), ex_value);
    p.r = floor_scaled_root(beta, y, static_cast<unsigned>(t));
    return p;
}

Theorem3Bound theorem3_bound(long long n, int d, int t, const BigInt& ex_value,
                             const BigRat& big_c) {
    if (t < 2) throw InvalidArgument("theorem3_bound: t must be >= 2");
    if (n < 0 || d < 1 || ex_value < 0 || big_c < 0)
        throw InvalidArgument("theorem3_bound: negative input");
    Theorem3Bound b;
    const BigInt nd = ipow(BigInt(n), static_cast<unsigned long long>(d));
    // (ex^{1/t} n^{d+1-d/t})^t = ex * n^{t(d+1)-d}
    BigInt radicand = ex_value * ipow(BigInt(n), static_cast<unsigned long long>(t) *
                                                     static_cast<unsigned long long>(d + 1) -
                                                 static_cast<unsigned long long>(d));
    b.root_term = iroot_ceil(radicand, static_cast<unsigned>(t));
    b.poly_term = BigInt(t) * nd;
    b.value = big_c * BigRat(b.root_term + b.poly_term);
    b.hypothesis_ok = ex_value < nd;
    return b;
}

Theorem6Bound theorem6_bound(long long n, int d, int t, const BigInt& ex_value,
                             const BigRat& big_c) {
    if (t < 2) throw InvalidArgument("theorem6_bound: t must be >= 2");
    if (n < 0 || d < 1 || ex_value < 0 || big_c < 0)
        throw InvalidArgument("theorem6_bound: negative input");
    Theorem6Bound b;
    // n^{2-1/t} rounded up: ceil((n^{2t-1})^{1/t})
    b.root_term = iroot_ceil(ipow(BigInt(n), 2 * static_cast<unsigned long long>(t) - 1),
                             static_cast<unsigned>(t));
    b.value = big_c * BigRat(ex_value * b.root_term);
    // n^{d+1-1/t} rounded up: ceil((n^{t(d+1)-1})^{1/t})
    b.alt_root = iroot_ceil(ipow(BigInt(n), static_cast<unsigned long long>(t) *
                                                    static_cast<unsigned long long>(d + 1) -
                                                1),
                            static_cast<unsigned>(t));
    b.alt_value = big_c * BigRat(b.alt_root);
    return b;
}

FactorialCheck factorial_bound_check(int t_max) {
    if (t_max < 2) throw InvalidArgument("factorial_bound_check: t_max must be >= 2");
    FactorialCheck rep;
    rep.t_max = t_max;
    rep.all_ok = true;

    BigInt fact_t = 1;      // t!
    BigInt fact_2t = 2;     // (2t)!
    for (int t = 2; t <= t_max; ++t) {
        fact_t *= t;
        fact_2t *= BigInt(2 * t - 1) * (2 * t);
        const BigInt t_big(t);

        // main bound: 8^t * t! > t^t
        bool main_ok = ipow(BigInt(8), static_cast<unsigned long long>(t)) * fact_t >
                       ipow(t_big, static_cast<unsigned long long>(t));
        // doubling step, even case: (2t)! > (t/4)^{2t} * 2^t
        bool even_ok = fact_2t * ipow(BigInt(4), 2ull * static_cast<unsigned long long>(t)) >
                       ipow(t_big, 2ull * static_cast<unsigned long long>(t)) *
                           ipow(BigInt(2), static_cast<unsigned long long>(t));
        // doubling step, odd case: (t/4)^{2t} 2^t (2t+1) > ((2t+1)/8)^{2t+1}
        bool odd_ok = ipow(t_big, 2ull * static_cast<unsigned long long>(t)) *
                              ipow(BigInt(2), static_cast<unsigned long long>(t)) *
                              (2 * t_big + 1) *
                              ipow(BigInt(8), 2ull * static_cast<unsigned long long>(t) + 1) >
                      ipow(2 * t_big + 1, 2ull * static_cast<unsigned long long>(t) + 1) *
                          ipow(BigInt(4), 2ull * static_cast<unsigned long long>(t));

        rep.checks += 3;
        if (!(main_ok && even_ok && odd_ok)) {
            rep.all_ok = false;
            if (rep.first_failure == 0) rep.first_failure = t;
        }
    }
    return rep;
}

}  // namespace turan
