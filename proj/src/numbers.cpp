#include "turanwb/numbers.hpp"

#include <sstream>

#include "turanwb/errors.hpp"

namespace turan {

BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is always a binomial prefix
    }
    return r;
}

BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt ipow(const BigInt& base, unsigned long long exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt iroot_floor(const BigInt& x, unsigned t) {
    if (x < 0) throw InvalidArgument("iroot_floor: negative radicand");
    if (t == 0) throw InvalidArgument("iroot_floor: zeroth root");
    if (t == 1 || x <= 1) return x;
    BigInt lo = 0, hi = 1;
    while (ipow(hi, t) <= x) hi <<= 1;
    // invariant: lo^t <= x < hi^t
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, t) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

BigInt ceil_scaled_root(const BigRat& alpha, const BigInt& x, unsigned t) {
    if (alpha < 0 || x < 0) throw InvalidArgument("ceil_scaled_root: negative input");
    if (t == 0) throw InvalidArgument("ceil_scaled_root: zeroth root");
    // k >= alpha * x^(1/t)  <=>  k^t * den^t >= num^t * x   (all sides >= 0)
    BigInt num = boost::multiprecision::numerator(alpha);
    BigInt den = boost::multiprecision::denominator(alpha);
    BigInt rhs = ipow(num, t) * x;
    BigInt scale = ipow(den, t);
    if (rhs == 0) return 0;
    BigInt lo = 0, hi = 1;
    while (ipow(hi, t) * scale < rhs) hi <<= 1;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, t) * scale < rhs)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

BigInt floor_scaled_root(const BigRat& beta, const BigRat& y, unsigned t) {
    if (beta < 0 || y < 0) throw InvalidArgument("floor_scaled_root: negative input");
    if (t == 0) throw InvalidArgument("floor_scaled_root: zeroth root");
    // r <= beta * y^(1/t)  <=>  r^t * den(beta)^t * den(y) <= num(beta)^t * num(y)
    BigInt rhs = ipow(boost::multiprecision::numerator(beta), t) *
                 boost::multiprecision::numerator(y);
    BigInt scale = ipow(boost::multiprecision::denominator(beta), t) *
                   boost::multiprecision::denominator(y);
    BigInt lo = 0, hi = 1;
    if (rhs == 0) return 0;
    while (ipow(hi, t) * scale <= rhs) hi <<= 1;
    // invariant: lo^t*scale <= rhs < hi^t*scale
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, t) * scale <= rhs)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

BigRat rat_pow(const BigRat& base, unsigned long long exp) {
    BigRat r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

}  // namespace turan
