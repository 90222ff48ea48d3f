#include "epg/numtheory.hpp"

#include <limits>
#include <stdexcept>

namespace epg {

u64 gcd(u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("gcd: arguments must be positive");
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: argument must be positive");
    u64 result = n;
    for (auto [p, e] : factorize(n)) {
        result -= result / p;
        (void)e;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

u128 checked_mul128(u128 a, u128 b) {
    if (a != 0 && b > static_cast<u128>(-1) / a) throw std::overflow_error("integer overflow in 128-bit multiplication");
    return a * b;
}

u64 narrow_u64(u128 v) {
    if (v > std::numeric_limits<u64>::max()) throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<u64>(v);
}

}  // namespace epg
