#include "pgraph/numutil.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pgraph {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
    u64 r = m == 1 ? 0 : 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod_u64(r, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 inv_mod_u64(u64 a, u64 p) { return pow_mod_u64(a % p, p - 2, p); }

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 mul_u64_checked(u64 a, u64 b) {
    if (a != 0 && b > UINT64_MAX / a)
        throw std::overflow_error("u64 multiplication overflow");
    return a * b;
}

u64 lcm_u64_checked(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return mul_u64_checked(a / std::gcd(a, b), b);
}

u64 pow_u64_checked(u64 base, u64 exp) {
    u64 r = 1;
    while (exp) {
        if (exp & 1) r = mul_u64_checked(r, base);
        exp >>= 1;
        if (exp) base = mul_u64_checked(base, base);
    }
    return r;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod_u64(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin(n, a)) return false;
    return true;
}

std::map<u64, unsigned> factorize_u64(u64 n) {
    std::map<u64, unsigned> out;
    for (u64 p = 2; p <= 3 && n > 1; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    for (u64 p = 5; p * p <= n && p < (1u << 20); p += 6) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
        while (n % (p + 2) == 0) {
            ++out[p + 2];
            n /= p + 2;
        }
    }
    // residual cofactor: prime, or split recursively
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (is_prime_u64(m)) {
            ++out[m];
            continue;
        }
        u64 d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

std::vector<u64> divisors_u64(u64 n, std::size_t limit) {
    std::vector<u64> divs{1};
    for (auto [p, e] : factorize_u64(n)) {
        std::size_t base = divs.size();
        if (base * (e + 1) > limit)
            throw std::length_error("divisors_u64: too many divisors");
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk = mul_u64_checked(pk, p);
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool as_prime_power(u64 n, PrimePower& out) {
    if (n < 2) return false;
    auto f = factorize_u64(n);
    if (f.size() != 1) return false;
    out.p = f.begin()->first;
    out.k = f.begin()->second;
    return true;
}

}  // namespace pgraph
