#include "padicok/zpk.hpp"

namespace padicok {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Modulus::Modulus(std::uint64_t p_, int K_) : p(p_), K(K_) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Modulus: p must be prime");
    if (K < 1) throw std::invalid_argument("Modulus: K must be >= 1");
    pk = 1;
    for (int i = 0; i < K; ++i) {
        pk *= p;
        if (pk > (1ull << 31)) throw std::invalid_argument("Modulus: p^K too large");
    }
}

std::uint64_t Modulus::p_pow(int e) const {
    if (e < 0) throw std::invalid_argument("Modulus: negative p-power");
    if (e >= K) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

int Modulus::valuation(std::uint64_t a) const {
    if (a == 0) return K;
    int v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

std::uint64_t Modulus::unit_part(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("Modulus: unit part of zero");
    while (a % p == 0) a /= p;
    return a;
}

std::uint64_t Modulus::inv(std::uint64_t a) const {
    a %= pk;
    if (a % p == 0) throw std::domain_error("Modulus: not a unit");
    // extended Euclid on (a, p^K)
    std::int64_t r0 = static_cast<std::int64_t>(pk), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return reduce(t0);
}

}  // namespace padicok
