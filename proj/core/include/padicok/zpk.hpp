#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace padicok {

// Sentinel for an infinite exponent (free summand Z_p) and for the
// "every polynomial qualifies" integral order.
inline constexpr int kInf = std::numeric_limits<int>::max();

bool is_prime_u64(std::uint64_t n);

// Arithmetic context for Z/p^K.  All residues live in [0, p^K).
// p^K is kept below 2^31 so products never overflow a uint64.
struct Modulus {
    std::uint64_t p = 2;
    int K = 1;
    std::uint64_t pk = 2;

    Modulus() = default;
    Modulus(std::uint64_t p_, int K_);

    bool operator==(const Modulus&) const = default;

    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(pk);
        if (r < 0) r += static_cast<std::int64_t>(pk);
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= pk ? s - pk : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + pk - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : pk - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % pk; }

    // p^e mod p^K; e >= K (including kInf) gives 0.
    std::uint64_t p_pow(int e) const;

    // Valuation in {0, ..., K}; K means "divisible by p^K at this precision".
    int valuation(std::uint64_t a) const;

    // Unit u with a = p^{val(a)} * u (as integers in [0, p^K)); requires a != 0.
    std::uint64_t unit_part(std::uint64_t a) const;

    bool is_unit(std::uint64_t a) const { return a % p != 0; }

    // Inverse of a unit mod p^K; throws std::domain_error otherwise.
    std::uint64_t inv(std::uint64_t a) const;
};

// A self-describing scalar in Z/p^K.
struct Zpk {
    Modulus mod;
    std::uint64_t residue = 0;

    Zpk() = default;
    Zpk(Modulus m, std::int64_t v) : mod(m), residue(m.reduce(v)) {}

    int valuation() const { return mod.valuation(residue); }
    bool is_unit() const { return mod.is_unit(residue); }

    friend Zpk operator+(Zpk a, Zpk b) { a.check(b); a.residue = a.mod.add(a.residue, b.residue); return a; }
    friend Zpk operator-(Zpk a, Zpk b) { a.check(b); a.residue = a.mod.sub(a.residue, b.residue); return a; }
    friend Zpk operator*(Zpk a, Zpk b) { a.check(b); a.residue = a.mod.mul(a.residue, b.residue); return a; }
    Zpk inverse() const { Zpk r = *this; r.residue = mod.inv(residue); return r; }
    bool operator==(const Zpk&) const = default;

    void check(const Zpk& o) const {
        if (!(mod == o.mod)) throw std::invalid_argument("Zpk: mismatched modulus");
    }
};

}  // namespace padicok
