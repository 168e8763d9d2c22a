#pragma once

#include <vector>

#include "padicok/mat.hpp"
#include "padicok/smith.hpp"

namespace padicok {

// Matrix polynomial P(t) = C_0 + t C_1 + ... + t^D C_D over Z/p^K together
// with its claimed integral order l: an l-th integral has p^{max(0, j-l)}
// dividing every entry of C_j.  Coefficients are stored in full (the p-power
// is part of C_j).  l = kInf accepts any polynomial.
struct IntegralPoly {
    Modulus mod;
    int n = 0;        // matrix size (square)
    int order = 0;    // l
    std::vector<MatPk> coeffs;

    IntegralPoly() = default;
    IntegralPoly(Modulus m, int n_, int order_) : mod(m), n(n_), order(order_) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    MatPk coeff(int j) const;         // zero matrix beyond degree
    MatPk& ensure_coeff(int j);       // grow with zero matrices as needed
    void trim();                      // drop zero leading coefficients

    MatPk eval(std::uint64_t x) const;  // Horner, mod p^K
    IntegralPoly times_p() const;       // p*P; order drops by one (min 0)

    bool operator==(const IntegralPoly&) const = default;
};

// Divisibility profile check at precision K.
bool validate_integral(const IntegralPoly& p, int l);

IntegralPoly poly_direct_sum(const IntegralPoly& a, const IntegralPoly& b);

}  // namespace padicok
