#include "padicok/integral_poly.hpp"

#include <algorithm>

namespace padicok {

MatPk IntegralPoly::coeff(int j) const {
    if (j >= 0 && j < static_cast<int>(coeffs.size())) return coeffs[static_cast<size_t>(j)];
    return MatPk(mod, n, n);
}

MatPk& IntegralPoly::ensure_coeff(int j) {
    while (static_cast<int>(coeffs.size()) <= j) coeffs.emplace_back(mod, n, n);
    return coeffs[static_cast<size_t>(j)];
}

void IntegralPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

MatPk IntegralPoly::eval(std::uint64_t x) const {
    MatPk r(mod, n, n);
    for (int j = degree(); j >= 0; --j) r = r.scaled(x) + coeffs[static_cast<size_t>(j)];
    return r;
}

IntegralPoly IntegralPoly::times_p() const {
    IntegralPoly r(mod, n, std::max(0, order == kInf ? kInf : order - 1));
    const std::uint64_t p = mod.reduce(static_cast<std::int64_t>(mod.p));
    r.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) r.coeffs.push_back(c.scaled(p));
    r.trim();
    return r;
}

bool validate_integral(const IntegralPoly& poly, int l) {
    if (l == kInf) return true;
    for (int j = 0; j <= poly.degree(); ++j) {
        int need = std::max(0, j - l);
        if (need == 0) continue;
        const MatPk& c = poly.coeffs[static_cast<size_t>(j)];
        for (int i = 0; i < c.rows(); ++i)
            for (int jj = 0; jj < c.cols(); ++jj)
                if (poly.mod.valuation(c.at(i, jj)) < std::min(need, poly.mod.K)) return false;
    }
    return true;
}

IntegralPoly poly_direct_sum(const IntegralPoly& a, const IntegralPoly& b) {
    if (a.n > 0 && b.n > 0 && !(a.mod == b.mod))
        throw std::invalid_argument("poly_direct_sum: mismatched modulus");
    if (a.order != b.order) throw std::invalid_argument("poly_direct_sum: mismatched integral order");
    const Modulus m = a.n > 0 ? a.mod : b.mod;
    IntegralPoly r(m, a.n + b.n, a.order);
    const int deg = std::max(a.degree(), b.degree());
    for (int j = 0; j <= deg; ++j) {
        MatPk ca = j <= a.degree() ? a.coeffs[static_cast<size_t>(j)] : MatPk(m, a.n, a.n);
        MatPk cb = j <= b.degree() ? b.coeffs[static_cast<size_t>(j)] : MatPk(m, b.n, b.n);
        r.coeffs.push_back(direct_sum(ca, cb));
    }
    r.trim();
    return r;
}

}  // namespace padicok
