#pragma once

#include <optional>
#include <vector>

#include "padicok/integral_poly.hpp"
#include "padicok/mat.hpp"
#include "padicok/smith.hpp"

namespace padicok {

// Ordered shift set {x_1, ..., x_m} with pairwise distinct reductions mod p.
struct XSet {
    Modulus mod;
    std::vector<std::uint64_t> xs;

    XSet() = default;
    XSet(Modulus m, std::vector<std::int64_t> values);

    int m() const { return static_cast<int>(xs.size()); }
    bool normalized() const { return !xs.empty() && xs[0] == 0; }
    XSet translated(std::uint64_t x0) const;  // {x - x0}
};

// Reduction behind d_{r, A+pxI} = d_{r-1, P(x)}: returns the first integral
// P(t) of size n - d_{0,A} with cok(A + pxI) = cok(p * P(x)) mod p^K up to
// d_{0,A} trivial summands, for every x.  Requires K >= 2.
IntegralPoly shift_reduce(const MatPk& a);

// One-step Schur reduction of a zeroth integral whose constant term is
// diag(*, ..., *, unit) with zero elsewhere in the last row and column.
// Returns a zeroth integral Q of size n-1 with cok(Q(x)) = cok(P(x)) mod p^k
// for every x; the inverse series is truncated at k-1 terms.
IntegralPoly schur_reduce(const IntegralPoly& p, int k);

// Block companion matrix of u^D I + u^{D-1} A_{D-1} + ... + A_0 in u = pt:
// given A_0..A_D with A_D = I, returns A of size D*n with
// cok(A + pxI) = cok(sum_j (px)^j A_j) for every x.
MatPk companion_lift(const std::vector<MatPk>& u_coeffs);

// Convenience form: divides the stored coefficients C_j of a zeroth integral
// by p^j.  Only usable when deg < K and the top coefficient reduces to I.
MatPk companion_lift(const IntegralPoly& z);

struct SingularityReport {
    int d = 0;                                      // generic value of d_r
    std::optional<std::uint64_t> singular_residue;  // x0 with d_r = d-1, if any
};

// Scans d_{r, A + p^r x J} over x mod p for a single-line perturbation J.
// Checks that d_i is constant for i < r and that at most one residue drops
// d_r by exactly one; anything else throws std::logic_error.
SingularityReport singularity_scan(const MatPk& a, const MatPk& j, int r);

}  // namespace padicok
