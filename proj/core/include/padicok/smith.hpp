#pragma once

#include <string>
#include <vector>

#include "padicok/mat.hpp"

namespace padicok {

// A = U * diag(p^{e_1}, ...) * V with U, V invertible mod p^K and e_1 <= e_2 <= ...
// An exponent equal to K stands for "K+": the diagonal residue is 0 at this precision.
struct SmithResult {
    MatPk U;
    std::vector<int> exps;
    MatPk V;
    MatPk diag() const;
};

SmithResult smith_normal_form(const MatPk& a);

// Multiset of elementary-divisor exponents at precision K.
// exps is ascending over [0, K]; the value K is the K+ bucket (>= K, free
// summands included -- indistinguishable at this precision).
struct CokType {
    int K = 1;
    std::vector<int> exps;

    int size() const { return static_cast<int>(exps.size()); }
    int d(int r) const;                 // multiplicity of exponent r (r = K counts the K+ bucket)
    int s() const;                      // number of nonzero exponents
    std::vector<int> nonzero() const;   // exponents >= 1, ascending
    std::string str() const;            // e.g. "0,1,2+"
    bool operator==(const CokType&) const = default;
};

CokType cokernel_type(const MatPk& a);

}  // namespace padicok
