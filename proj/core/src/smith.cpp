#include "padicok/smith.hpp"

#include <algorithm>
#include <sstream>

namespace padicok {

MatPk SmithResult::diag() const {
    const Modulus m = U.mod();
    MatPk d(m, U.cols(), V.rows());
    for (size_t i = 0; i < exps.size(); ++i)
        d.at(static_cast<int>(i), static_cast<int>(i)) = m.p_pow(exps[i]);
    return d;
}

SmithResult smith_normal_form(const MatPk& a) {
    const Modulus m = a.mod();
    const int nr = a.rows(), nc = a.cols();
    const int dn = std::min(nr, nc);

    MatPk w = a;
    MatPk u = MatPk::identity(m, nr);
    MatPk v = MatPk::identity(m, nc);
    std::vector<int> exps(static_cast<size_t>(dn), m.K);

    for (int s = 0; s < dn; ++s) {
        // pivot of minimal valuation, topmost then leftmost
        int bi = -1, bj = -1, bv = m.K;
        for (int i = s; i < nr; ++i)
            for (int j = s; j < nc; ++j) {
                int val = m.valuation(w.at(i, j));
                if (val < bv) { bv = val; bi = i; bj = j; }
            }
        if (bi < 0) break;  // remaining block is 0 mod p^K

        // W := E W records U := U E^{-1}; W := W F records V := F^{-1} V.
        w.swap_rows(s, bi);
        u.swap_cols(s, bi);
        w.swap_cols(s, bj);
        v.swap_rows(s, bj);

        // normalize pivot to a pure power of p
        std::uint64_t unit = m.unit_part(w.at(s, s));
        std::uint64_t uinv = m.inv(unit);
        w.row_scale(s, uinv);
        u.col_scale(s, unit);

        const std::uint64_t ppow = m.p_pow(bv);
        for (int i = s + 1; i < nr; ++i) {
            std::uint64_t b = w.at(i, s);
            if (b == 0) continue;
            std::uint64_t q = b / ppow;  // exact: val(b) >= bv
            w.row_axpy(i, s, m.neg(q));
            u.col_axpy(s, i, q);
        }
        for (int j = s + 1; j < nc; ++j) {
            std::uint64_t b = w.at(s, j);
            if (b == 0) continue;
            std::uint64_t q = b / ppow;
            w.col_axpy(j, s, m.neg(q));
            v.row_axpy(s, j, q);
        }
        exps[static_cast<size_t>(s)] = bv;
    }
    return SmithResult{std::move(u), std::move(exps), std::move(v)};
}

int CokType::d(int r) const {
    int c = 0;
    for (int e : exps) c += (e == r);
    return c;
}

int CokType::s() const {
    int c = 0;
    for (int e : exps) c += (e >= 1);
    return c;
}

std::vector<int> CokType::nonzero() const {
    std::vector<int> r;
    for (int e : exps)
        if (e >= 1) r.push_back(e);
    return r;
}

std::string CokType::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i) os << ',';
        if (exps[i] >= K) os << K << '+';
        else os << exps[i];
    }
    return os.str();
}

CokType cokernel_type(const MatPk& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("cokernel_type: square matrix required");
    SmithResult s = smith_normal_form(a);
    return CokType{a.mod().K, std::move(s.exps)};
}

}  // namespace padicok
