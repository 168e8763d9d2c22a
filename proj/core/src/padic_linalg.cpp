#include "padicok/padic_linalg.hpp"

#include <algorithm>
#include <set>

namespace padicok {

XSet::XSet(Modulus m, std::vector<std::int64_t> values) : mod(m) {
    std::set<std::uint64_t> seen;
    xs.reserve(values.size());
    for (std::int64_t v : values) {
        std::uint64_t r = mod.reduce(v);
        if (!seen.insert(r % mod.p).second)
            throw std::invalid_argument("XSet: reductions mod p must be pairwise distinct");
        xs.push_back(r);
    }
}

XSet XSet::translated(std::uint64_t x0) const {
    XSet r;
    r.mod = mod;
    r.xs.reserve(xs.size());
    for (std::uint64_t x : xs) r.xs.push_back(mod.sub(x, x0));
    return r;
}

IntegralPoly shift_reduce(const MatPk& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("shift_reduce: square matrix required");
    const Modulus m = a.mod();
    if (m.K < 2) throw std::invalid_argument("shift_reduce: requires K >= 2");
    const int n = a.rows();

    SmithResult s = smith_normal_form(a);
    int d0 = 0;
    while (d0 < n && s.exps[static_cast<size_t>(d0)] == 0) ++d0;
    const int n1 = n - d0;

    IntegralPoly poly(m, n1, 1);
    if (n1 == 0) return poly;

    // Permute so the nonunit diagonal comes first: with the permutation P that
    // rotates the d0 unit positions to the back, (P U^{-1}) A (V^{-1} P^T) =
    // [[pA', 0], [0, I]] and the series coefficients come from
    // (P U^{-1}) (V^{-1} P^T) in block form [[B1, B2], [B3, B4]].
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = (i + d0) % n;

    MatPk uv = inverse(s.U) * inverse(s.V);
    MatPk uvp(m, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            uvp.at(i, j) = uv.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);

    MatPk aprime(m, n1, n1);
    for (int i = 0; i < n1; ++i)
        aprime.at(i, i) = m.p_pow(s.exps[static_cast<size_t>(d0 + i)]) / m.p;

    MatPk b1 = uvp.block(0, 0, n1, n1);
    MatPk b2 = uvp.block(0, n1, n1, d0);
    MatPk b3 = uvp.block(n1, 0, d0, n1);
    MatPk b4 = uvp.block(n1, n1, d0, d0);

    poly.coeffs.push_back(aprime);
    poly.coeffs.push_back(b1);
    // C_d = p^{d-1} (-1)^{d-1} B2 B4^{d-2} B3 for d >= 2, until p^{d-1} = 0.
    if (d0 > 0) {
        MatPk pow = MatPk::identity(m, d0);
        for (int d = 2; d <= m.K; ++d) {
            std::uint64_t scale = m.p_pow(d - 1);
            MatPk c = (b2 * pow * b3).scaled(scale);
            if (d % 2 == 0) c = MatPk(m, n1, n1) - c;  // C_d = (-1)^{d-1} p^{d-1} B2 B4^{d-2} B3
            poly.coeffs.push_back(c);
            pow = pow * b4;
        }
    }
    poly.trim();
    return poly;
}

namespace {

// scalar polynomials mod p^K, degree-capped (coefficients of zeroth integrals
// beyond degree K vanish at this precision)
using ScalarPoly = std::vector<std::uint64_t>;

ScalarPoly sp_mul(const Modulus& m, const ScalarPoly& a, const ScalarPoly& b, int cap) {
    ScalarPoly r(std::min<size_t>(a.size() + b.size(), static_cast<size_t>(cap) + 1), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < r.size(); ++j)
            r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void sp_add_into(const Modulus& m, ScalarPoly& a, const ScalarPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = m.add(a[i], b[i]);
}

}  // namespace

IntegralPoly schur_reduce(const IntegralPoly& p, int k) {
    const Modulus m = p.mod;
    if (k < 1 || k > m.K) throw std::invalid_argument("schur_reduce: k out of range");
    if (!validate_integral(p, 0)) throw std::invalid_argument("schur_reduce: zeroth integral required");
    const int n = p.n;
    if (n < 1) throw std::invalid_argument("schur_reduce: empty polynomial");

    const MatPk p0 = p.coeff(0);
    if (!m.is_unit(p0.at(n - 1, n - 1)))
        throw std::invalid_argument("schur_reduce: lower-right entry not a unit");
    for (int i = 0; i + 1 < n; ++i)
        if (p0.at(i, n - 1) != 0 || p0.at(n - 1, i) != 0)
            throw std::invalid_argument("schur_reduce: constant term must carry the unit block alone");

    IntegralPoly q(m, n - 1, 0);
    if (n == 1) return q;

    const int cap = m.K;  // zeroth-integral coefficients of degree > K vanish

    // s(t): lower-right scalar; c(t): last column; r(t): last row.
    ScalarPoly s;
    for (int j = 0; j <= p.degree(); ++j) s.push_back(p.coeff(j).at(n - 1, n - 1));
    const std::uint64_t s0inv = m.inv(s[0]);

    // inv = s(t)^{-1} truncated: s0^{-1} sum_{j=0}^{k-1} (-g)^j, g = s0^{-1}(s - s0)
    ScalarPoly negg(s.size(), 0);
    for (size_t i = 1; i < s.size(); ++i) negg[i] = m.neg(m.mul(s0inv, s[i]));
    while (!negg.empty() && negg.back() == 0) negg.pop_back();
    ScalarPoly inv{1}, pw{1};
    for (int j = 1; j <= k - 1; ++j) {
        pw = sp_mul(m, pw, negg, cap);
        if (pw.empty()) break;
        sp_add_into(m, inv, pw);
    }
    for (auto& c : inv) c = m.mul(c, s0inv);

    // Q = P1 - c(t) * inv(t) * r(t), all degree-capped
    for (int j = 0; j <= std::min(p.degree(), cap); ++j)
        q.ensure_coeff(j) = p.coeff(j).block(0, 0, n - 1, n - 1);

    for (int jc = 0; jc <= p.degree(); ++jc) {
        MatPk ccol = p.coeff(jc).block(0, n - 1, n - 1, 1);
        if (ccol.is_zero()) continue;
        for (int jr = 0; jr <= p.degree(); ++jr) {
            MatPk rrow = p.coeff(jr).block(n - 1, 0, 1, n - 1);
            if (rrow.is_zero()) continue;
            MatPk outer = ccol * rrow;
            for (size_t ji = 0; ji < inv.size(); ++ji) {
                if (inv[ji] == 0) continue;
                int deg = jc + jr + static_cast<int>(ji);
                if (deg > cap) continue;
                MatPk& dst = q.ensure_coeff(deg);
                dst = dst - outer.scaled(inv[ji]);
            }
        }
    }
    q.trim();
    if (!validate_integral(q, 0)) throw std::logic_error("schur_reduce: result lost the zeroth-integral profile");
    return q;
}

MatPk companion_lift(const std::vector<MatPk>& u_coeffs) {
    if (u_coeffs.size() < 2) throw std::invalid_argument("companion_lift: degree must be >= 1");
    const int big_d = static_cast<int>(u_coeffs.size()) - 1;
    const MatPk& top = u_coeffs.back();
    const Modulus m = top.mod();
    const int n = top.rows();
    if (top != MatPk::identity(m, n)) throw std::invalid_argument("companion_lift: top coefficient not identity");
    for (const auto& c : u_coeffs)
        if (c.rows() != n || c.cols() != n || !(c.mod() == m))
            throw std::invalid_argument("companion_lift: inconsistent coefficients");

    MatPk a(m, big_d * n, big_d * n);
    const std::uint64_t minus1 = m.reduce(-1);
    for (int b = 1; b < big_d; ++b)
        for (int i = 0; i < n; ++i) a.at(b * n + i, (b - 1) * n + i) = minus1;
    for (int b = 0; b < big_d; ++b) a.paste(b * n, (big_d - 1) * n, u_coeffs[static_cast<size_t>(b)]);
    return a;
}

MatPk companion_lift(const IntegralPoly& z) {
    const Modulus m = z.mod;
    const int deg = z.degree();
    if (deg >= m.K)
        throw std::invalid_argument("companion_lift: degree not representable at this precision");
    std::vector<MatPk> u;
    u.reserve(static_cast<size_t>(deg) + 1);
    for (int j = 0; j <= deg; ++j) {
        const std::uint64_t pj = m.p_pow(j);
        MatPk c = z.coeff(j);
        for (int i = 0; i < c.rows(); ++i)
            for (int jj = 0; jj < c.cols(); ++jj) {
                if (c.at(i, jj) % pj != 0)
                    throw std::invalid_argument("companion_lift: coefficient not divisible by p^j");
                c.at(i, jj) /= pj;
            }
        u.push_back(std::move(c));
    }
    return companion_lift(u);
}

SingularityReport singularity_scan(const MatPk& a, const MatPk& j, int r) {
    const Modulus m = a.mod();
    if (a.rows() != a.cols()) throw std::invalid_argument("singularity_scan: square matrix required");
    if (j.rows() != a.rows() || j.cols() != a.cols())
        throw std::invalid_argument("singularity_scan: J shape mismatch");
    if (r < 1 || r >= m.K) throw std::invalid_argument("singularity_scan: need 1 <= r < K");

    // J must have a single nonzero row or a single nonzero column
    std::set<int> rows, cols;
    for (int i = 0; i < j.rows(); ++i)
        for (int c = 0; c < j.cols(); ++c)
            if (j.at(i, c) != 0) { rows.insert(i); cols.insert(c); }
    if (rows.size() > 1 && cols.size() > 1)
        throw std::invalid_argument("singularity_scan: J must have a single nonzero row or column");

    const std::uint64_t pr = m.p_pow(r);
    std::vector<CokType> types;
    types.reserve(m.p);
    for (std::uint64_t x = 0; x < m.p; ++x)
        types.push_back(cokernel_type(a + j.scaled(m.mul(pr, x))));

    for (int i = 0; i < r; ++i)
        for (std::uint64_t x = 1; x < m.p; ++x)
            if (types[static_cast<size_t>(x)].d(i) != types[0].d(i))
                throw std::logic_error("singularity_scan: d_i not constant below r");

    std::vector<int> dr;
    for (auto& t : types) dr.push_back(t.d(r));
    int dmax = *std::max_element(dr.begin(), dr.end());
    SingularityReport rep;
    rep.d = dmax;
    for (std::uint64_t x = 0; x < m.p; ++x) {
        if (dr[static_cast<size_t>(x)] == dmax) continue;
        if (dr[static_cast<size_t>(x)] != dmax - 1)
            throw std::logic_error("singularity_scan: drop of order >= 2");
        if (rep.singular_residue)
            throw std::logic_error("singularity_scan: two singular residues");
        rep.singular_residue = x;
    }
    return rep;
}

}  // namespace padicok
