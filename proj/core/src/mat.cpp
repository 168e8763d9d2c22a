#include "padicok/mat.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace padicok {

MatPk MatPk::identity(Modulus m, int n) {
    MatPk r(m, n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = m.reduce(1);
    return r;
}

MatPk MatPk::diagonal(Modulus m, const std::vector<std::int64_t>& d) {
    MatPk r(m, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) r.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return r;
}

bool MatPk::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

MatPk MatPk::operator+(const MatPk& o) const {
    check_same_mod(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatPk: shape mismatch in +");
    MatPk r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_.add(a_[i], o.a_[i]);
    return r;
}

MatPk MatPk::operator-(const MatPk& o) const {
    check_same_mod(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatPk: shape mismatch in -");
    MatPk r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_.sub(a_[i], o.a_[i]);
    return r;
}

MatPk MatPk::operator*(const MatPk& o) const {
    check_same_mod(o);
    if (cols_ != o.rows_) throw std::invalid_argument("MatPk: shape mismatch in *");
    MatPk r(mod_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = mod_.add(r.at(i, j), mod_.mul(x, o.at(k, j)));
        }
    return r;
}

MatPk MatPk::scaled(std::uint64_t c) const {
    MatPk r = *this;
    for (auto& v : r.a_) v = mod_.mul(v, c);
    return r;
}

MatPk MatPk::plus_scalar_diag(std::uint64_t c) const {
    if (rows_ != cols_) throw std::invalid_argument("MatPk: plus_scalar_diag needs a square matrix");
    MatPk r = *this;
    for (int i = 0; i < rows_; ++i) r.at(i, i) = mod_.add(r.at(i, i), c);
    return r;
}

MatPk MatPk::block(int i0, int j0, int h, int w) const {
    MatPk r(mod_, h, w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

void MatPk::paste(int i0, int j0, const MatPk& b) {
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

void MatPk::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void MatPk::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void MatPk::row_scale(int i, std::uint64_t c) {
    for (int j = 0; j < cols_; ++j) at(i, j) = mod_.mul(at(i, j), c);
}

void MatPk::col_scale(int j, std::uint64_t c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = mod_.mul(at(i, j), c);
}

void MatPk::row_axpy(int dst, int src, std::uint64_t c) {
    for (int j = 0; j < cols_; ++j) at(dst, j) = mod_.add(at(dst, j), mod_.mul(c, at(src, j)));
}

void MatPk::col_axpy(int dst, int src, std::uint64_t c) {
    for (int i = 0; i < rows_; ++i) at(i, dst) = mod_.add(at(i, dst), mod_.mul(c, at(i, src)));
}

std::string MatPk::to_text() const {
    std::ostringstream os;
    os << "p=" << mod_.p << " K=" << mod_.K << " rows=" << rows_ << " cols=" << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

MatPk MatPk::from_text(std::istream& in) {
    std::string header;
    do {
        if (!std::getline(in, header)) throw std::invalid_argument("matrix text: missing header");
    } while (header.empty() || header[0] == '#');
    std::uint64_t p = 0;
    int K = -1, rows = -1, cols = -1;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("matrix text: bad header token '" + tok + "'");
            std::string key = tok.substr(0, eq);
            long long val = 0;
            try {
                val = std::stoll(tok.substr(eq + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix text: bad header value in '" + tok + "'");
            }
            if (key == "p") p = static_cast<std::uint64_t>(val);
            else if (key == "K") K = static_cast<int>(val);
            else if (key == "rows") rows = static_cast<int>(val);
            else if (key == "cols") cols = static_cast<int>(val);
            else throw std::invalid_argument("matrix text: unknown header key '" + key + "'");
        }
    }
    if (p == 0 || K < 1 || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix text: incomplete header '" + header + "'");
    MatPk r(Modulus(p, K), rows, cols);
    for (int i = 0; i < rows; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw std::invalid_argument("matrix text: missing row " + std::to_string(i + 1));
        std::istringstream ls(line);
        for (int j = 0; j < cols; ++j) {
            long long v;
            if (!(ls >> v)) throw std::invalid_argument("matrix text: short row " + std::to_string(i + 1));
            r.set(i, j, v);
        }
    }
    return r;
}

MatPk MatPk::from_text(const std::string& s) {
    std::istringstream is(s);
    return from_text(is);
}

MatPk direct_sum(const MatPk& a, const MatPk& b) {
    if (!a.empty() && !b.empty()) a.check_same_mod(b);
    const Modulus m = a.rows() || a.cols() ? a.mod() : b.mod();
    MatPk r(m, a.rows() + b.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(a.rows(), a.cols(), b);
    return r;
}

MatPk inverse(const MatPk& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
    const Modulus m = a.mod();
    const int n = a.rows();
    MatPk w = a, inv = MatPk::identity(m, n);
    for (int s = 0; s < n; ++s) {
        int piv = -1;
        for (int i = s; i < n; ++i)
            if (m.is_unit(w.at(i, s))) { piv = i; break; }
        if (piv < 0) throw std::domain_error("inverse: matrix not invertible mod p");
        w.swap_rows(s, piv);
        inv.swap_rows(s, piv);
        std::uint64_t c = m.inv(w.at(s, s));
        w.row_scale(s, c);
        inv.row_scale(s, c);
        for (int i = 0; i < n; ++i) {
            if (i == s) continue;
            std::uint64_t q = w.at(i, s);
            if (q == 0) continue;
            w.row_axpy(i, s, m.neg(q));
            inv.row_axpy(i, s, m.neg(q));
        }
    }
    return inv;
}

std::uint64_t det_mod_p(const MatPk& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_mod_p: square matrix required");
    const std::uint64_t p = a.mod().p;
    const int n = a.rows();
    std::vector<std::uint64_t> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * n + j] = a.at(i, j) % p;
    Modulus fp(p, 1);
    std::uint64_t det = 1 % p;
    for (int s = 0; s < n; ++s) {
        int piv = -1;
        for (int i = s; i < n; ++i)
            if (w[static_cast<size_t>(i) * n + s] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != s) {
            for (int j = 0; j < n; ++j) std::swap(w[static_cast<size_t>(piv) * n + j], w[static_cast<size_t>(s) * n + j]);
            det = (det * (p - 1)) % p;
        }
        std::uint64_t d = w[static_cast<size_t>(s) * n + s];
        det = (det * d) % p;
        std::uint64_t dinv = fp.inv(d);
        for (int i = s + 1; i < n; ++i) {
            std::uint64_t f = (w[static_cast<size_t>(i) * n + s] * dinv) % p;
            if (f == 0) continue;
            for (int j = s; j < n; ++j) {
                std::uint64_t sub = (f * w[static_cast<size_t>(s) * n + j]) % p;
                std::uint64_t& x = w[static_cast<size_t>(i) * n + j];
                x = (x + p - sub) % p;
            }
        }
    }
    return det;
}

}  // namespace padicok
