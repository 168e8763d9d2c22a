#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "padicok/zpk.hpp"

namespace padicok {

// Dense matrix over Z/p^K, row-major residues.
class MatPk {
  public:
    MatPk() = default;
    MatPk(Modulus m, int rows, int cols)
        : mod_(m), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("MatPk: negative dimension");
    }

    static MatPk identity(Modulus m, int n);
    static MatPk diagonal(Modulus m, const std::vector<std::int64_t>& d);

    const Modulus& mod() const { return mod_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    std::uint64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, std::int64_t v) { at(i, j) = mod_.reduce(v); }

    bool operator==(const MatPk&) const = default;
    bool is_zero() const;

    MatPk operator+(const MatPk& o) const;
    MatPk operator-(const MatPk& o) const;
    MatPk operator*(const MatPk& o) const;
    MatPk scaled(std::uint64_t c) const;

    // A + c*I (square only).
    MatPk plus_scalar_diag(std::uint64_t c) const;

    MatPk block(int i0, int j0, int h, int w) const;
    void paste(int i0, int j0, const MatPk& b);

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void row_scale(int i, std::uint64_t c);
    void col_scale(int j, std::uint64_t c);
    void row_axpy(int dst, int src, std::uint64_t c);  // row dst += c * row src
    void col_axpy(int dst, int src, std::uint64_t c);  // col dst += c * col src

    // Text format: header "p=<p> K=<K> rows=<r> cols=<c>" then rows of residues.
    std::string to_text() const;
    static MatPk from_text(std::istream& in);
    static MatPk from_text(const std::string& s);

    void check_same_mod(const MatPk& o) const {
        if (!(mod_ == o.mod_)) throw std::invalid_argument("MatPk: mismatched modulus");
    }

  private:
    Modulus mod_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> a_;
};

MatPk direct_sum(const MatPk& a, const MatPk& b);

// Inverse of a matrix that is invertible mod p; throws std::domain_error otherwise.
MatPk inverse(const MatPk& a);

// det(A) mod p, computed over F_p. Nonzero iff A is invertible over Z/p^K.
std::uint64_t det_mod_p(const MatPk& a);

}  // namespace padicok
