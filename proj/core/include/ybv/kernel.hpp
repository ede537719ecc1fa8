#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybv::kernel {

using Rational = mpq_class;

// Canonical p/q. Operations assume canonical inputs; mpq_class(p, q) alone does not reduce.
Rational make_rational(long num, long den = 1);
// Accepts "p" or "p/q" with an optional sign. Decimal input is rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long re) : re_(re) {}
    ExactScalar(Rational re) : re_(std::move(re)) {}
    ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    ExactScalar conj() const { return {re_, -im_}; }

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const;

private:
    Rational re_{0};
    Rational im_{0};
};

ExactScalar pow(const ExactScalar& x, unsigned n);
// Fraction strings: "p/q", "p/q+r/s*i", "r/s*i".
std::string to_string(const ExactScalar& z);
ExactScalar parse_scalar(std::string_view text);

using FloatScalar = std::complex<double>;

// Throws std::domain_error when z is not finite.
FloatScalar checked(FloatScalar z, const char* where);

struct Entry {
    std::uint32_t col;
    ExactScalar value;
};

struct Triplet {
    std::size_t row;
    std::size_t col;
    ExactScalar value;
};

class SparseOperator {
public:
    SparseOperator() = default;
    // Duplicates are summed, zeros dropped.
    SparseOperator(std::size_t dim, std::vector<Triplet> entries);

    static SparseOperator identity(std::size_t dim);
    static SparseOperator zero(std::size_t dim);
    static SparseOperator diagonal(const std::vector<ExactScalar>& diag);
    static SparseOperator from_dense(const std::vector<std::vector<ExactScalar>>& rows);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return vals_.size(); }
    bool is_zero() const { return vals_.empty(); }

    ExactScalar at(std::size_t row, std::size_t col) const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
                f(r, static_cast<std::size_t>(cols_[p]), vals_[p]);
    }

    std::size_t row_begin(std::size_t r) const { return row_ptr_[r]; }
    std::size_t row_end(std::size_t r) const { return row_ptr_[r + 1]; }
    std::uint32_t col_at(std::size_t p) const { return cols_[p]; }
    const ExactScalar& value_at(std::size_t p) const { return vals_[p]; }

    std::vector<std::vector<ExactScalar>> to_dense() const;
    std::vector<FloatScalar> to_dense_float() const;
    ExactScalar trace() const;

    SparseOperator scaled(const ExactScalar& c) const;
    SparseOperator adjoint() const;

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend bool operator==(const SparseOperator& a, const SparseOperator& b);
    friend bool operator!=(const SparseOperator& a, const SparseOperator& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::uint32_t> cols_;
    std::vector<ExactScalar> vals_;

    friend class OperatorBuilder;
};

// Row-by-row construction without sorting; rows must be appended in order.
class OperatorBuilder {
public:
    explicit OperatorBuilder(std::size_t dim);
    // Entries of one row, sorted by col, nonzero.
    void push_row(std::vector<Entry> row);
    SparseOperator finish();

private:
    SparseOperator op_;
    std::size_t next_row_ = 0;
};

SparseOperator matmul(const SparseOperator& a, const SparseOperator& b);
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);
SparseOperator embed(const SparseOperator& op, std::size_t slot, const std::vector<std::size_t>& dims);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);
// Σ c_k ops_k, all of one dimension.
SparseOperator linear_combination(const std::vector<ExactScalar>& coeffs,
                                  const std::vector<const SparseOperator*>& ops);

struct Mismatch {
    std::size_t row;
    std::size_t col;
    ExactScalar lhs;
    ExactScalar rhs;
    std::size_t count;  // total number of differing entries
};

// First differing entry in (row, col) order, or nullopt when equal.
std::optional<Mismatch> first_difference(const SparseOperator& lhs, const SparseOperator& rhs);
std::string describe(const Mismatch& m);

class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix from_sparse(const SparseOperator& op);

    std::size_t dim() const { return dim_; }
    FloatScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const FloatScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    DenseMatrix& operator+=(const DenseMatrix& o);
    DenseMatrix& operator*=(FloatScalar c);
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

    double max_abs() const;
    bool all_finite() const;

private:
    std::size_t dim_ = 0;
    std::vector<FloatScalar> data_;
};

DenseMatrix axpy(const DenseMatrix& acc, FloatScalar c, const SparseOperator& op);

}  // namespace ybv::kernel
