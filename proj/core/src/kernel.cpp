#include "ybv/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ybv::kernel {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+'))
            ++i;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= n2;
    im_ /= n2;
    return *this;
}

std::complex<double> ExactScalar::to_complex() const { return {re_.get_d(), im_.get_d()}; }

ExactScalar pow(const ExactScalar& x, unsigned n)
{
    ExactScalar r(1), b = x;
    while (n) {
        if (n & 1u)
            r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

std::string to_string(const ExactScalar& z)
{
    if (z.is_real())
        return to_string(z.re());
    std::string im = to_string(z.im()) + "*i";
    if (sgn(z.re()) == 0)
        return im;
    std::string s = to_string(z.re());
    if (sgn(z.im()) > 0)
        s += "+";
    return s + im;
}

ExactScalar parse_scalar(std::string_view text)
{
    std::string s(text);
    const std::string suffix = "*i";
    if (s.size() < suffix.size() || s.compare(s.size() - 2, 2, suffix) != 0)
        return ExactScalar(parse_rational(s));
    s.resize(s.size() - 2);
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    if (split == std::string::npos)
        return {Rational(0), parse_rational(s)};
    return {parse_rational(s.substr(0, split)), parse_rational(s.substr(split))};
}

FloatScalar checked(FloatScalar z, const char* where)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error(std::string("non-finite value in ") + where);
    return z;
}

// ---------------------------------------------------------------------------
// SparseOperator

namespace {

// Dense scratch row used to merge entries column-wise.
class RowAccumulator {
public:
    explicit RowAccumulator(std::size_t dim) : vals_(dim), used_(dim, 0) {}

    void add(std::uint32_t col, const ExactScalar& v)
    {
        if (!used_[col]) {
            used_[col] = 1;
            touched_.push_back(col);
            vals_[col] = v;
        } else {
            vals_[col] += v;
        }
    }

    std::vector<Entry> flush()
    {
        std::sort(touched_.begin(), touched_.end());
        std::vector<Entry> row;
        row.reserve(touched_.size());
        for (auto c : touched_) {
            if (!vals_[c].is_zero())
                row.push_back({c, std::move(vals_[c])});
            vals_[c] = ExactScalar();
            used_[c] = 0;
        }
        touched_.clear();
        return row;
    }

private:
    std::vector<ExactScalar> vals_;
    std::vector<char> used_;
    std::vector<std::uint32_t> touched_;
};

}  // namespace

OperatorBuilder::OperatorBuilder(std::size_t dim)
{
    op_.dim_ = dim;
    op_.row_ptr_.assign(1, 0);
    op_.row_ptr_.reserve(dim + 1);
}

void OperatorBuilder::push_row(std::vector<Entry> row)
{
    if (next_row_ >= op_.dim_)
        throw std::logic_error("too many rows");
    for (auto& e : row) {
        op_.cols_.push_back(e.col);
        op_.vals_.push_back(std::move(e.value));
    }
    op_.row_ptr_.push_back(op_.vals_.size());
    ++next_row_;
}

SparseOperator OperatorBuilder::finish()
{
    while (next_row_ < op_.dim_)
        push_row({});
    return std::move(op_);
}

SparseOperator::SparseOperator(std::size_t dim, std::vector<Triplet> entries) : dim_(dim)
{
    for (const auto& t : entries)
        if (t.row >= dim || t.col >= dim)
            throw std::out_of_range("entry outside operator dimension");
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    row_ptr_.assign(dim + 1, 0);
    std::size_t i = 0;
    for (std::size_t r = 0; r < dim; ++r) {
        while (i < entries.size() && entries[i].row == r) {
            std::size_t c = entries[i].col;
            ExactScalar v = entries[i].value;
            ++i;
            while (i < entries.size() && entries[i].row == r && entries[i].col == c)
                v += entries[i++].value;
            if (!v.is_zero()) {
                cols_.push_back(static_cast<std::uint32_t>(c));
                vals_.push_back(std::move(v));
            }
        }
        row_ptr_[r + 1] = vals_.size();
    }
}

SparseOperator SparseOperator::identity(std::size_t dim)
{
    OperatorBuilder b(dim);
    for (std::size_t r = 0; r < dim; ++r)
        b.push_row({{static_cast<std::uint32_t>(r), ExactScalar(1)}});
    return b.finish();
}

SparseOperator SparseOperator::zero(std::size_t dim) { return OperatorBuilder(dim).finish(); }

SparseOperator SparseOperator::diagonal(const std::vector<ExactScalar>& diag)
{
    OperatorBuilder b(diag.size());
    for (std::size_t r = 0; r < diag.size(); ++r) {
        if (diag[r].is_zero())
            b.push_row({});
        else
            b.push_row({{static_cast<std::uint32_t>(r), diag[r]}});
    }
    return b.finish();
}

SparseOperator SparseOperator::from_dense(const std::vector<std::vector<ExactScalar>>& rows)
{
    OperatorBuilder b(rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size())
            throw std::invalid_argument("from_dense: matrix is not square");
        std::vector<Entry> out;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero())
                out.push_back({static_cast<std::uint32_t>(c), row[c]});
        b.push_row(std::move(out));
    }
    return b.finish();
}

ExactScalar SparseOperator::at(std::size_t row, std::size_t col) const
{
    if (row >= dim_ || col >= dim_)
        throw std::out_of_range("SparseOperator::at");
    auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
    auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
    auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(col));
    if (it != last && *it == col)
        return vals_[static_cast<std::size_t>(it - cols_.begin())];
    return {};
}

std::vector<std::vector<ExactScalar>> SparseOperator::to_dense() const
{
    std::vector<std::vector<ExactScalar>> m(dim_, std::vector<ExactScalar>(dim_));
    for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { m[r][c] = v; });
    return m;
}

std::vector<FloatScalar> SparseOperator::to_dense_float() const
{
    std::vector<FloatScalar> m(dim_ * dim_);
    for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { m[r * dim_ + c] = v.to_complex(); });
    return m;
}

ExactScalar SparseOperator::trace() const
{
    ExactScalar t;
    for (std::size_t r = 0; r < dim_; ++r)
        t += at(r, r);
    return t;
}

SparseOperator SparseOperator::scaled(const ExactScalar& c) const
{
    if (c.is_zero())
        return zero(dim_);
    SparseOperator out = *this;
    for (auto& v : out.vals_)
        v *= c;
    return out;
}

SparseOperator SparseOperator::adjoint() const
{
    std::vector<Triplet> t;
    t.reserve(nnz());
    for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { t.push_back({c, r, v.conj()}); });
    return SparseOperator(dim_, std::move(t));
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b)
{
    return linear_combination({ExactScalar(1), ExactScalar(1)}, {&a, &b});
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b)
{
    return linear_combination({ExactScalar(1), ExactScalar(-1)}, {&a, &b});
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) { return matmul(a, b); }

bool operator==(const SparseOperator& a, const SparseOperator& b)
{
    return a.dim_ == b.dim_ && a.row_ptr_ == b.row_ptr_ && a.cols_ == b.cols_ && a.vals_ == b.vals_;
}

// ---------------------------------------------------------------------------
// Products. Each operand is scaled to Gaussian integers over a common
// denominator; rows are accumulated in __int128 when a magnitude bound allows
// it and in mpz otherwise. Each result entry is canonicalized once.

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

struct IntForm {
    mpz_class denom{1};
    std::vector<mpz_class> re, im;  // CSR order of the source operator
    std::size_t max_bits = 0;
    std::size_t max_row_nnz = 0;
};

IntForm to_int_form(const SparseOperator& op)
{
    IntForm f;
    for (std::size_t p = 0; p < op.nnz(); ++p) {
        const auto& v = op.value_at(p);
        mpz_lcm(f.denom.get_mpz_t(), f.denom.get_mpz_t(), v.re().get_den_mpz_t());
        mpz_lcm(f.denom.get_mpz_t(), f.denom.get_mpz_t(), v.im().get_den_mpz_t());
    }
    f.re.resize(op.nnz());
    f.im.resize(op.nnz());
    for (std::size_t p = 0; p < op.nnz(); ++p) {
        const auto& v = op.value_at(p);
        f.re[p] = v.re().get_num() * (f.denom / v.re().get_den());
        f.im[p] = v.im().get_num() * (f.denom / v.im().get_den());
        f.max_bits = std::max({f.max_bits, mpz_sizeinbase(f.re[p].get_mpz_t(), 2),
                               mpz_sizeinbase(f.im[p].get_mpz_t(), 2)});
    }
    for (std::size_t r = 0; r < op.dim(); ++r)
        f.max_row_nnz = std::max(f.max_row_nnz, op.row_end(r) - op.row_begin(r));
    return f;
}

i128 to_i128(const mpz_class& z)
{
    std::uint64_t limbs[2] = {0, 0};
    std::size_t count = 0;
    mpz_export(limbs, &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
    u128 mag = (static_cast<u128>(limbs[1]) << 64) | limbs[0];
    return sgn(z) < 0 ? -static_cast<i128>(mag) : static_cast<i128>(mag);
}

mpz_class from_i128(i128 v)
{
    bool neg = v < 0;
    u128 mag = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg)
        z = -z;
    return z;
}

std::size_t bit_length(std::size_t n)
{
    std::size_t b = 0;
    while (n) {
        ++b;
        n >>= 1u;
    }
    return b;
}

ExactScalar rescale(const mpz_class& re, const mpz_class& im, const mpz_class& denom)
{
    Rational r(re, denom), i(im, denom);
    r.canonicalize();
    i.canonicalize();
    return {std::move(r), std::move(i)};
}

template <class Int>
struct IntOps;

template <>
struct IntOps<i128> {
    static i128 convert(const mpz_class& z) { return to_i128(z); }
    static void addmul(i128& acc, const i128& a, const i128& b) { acc += a * b; }
    static void submul(i128& acc, const i128& a, const i128& b) { acc -= a * b; }
    static bool is_zero(const i128& v) { return v == 0; }
    static mpz_class to_mpz(const i128& v) { return from_i128(v); }
    static void reset(i128& v) { v = 0; }
};

template <>
struct IntOps<mpz_class> {
    static const mpz_class& convert(const mpz_class& z) { return z; }
    static void addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b)
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static void submul(mpz_class& acc, const mpz_class& a, const mpz_class& b)
    {
        mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
    static const mpz_class& to_mpz(const mpz_class& v) { return v; }
    static void reset(mpz_class& v) { v = 0; }
};

template <class Int>
SparseOperator multiply_int(const SparseOperator& a, const IntForm& fa, const SparseOperator& b, const IntForm& fb)
{
    using Ops = IntOps<Int>;
    const std::size_t n = a.dim();
    std::vector<Int> are(fa.re.size()), aim(fa.im.size()), bre(fb.re.size()), bim(fb.im.size());
    for (std::size_t p = 0; p < are.size(); ++p) {
        are[p] = Ops::convert(fa.re[p]);
        aim[p] = Ops::convert(fa.im[p]);
    }
    for (std::size_t p = 0; p < bre.size(); ++p) {
        bre[p] = Ops::convert(fb.re[p]);
        bim[p] = Ops::convert(fb.im[p]);
    }
    const mpz_class denom = fa.denom * fb.denom;

    std::vector<Int> acc_re(n), acc_im(n);
    std::vector<char> used(n, 0);
    std::vector<std::uint32_t> touched;
    OperatorBuilder out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t p = a.row_begin(r); p < a.row_end(r); ++p) {
            const std::size_t k = a.col_at(p);
            const bool ar0 = Ops::is_zero(are[p]), ai0 = Ops::is_zero(aim[p]);
            for (std::size_t q = b.row_begin(k); q < b.row_end(k); ++q) {
                const std::uint32_t c = b.col_at(q);
                if (!used[c]) {
                    used[c] = 1;
                    touched.push_back(c);
                }
                const bool br0 = Ops::is_zero(bre[q]), bi0 = Ops::is_zero(bim[q]);
                if (!ar0 && !br0)
                    Ops::addmul(acc_re[c], are[p], bre[q]);
                if (!ai0 && !bi0)
                    Ops::submul(acc_re[c], aim[p], bim[q]);
                if (!ar0 && !bi0)
                    Ops::addmul(acc_im[c], are[p], bim[q]);
                if (!ai0 && !br0)
                    Ops::addmul(acc_im[c], aim[p], bre[q]);
            }
        }
        std::sort(touched.begin(), touched.end());
        std::vector<Entry> row;
        row.reserve(touched.size());
        for (auto c : touched) {
            if (!Ops::is_zero(acc_re[c]) || !Ops::is_zero(acc_im[c]))
                row.push_back({c, rescale(Ops::to_mpz(acc_re[c]), Ops::to_mpz(acc_im[c]), denom)});
            Ops::reset(acc_re[c]);
            Ops::reset(acc_im[c]);
            used[c] = 0;
        }
        touched.clear();
        out.push_row(std::move(row));
    }
    return out.finish();
}

}  // namespace

SparseOperator matmul(const SparseOperator& a, const SparseOperator& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("matmul: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    IntForm fa = to_int_form(a), fb = to_int_form(b);
    // |entry| <= 2 * row_nnz * max|a| * max|b|, plus a sign bit.
    std::size_t bound = fa.max_bits + fb.max_bits + bit_length(fa.max_row_nnz) + 2;
    if (bound < 126)
        return multiply_int<i128>(a, fa, b, fb);
    return multiply_int<mpz_class>(a, fa, b, fb);
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b)
{
    const std::size_t bd = b.dim();
    OperatorBuilder out(a.dim() * bd);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < bd; ++k) {
            std::vector<Entry> row;
            row.reserve((a.row_end(i) - a.row_begin(i)) * (b.row_end(k) - b.row_begin(k)));
            for (std::size_t p = a.row_begin(i); p < a.row_end(i); ++p)
                for (std::size_t q = b.row_begin(k); q < b.row_end(k); ++q)
                    row.push_back({static_cast<std::uint32_t>(a.col_at(p) * bd + b.col_at(q)),
                                   a.value_at(p) * b.value_at(q)});
            out.push_row(std::move(row));
        }
    }
    return out.finish();
}

SparseOperator embed(const SparseOperator& op, std::size_t slot, const std::vector<std::size_t>& dims)
{
    if (slot >= dims.size())
        throw std::out_of_range("embed: slot " + std::to_string(slot) + " out of range");
    if (op.dim() != dims[slot])
        throw std::invalid_argument("embed: operator dimension does not match slot");
    std::size_t before = 1, after = 1;
    for (std::size_t s = 0; s < slot; ++s)
        before *= dims[s];
    for (std::size_t s = slot + 1; s < dims.size(); ++s)
        after *= dims[s];
    SparseOperator out = op;
    if (after > 1)
        out = kron(out, SparseOperator::identity(after));
    if (before > 1)
        out = kron(SparseOperator::identity(before), out);
    return out;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) { return a * b + b * a; }

SparseOperator linear_combination(const std::vector<ExactScalar>& coeffs, const std::vector<const SparseOperator*>& ops)
{
    if (coeffs.size() != ops.size() || ops.empty())
        throw std::invalid_argument("linear_combination: bad arguments");
    const std::size_t n = ops.front()->dim();
    for (const auto* op : ops)
        if (op->dim() != n)
            throw std::invalid_argument("linear_combination: dimension mismatch");
    RowAccumulator acc(n);
    OperatorBuilder out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t t = 0; t < ops.size(); ++t) {
            if (coeffs[t].is_zero())
                continue;
            const auto& op = *ops[t];
            for (std::size_t p = op.row_begin(r); p < op.row_end(r); ++p)
                acc.add(op.col_at(p), op.value_at(p) * coeffs[t]);
        }
        out.push_row(acc.flush());
    }
    return out.finish();
}

std::optional<Mismatch> first_difference(const SparseOperator& lhs, const SparseOperator& rhs)
{
    if (lhs.dim() != rhs.dim())
        throw std::invalid_argument("first_difference: dimension mismatch");
    std::optional<Mismatch> first;
    std::size_t count = 0;
    auto note = [&](std::size_t r, std::size_t c, const ExactScalar& a, const ExactScalar& b) {
        if (!first)
            first = Mismatch{r, c, a, b, 0};
        ++count;
    };
    for (std::size_t r = 0; r < lhs.dim(); ++r) {
        std::size_t p = lhs.row_begin(r), q = rhs.row_begin(r);
        const std::size_t pe = lhs.row_end(r), qe = rhs.row_end(r);
        while (p < pe || q < qe) {
            if (q == qe || (p < pe && lhs.col_at(p) < rhs.col_at(q))) {
                note(r, lhs.col_at(p), lhs.value_at(p), ExactScalar());
                ++p;
            } else if (p == pe || rhs.col_at(q) < lhs.col_at(p)) {
                note(r, rhs.col_at(q), ExactScalar(), rhs.value_at(q));
                ++q;
            } else {
                if (lhs.value_at(p) != rhs.value_at(q))
                    note(r, lhs.col_at(p), lhs.value_at(p), rhs.value_at(q));
                ++p;
                ++q;
            }
        }
    }
    if (first)
        first->count = count;
    return first;
}

std::string describe(const Mismatch& m)
{
    std::ostringstream os;
    os << "first mismatch at (" << m.row << ", " << m.col << "): lhs=" << to_string(m.lhs)
       << " rhs=" << to_string(m.rhs) << "; " << m.count << " differing entries";
    return os.str();
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix DenseMatrix::identity(std::size_t dim)
{
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_sparse(const SparseOperator& op)
{
    DenseMatrix m(op.dim());
    op.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { m(r, c) = v.to_complex(); });
    return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o)
{
    if (o.dim_ != dim_)
        throw std::invalid_argument("DenseMatrix: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(FloatScalar c)
{
    for (auto& v : data_)
        v *= c;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("DenseMatrix: dimension mismatch");
    const std::size_t n = a.dim_;
    DenseMatrix c(n);
    // Zero entries of the left factor are skipped; Kronecker-structured
    // operators are mostly zeros.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const FloatScalar aik = a.data_[i * n + k];
            if (aik == FloatScalar(0.0))
                continue;
            const FloatScalar* brow = &b.data_[k * n];
            FloatScalar* crow = &c.data_[i * n];
            for (std::size_t j = 0; j < n; ++j)
                crow[j] += aik * brow[j];
        }
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("DenseMatrix: dimension mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

double DenseMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

bool DenseMatrix::all_finite() const
{
    return std::all_of(data_.begin(), data_.end(),
                       [](const FloatScalar& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

DenseMatrix axpy(const DenseMatrix& acc, FloatScalar c, const SparseOperator& op)
{
    if (acc.dim() != op.dim())
        throw std::invalid_argument("axpy: dimension mismatch");
    DenseMatrix out = acc;
    op.for_each([&](std::size_t r, std::size_t col, const ExactScalar& v) { out(r, col) += c * v.to_complex(); });
    return out;
}

}  // namespace ybv::kernel
