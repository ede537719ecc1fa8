#pragma once

// Dense exact matrices built with nothing but ExactScalar arithmetic. Used to cross-check
// the sparse kernel and the assembled operators.

#include "ybv/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using ybv::kernel::ExactScalar;
using ybv::kernel::Rational;
using Mat = std::vector<std::vector<ExactScalar>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<ExactScalar>(n)); }

inline Mat eye(std::size_t n)
{
    Mat m = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size();
    Mat c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero())
                    c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Mat add(const Mat& a, const Mat& b, const ExactScalar& s = 1)
{
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            c[i][j] += s * b[i][j];
    return c;
}

inline Mat scale(const Mat& a, const ExactScalar& s)
{
    Mat c = a;
    for (auto& row : c)
        for (auto& x : row)
            x *= s;
    return c;
}

inline Mat kron(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size(), m = b.size();
    Mat c = zeros(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    c[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return c;
}

inline bool is_zero(const Mat& a)
{
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero())
                return false;
    return true;
}

// Pauli matrices and a Clifford generating set built by the usual Jordan–Wigner string,
// deliberately a different construction from the library's.
inline std::vector<Mat> jordan_wigner_gammas(int d)
{
    const Mat s1 = {{0, 1}, {1, 0}};
    const Mat s2 = {{0, -ExactScalar::i()}, {ExactScalar::i(), 0}};
    const Mat s3 = {{1, 0}, {0, -1}};
    const int n = d / 2;
    std::vector<Mat> out;
    for (int j = 0; j < n; ++j)
        for (const Mat* s : {&s1, &s2}) {
            Mat m = {{1}};
            for (int q = 0; q < n; ++q)
                m = kron(m, q < j ? s3 : (q == j ? *s : eye(2)));
            out.push_back(m);
        }
    return out;
}

inline int perm_sign(std::vector<int> p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
            s = -s;
        }
    return s;
}

// γ_{a1…ak} by the full antisymmetrized permutation sum, (1/k!) Σ_σ sgn σ γ_{aσ1}⋯γ_{aσk}.
inline Mat antisym(const std::vector<Mat>& g, const std::vector<int>& idx)
{
    const std::size_t n = g.front().size();
    std::vector<int> p(idx.size());
    std::iota(p.begin(), p.end(), 0);
    Mat acc = zeros(n);
    long count = 0;
    do {
        Mat m = eye(n);
        for (int k : p)
            m = mul(m, g[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)] - 1)]);
        acc = add(acc, m, perm_sign(p));
        ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return scale(acc, ExactScalar(Rational(1, count)));
}

// (1/k!) Σ over ordered distinct tuples of γ_{a…}⊗γ_{a…}.
inline Mat pair_sum(const std::vector<Mat>& g, int k)
{
    const int d = static_cast<int>(g.size());
    const std::size_t n = g.front().size();
    Mat acc = zeros(n * n);
    std::vector<int> tuple(static_cast<std::size_t>(k), 1);
    long orderings = 1;
    for (int i = 2; i <= k; ++i)
        orderings *= i;
    for (;;) {
        std::vector<int> sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            const Mat a = antisym(g, tuple);
            acc = add(acc, kron(a, a));
        }
        int pos = k - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == d)
            tuple[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0)
            break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return scale(acc, ExactScalar(Rational(1, orderings)));
}

// R_0 = R_1 = 1 and R_{k+2} = (u+k)/(k−(u+d−2)) R_k, step by step.
inline std::vector<Rational> unit_coefficients(int d, const Rational& u)
{
    std::vector<Rational> r(static_cast<std::size_t>(d + 1));
    r[0] = 1;
    r[1] = 1;
    for (int k = 0; k + 2 <= d; ++k)
        r[static_cast<std::size_t>(k + 2)] = (u + k) / (k - (u + d - 2)) * r[static_cast<std::size_t>(k)];
    return r;
}

inline Mat spinor_R(const std::vector<Mat>& g, const std::vector<Rational>& coeffs)
{
    const std::size_t n = g.front().size();
    Mat acc = zeros(n * n);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        acc = add(acc, pair_sum(g, static_cast<int>(k)), ExactScalar(coeffs[k]));
    return acc;
}

}  // namespace oracle
