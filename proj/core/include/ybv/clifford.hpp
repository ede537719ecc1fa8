#pragma once

#include "ybv/kernel.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ybv::clifford {

using kernel::ExactScalar;
using kernel::Rational;
using kernel::SparseOperator;

inline constexpr int kDefaultMaxDim = 8;

struct GammaBasis {
    int d = 0;
    std::vector<SparseOperator> gammas;  // γ_1 … γ_d
    SparseOperator gamma5;               // γ_{d+1} = α γ_1⋯γ_d
    ExactScalar alpha;

    std::size_t spinor_dim() const { return gammas.front().dim(); }
    const SparseOperator& gamma(int a) const { return gammas.at(static_cast<std::size_t>(a - 1)); }
};

// Chiral doubling from the Pauli matrices. gamma5 = diag(+1…, −1…).
GammaBasis build_gamma(int d, int max_d = kDefaultMaxDim);

// Subset of {1,…,d}; bit a−1 set means index a is present.
using MultiIndex = std::uint32_t;

int order(MultiIndex A);
std::vector<int> indices(MultiIndex A);
MultiIndex full_index(int d);
std::vector<MultiIndex> subsets_of_size(int d, int k);
// (−1)^{k(k−1)/2}
int reversal_sign(int k);

SparseOperator antisym_product(const GammaBasis& basis, MultiIndex A);

// Σ_{|A|=k} γ_A ⊗ γ_A, the k-th invariant of V⊗V.
SparseOperator pair_sum(const GammaBasis& basis, int k);

struct GradedRep {
    GammaBasis basis;
    int n = 0;
    std::vector<std::vector<SparseOperator>> copy_ops;  // [copy-1][a-1]

    std::size_t dim() const { return copy_ops.front().front().dim(); }
    const SparseOperator& op(int copy, int a) const
    {
        return copy_ops.at(static_cast<std::size_t>(copy - 1)).at(static_cast<std::size_t>(a - 1));
    }
};

GradedRep graded_rep(const GammaBasis& basis, int n);

// Γ_{i,A}: ordered product over ascending indices within copy i.
SparseOperator copy_product(const GradedRep& rep, int copy, MultiIndex A);

// T_k = Σ_{|A|=k} Γ_{i,A} Γ_{j,A} for k = 0…d.
std::vector<SparseOperator> exponential_terms(const GradedRep& rep, int i, int j);

// E_ij(t) = Σ_k s_k t^k T_k.
SparseOperator as_exponential(const GradedRep& rep, int i, int j, const Rational& t);
kernel::DenseMatrix as_exponential(const std::vector<SparseOperator>& terms, double t);
SparseOperator as_exponential(const std::vector<SparseOperator>& terms, const Rational& t);

struct ExchangePair {
    SparseOperator P;        // Γ_{2,a} P = P Γ_{1,a}
    SparseOperator P_prime;  // Γ_{1,a} P′ = P′ Γ_{2,a}
};

// P = E_12(−1), P′ = E_12(1); the two copies are 1 and 2.
ExchangePair exchange_pair(const GradedRep& rep);

// (γ_{d+1}⊗γ_{d+1}) Σ_{|A|=k} γ_A⊗γ_A − (−1)^{d/2} Σ_{|A|=d−k} γ_A⊗γ_A; zero when the identity holds.
SparseOperator gamma5_pair_reflection(const GammaBasis& basis, int k);

}  // namespace ybv::clifford
