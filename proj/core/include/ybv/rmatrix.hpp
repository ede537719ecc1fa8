#pragma once

#include "ybv/clifford.hpp"
#include "ybv/kernel.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybv::rmatrix {

using clifford::GammaBasis;
using kernel::ExactScalar;
using kernel::Rational;
using kernel::SparseOperator;

class PoleError : public std::domain_error {
public:
    PoleError(int k, const std::string& what) : std::domain_error(what), k_(k) {}
    // Coefficient index where the pole was met, or −1 for a scalar quantity.
    int k() const { return k_; }

private:
    int k_;
};

// c · Π (u + r)^m with integer multiplicities; common factors cancel on construction.
class FactoredFunction {
public:
    FactoredFunction() = default;
    static FactoredFunction constant(Rational c);
    static FactoredFunction linear(Rational shift);  // u + shift

    bool is_zero() const { return sgn(c_) == 0; }
    const Rational& constant_factor() const { return c_; }
    const std::map<Rational, int>& factors() const { return factors_; }

    FactoredFunction& operator*=(const FactoredFunction& o);
    FactoredFunction& operator/=(const FactoredFunction& o);
    friend FactoredFunction operator*(FactoredFunction a, const FactoredFunction& b) { return a *= b; }
    friend FactoredFunction operator/(FactoredFunction a, const FactoredFunction& b) { return a /= b; }

    // f(−u)
    FactoredFunction reflected() const;
    // Multiplicity of the zero (positive) or pole (negative) at u0.
    int order_at(const Rational& u0) const;
    // Throws PoleError(k) when the reduced denominator vanishes at u.
    Rational evaluate(const Rational& u, int k = -1) const;
    // lim_{u→u0} f(u)/(u−u0)^p; throws PoleError when the limit diverges.
    Rational limit(const Rational& u0, int p, int k = -1) const;

    std::string to_string() const;

private:
    Rational c_{0};
    std::map<Rational, int> factors_;
};

enum class Normalization { Unit, Product, Beta, D6Paper };
enum class RepChoice { Naive, Primed, DoublePrimed };
enum class Parity { Even, Odd, Full };

std::string to_string(Normalization n);
std::string to_string(RepChoice r);
std::string to_string(Parity p);
Normalization parse_normalization(std::string_view s);
RepChoice parse_rep(std::string_view s);

struct CoefficientTable {
    int d = 0;
    Rational u;
    Normalization norm = Normalization::Product;
    std::vector<ExactScalar> values;  // R_0 … R_d

    const ExactScalar& operator[](int k) const { return values.at(static_cast<std::size_t>(k)); }
};

// R_k as rational functions of u, propagated from the seeds R_0, R_1 by the recurrence.
std::vector<FactoredFunction> coefficient_functions(int d, Normalization norm);

CoefficientTable coefficients(int d, const Rational& u, Normalization norm);
// Direct Pochhammer evaluation; norm must be Product or Beta.
CoefficientTable coefficients_closed_form(int d, const Rational& u, Normalization norm);

// Violated invariant (recurrence, cross-multiplied, or reciprocity), or nullopt.
std::optional<std::string> table_invariant_violation(const CoefficientTable& t);

// Parity scales of the beta normalization: B(u/2,(u+d)/2) and B((u+1)/2,(u+d−1)/2).
std::pair<double, double> beta_scales(int d, double u);
// R_k = (−1)^k' B(k'+u/2,(u+d)/2−k') and the odd analogue, through Γ evaluations.
std::vector<double> beta_form_values(int d, double u);

// Σ_k R_k Σ_{|A|=k} γ_A⊗γ_A, odd part dressed per rep. Precomputed once per (basis, rep).
class SpinorTerms {
public:
    SpinorTerms(const GammaBasis& basis, RepChoice rep);
    int d() const { return d_; }
    RepChoice rep() const { return rep_; }
    const SparseOperator& term(int k) const { return terms_.at(static_cast<std::size_t>(k)); }
    SparseOperator assemble(const CoefficientTable& table, Parity parity = Parity::Full) const;
    SparseOperator assemble(const std::vector<ExactScalar>& values, Parity parity = Parity::Full) const;

private:
    int d_;
    RepChoice rep_;
    std::vector<SparseOperator> terms_;
};

SparseOperator assemble_spinor_R(const GammaBasis& basis, const CoefficientTable& table, RepChoice rep,
                                 Parity parity = Parity::Full);

struct ProjectorPair {
    SparseOperator plus;
    SparseOperator minus;
};

// P± = (1⊗1 ± γ_{d+1}⊗γ_{d+1})/2
ProjectorPair projectors(const GammaBasis& basis);
// Π± = (1 ± γ_{d+1})/2
ProjectorPair weyl_projectors(const GammaBasis& basis);

// u P + 1 − u/(u+d/2−1) K on V₀⊗V₀; K_{(ii),(jj)} = 1.
SparseOperator fundamental_R0(int d, const Rational& u);
// u 1⊗I − (1/4)[γ_a,γ_b]⊗e_ab on V⊗V₀.
SparseOperator fundamental_L0(const GammaBasis& basis, const Rational& u);

struct QuantumRep {
    int d = 0;
    std::size_t m = 0;
    std::string name;
    std::map<std::pair<int, int>, SparseOperator> generators;  // a < b

    // M_ab with M_ba = −M_ab and M_aa = 0.
    SparseOperator M(int a, int b) const;
};

// (M_ab)_ce = i(δ_ac δ_be − δ_bc δ_ae)
QuantumRep so_defining_rep(int d);
// M_ab = (i/2) γ_a γ_b
QuantumRep so_spinor_rep(const GammaBasis& basis);
// First violated so(d) commutation relation, or nullopt.
std::optional<std::string> so_relation_violation(const QuantumRep& q);

// u 1 + (i/2) Σ_{a<b} γ_a γ_b ⊗ M_ab on V⊗(quantum space).
SparseOperator quantum_L(const GammaBasis& basis, const Rational& u, const QuantumRep& q);

}  // namespace ybv::rmatrix
