#pragma once

#include "ybv/report.hpp"
#include "ybv/rmatrix.hpp"

#include <array>

namespace ybv::relations {

using kernel::Rational;
using rmatrix::Normalization;
using rmatrix::QuantumRep;
using rmatrix::RepChoice;

// Spinor triple products live on V⊗V⊗V of dimension 2^{3d/2}.
std::size_t ybe_dimension(int d);

CheckReport check_clifford(int d);
CheckReport check_coefficients(int d, const Rational& u, Normalization norm);

// R12(u) R23(u+v) R12(v) = R23(v) R12(u+v) R23(u)
CheckReport check_ybe(int d, const Rational& u, const Rational& v, Normalization norm, RepChoice rep,
                      const CheckOptions& opts = {});

// signs = (i, j, k), each +1 or −1:
// R^i_12(u) R^k_23(u+v) R^j_12(v) = R^j_23(v) R^k_12(u+v) R^i_23(u).
// With an odd number of minus signs both sides must also vanish.
CheckReport check_three_term(int d, const Rational& u, const Rational& v, std::array<int, 3> signs,
                             Normalization norm = Normalization::Product, RepChoice rep = RepChoice::Primed,
                             const CheckOptions& opts = {});

// R12(u−v) L⁰13(u) L⁰23(v) = L⁰13(v) L⁰23(u) R12(u−v)
CheckReport check_rll_fundamental(int d, const Rational& u, const Rational& v,
                                  Normalization norm = Normalization::Product, RepChoice rep = RepChoice::Primed,
                                  const CheckOptions& opts = {});

// Same arrangement with L built from an so(d) representation.
CheckReport check_rll_quantum(int d, const Rational& u, const Rational& v, const QuantumRep& q,
                              Normalization norm = Normalization::Product, RepChoice rep = RepChoice::Primed,
                              const CheckOptions& opts = {});

// {M_[ab, M_c]e} = 0 for all indices.
CheckReport check_asym(const QuantumRep& q);

// R±(u) R±(−u) = h±(u) P± with h± from the binomial sum and from the product formula.
CheckReport check_unitarity(int d, const Rational& u, Normalization norm = Normalization::Product,
                            RepChoice rep = RepChoice::Naive);

CheckReport check_symmetries(int d, const Rational& u, Normalization norm, RepChoice rep);
CheckReport check_d6_reduction(const Rational& u);
CheckReport check_exchange_identities(int d);
// E(x) E(y) = (1−xy)^d E((x+y)/(1−xy)) on two copies.
CheckReport check_unit_gen(int d, const Rational& x, const Rational& y);
// R⁰12(u−v) R⁰23(u) R⁰12(v) = R⁰23(v) R⁰12(u) R⁰23(u−v)
CheckReport check_fundamental_ybe(int d, const Rational& u, const Rational& v);
// lim_{u→0} R⁺(u)/u = Γ(d/2) P⁺ under the product normalization.
CheckReport check_epsilon_projector_limit(int d);

// h± from the binomial sums over a coefficient table pair at ±u.
std::pair<Rational, Rational> unitarity_binomial(int d, const Rational& u, Normalization norm);
// h± from the product formula rescaled to the given normalization.
std::pair<Rational, Rational> unitarity_product(int d, const Rational& u, Normalization norm);

}  // namespace ybv::relations
