#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "satip/combinat/partition.hpp"
#include "satip/quasipoly/positive_form.hpp"
#include "satip/quasipoly/quasi_polynomial.hpp"

namespace satip::multiplicity {

using combinat::CycleType;
using combinat::Partition;
using exact::Integer;

// Linear combination of Schur functions; zero coefficients are never stored.
class SchurExpansion {
 public:
  void add(const Partition& p, const Integer& c);
  Integer coefficient(const Partition& p) const;
  const std::map<Partition, Integer>& terms() const noexcept { return terms_; }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  std::map<Partition, Integer> terms_;
};

constexpr long kDefaultCharacterGuard = 10;
constexpr long kDefaultPlethysmGuard = 16;

// g(lambda, mu, pi) = (1/m!) sum_rho |C_rho| chi_lambda chi_mu chi_pi.
Integer kronecker_char(const Partition& lambda, const Partition& mu, const Partition& pi,
                       long guard = kDefaultCharacterGuard);

// g(lambda, mu, pi) as the multiplicity of V_lambda (x) V_mu in V_pi(GL_4)
// restricted to GL_2 x GL_2, from Gelfand-Tsetlin weight multiplicities.
Integer kronecker_two_row(const Partition& lambda, const Partition& mu, const Partition& pi);

// Multiplicity of V_alpha (x) V_beta in V_lambda(GL_m) restricted to
// GL_a x GL_b, acting on C^a (x) C^b = C^m with basis e_i (x) f_j -> e_{ib+j}.
// Alternating sum over both Weyl groups of the restricted weight
// multiplicities, which are read off the weights of V_lambda.
Integer klimyk_branching(std::size_t m, std::pair<std::size_t, std::size_t> embedding, const Partition& lambda,
                         const Partition& alpha, const Partition& beta);

// s_lambda[s_mu] through the power-sum basis.
SchurExpansion plethysm_p_basis(const Partition& lambda, const Partition& mu, long guard = kDefaultPlethysmGuard);

// s_lambda[s_mu] in k variables (k = 0 picks |lambda| * height(mu), the
// largest height that can occur): substitute the monomials of the
// semistandard tableaux of shape mu into s_lambda, read off the monomial
// coefficients at partitions, and invert the Kostka matrix.
SchurExpansion plethysm_weyl_substitution(const Partition& lambda, const Partition& mu, std::size_t k = 0,
                                          long guard = kDefaultPlethysmGuard);

// Number of partitions of n into at most k parts.
Integer partitions_into_at_most(long n, long k);

// Hilbert quasi-polynomial of C[x_1..x_k]^{S_k}: period lcm(1..k), degree k-1,
// fitted to n = 1..horizon and checked on every sample.
quasipoly::QuasiPolynomial syminv_hilbert(long k, long horizon);

enum class StretchKind { LR, Kronecker2Row, Plethysm, SymInv, GpHilbert };

std::string_view stretch_kind_name(StretchKind kind) noexcept;

struct StretchSpec {
  StretchKind kind = StretchKind::LR;
  // LR: (alpha, beta, lambda); Kronecker2Row: (lambda, mu, pi);
  // Plethysm: (lambda, mu, pi) with mu not stretched; GpHilbert: (lambda).
  std::vector<Partition> labels;
  long k = 0;  // SymInv and GpHilbert
  long horizon = 6;
  std::size_t period_bound = 2;
  std::size_t degree_bound = 2;
  std::size_t threads = 1;
  std::size_t index_cap = 64;
  long guard = kDefaultPlethysmGuard;  // Plethysm: largest |n lambda| * |mu|
};

struct StretchResult {
  std::vector<Integer> samples;  // f(1), ..., f(horizon)
  quasipoly::QuasiPolynomial quasi_polynomial;
  exact::RationalFunction generating_function{exact::RationalPolynomial(), exact::RationalPolynomial::constant(1)};
  std::optional<quasipoly::PositiveForm> positive_form;
  std::size_t index = 0;
  std::optional<std::size_t> saturation_index;
  std::optional<std::size_t> positivity_index;
};

// The stretched value f(n) for the given spec.
Integer stretch_value(const StretchSpec& spec, long n);

StretchResult stretching_quasipolynomial(const StretchSpec& spec);

}  // namespace satip::multiplicity
