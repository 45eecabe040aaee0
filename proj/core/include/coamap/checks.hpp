#ifndef COAMAP_CHECKS_HPP
#define COAMAP_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coamap/circuits.hpp"

namespace coamap {

// Seeded property suites.  Every suite is deterministic for a fixed
// seed; the CLI `check` command and the acceptance suite both run these.

struct SuiteResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  std::string note;  // first failure diagnostic, if any

  bool passed() const { return failures == 0; }
};

using Rng = std::mt19937_64;

/// Random exact polynomial: N distinct exponents with entries in
/// [-span, span], unit moduli, angles p/q*pi with q <= max_den.
LaurentPolynomial random_exact_polynomial(Rng& rng, int n, int num_terms, int span = 4,
                                          int max_den = 64);

/// Random exact torus point with denominators <= max_den.
TorusPoint random_exact_theta(Rng& rng, int n, int max_den = 64);

struct RandomCircuit {
  LaurentPolynomial f;
  PointConfiguration a;
  DualMatrix b;
};

/// Random circuit with g_A = 1 and generic exact coefficient angles
/// (resampled until the genericity checker accepts).  With
/// `balanced_dual`, only circuits whose dual has a two-element sign
/// class are drawn; those are the ones the binomial base-point
/// construction can cover completely.
RandomCircuit random_circuit(Rng& rng, int n, int span = 4, int max_den = 64,
                             bool balanced_dual = false);

/// Random integer unimodular matrix (product of elementary operations).
IntMat random_unimodular(Rng& rng, int n, int ops = 8);

/// closure(LA') equals the union over trinomials (exact, every trial).
SuiteResult check_trinomial_union(std::uint64_t seed, long trials);

/// p_vector windings are exact integers and reproduce the order value.
SuiteResult check_p_integrality(std::uint64_t seed, long trials);

/// Membership predicates are invariant under monomial multiplication.
SuiteResult check_monomial_invariance(std::uint64_t seed, long trials);

/// Membership transforms along (T^{-1})^t under monomial changes of
/// variables, for `transforms` random unimodular T.
SuiteResult check_transform_equivariance(std::uint64_t seed, long transforms,
                                         long thetas_per_transform);

/// |enumerate_orders| equals the circuit count on random generic
/// circuits with n in {1, 2, 3}.
SuiteResult check_circuit_consistency(std::uint64_t seed, long trials);

/// cord(witness_theta(p)) == p for every enumerated order of the same
/// circuits, witnesses pairwise torus-distinct and shell-separated.
SuiteResult check_witness_roundtrip(std::uint64_t seed, long trials);

/// Base points of random generic n = 2 circuits: count = n!Vol, all in
/// the closed complement, orders biject onto enumerate_orders.
SuiteResult check_base_points(std::uint64_t seed, long trials);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace coamap

#endif
