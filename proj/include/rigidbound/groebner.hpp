#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigidbound/polynomial.hpp"

namespace rigidbound {

enum class Solvability { Solvable, Unsolvable, Indeterminate };
std::string to_string(Solvability s);

struct GroebnerOptions {
  /// Coefficient field: 0 means the rationals, otherwise a prime below 2^31.
  std::uint64_t prime = 0;
  /// S-pairs processed before giving up with Indeterminate.
  std::size_t max_pairs = 100000;
};

struct GroebnerResult {
  Solvability status = Solvability::Indeterminate;
  /// Minimal leading monomials of the basis (grevlex), when completed.
  std::vector<Exponents> leading_monomials;
  std::size_t pairs_processed = 0;
};

/// Buchberger over the chosen field: grevlex order, normal selection,
/// Gebauer-Moeller pair criteria, and an early stop once a constant shows up.
/// Unsolvable iff 1 lies in the ideal. Over F_p a coefficient whose
/// denominator vanishes mod p yields Indeterminate. At most 63 variables.
/// Exponents must be non-negative.
GroebnerResult groebner_basis(const std::vector<Polynomial>& equations, const GroebnerOptions& options);

/// Common zero over the algebraic closure of the field.
Solvability has_solution(const std::vector<Polynomial>& equations, const GroebnerOptions& options);

/// Common zero with every variable in `nonzero` nonzero, via an extra
/// variable w and the equation w * prod(nonzero) - 1.
Solvability has_solution_avoiding_zero(const std::vector<Polynomial>& equations,
                                       const std::vector<int>& nonzero, const GroebnerOptions& options);

/// Dimension of the quotient ring (solutions with multiplicity) when the
/// ideal is zero-dimensional; nullopt when positive-dimensional or the run
/// was indeterminate. 0 means no solutions.
std::optional<BigInt> solution_count(const std::vector<Polynomial>& equations, const GroebnerOptions& options);

bool is_prime(std::uint64_t n);
/// Uniform over primes in [2^30, 2^31).
std::uint64_t random_prime31(std::mt19937_64& rng);

}  // namespace rigidbound
