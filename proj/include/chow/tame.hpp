#pragma once

#include <cstddef>
#include <vector>

#include "chow/cycle.hpp"
#include "chow/factored.hpp"
#include "chow/primes.hpp"

namespace chow {

/// Residue of the tame symbol {alpha, beta} at the height-one prime (x_var).
struct TameEntry {
  HeightOnePrime prime;
  std::size_t var;
  FracElement residue;  // in the function field of A/(x_var)
};

struct TameOutput {
  std::vector<TameEntry> entries;  // ordered by variable index
};

/// For each variable x_k with (a, b) = (ord alpha, ord beta) != (0, 0):
/// (-1)^{ab} alpha^b / beta^a with x_k set to 0. alpha and beta must be
/// monomials up to a constant; other factors are rejected with
/// UnsupportedSetting since their primes have no coordinate residue field.
TameOutput tame(const FracElement& alpha, const FracElement& beta);

/// sum over the entries of div_{A/(x_k)}(residue), as a cycle of grade n - 2
/// on coordinate primes containing x_k. The Gersten complex predicts zero.
Cycle gersten_compose(const FracElement& alpha, const FracElement& beta);

}  // namespace chow
