#pragma once

#include <cstddef>
#include <vector>

#include "chow/length.hpp"
#include "chow/poly.hpp"

namespace chow {

// Finitely generated modules over the discrete valuation ring Q[t]_(t).
// A matrix with R rows and C columns presents M = Q[t]^R / (column span).

class PIDMatrix {
 public:
  /// Zero matrix over a one-variable context.
  PIDMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
  static PIDMatrix from_rows(ContextPtr ctx, const std::vector<std::vector<Poly>>& rows);
  static PIDMatrix diagonal(ContextPtr ctx, const std::vector<Poly>& entries);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, Poly p);

 private:
  ContextPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Order of vanishing at t = 0; -1 for the zero polynomial.
int t_order(const Poly& p);

/// Local Smith form data: positive orders of the nonunit invariant factors,
/// and the rank of the free part of the cokernel.
struct LocalStructure {
  std::vector<int> torsion_orders;
  std::size_t free_rank = 0;
};
LocalStructure local_structure(const PIDMatrix& m);

/// Sum of t-orders of the invariant factors; infinite when the cokernel has
/// a free part.
Length pid_coker_length(const PIDMatrix& m);

/// Rank over the fraction field Q(t) (fraction-free elimination).
std::size_t generic_rank(const PIDMatrix& m);

/// Determinant of a square matrix (Bareiss elimination).
Poly determinant(const PIDMatrix& m);

/// chi(M) = l(M/xM) - l(_xM) against l(A/xA) * rank(M).
struct ChiReport {
  Length quotient_length = Length::infinite();  // l(M / xM)
  Length kernel_length = Length::infinite();    // l(_x M)
  std::size_t rank = 0;    // rank(M)
  int order_x = 0;         // l(A / xA)
  bool holds = false;
};
/// Throws DomainError for x = 0.
ChiReport check_chi(const PIDMatrix& m, const Poly& x);

/// l(Coker phi) against l(A/aA) - l(A/bA) where a/b = det(phi).
struct DetLengthReport {
  Poly det;
  Length coker_length = Length::infinite();
  int order_a = 0;
  int order_b = 0;
  bool holds = false;
};
/// Throws DomainError for non-square phi or det(phi) = 0, and
/// PreconditionError when a / b differs from det(phi).
DetLengthReport check_det_length(const PIDMatrix& phi, const Poly& a, const Poly& b);

}  // namespace chow
