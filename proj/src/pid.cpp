#include "chow/pid.hpp"

#include <algorithm>

#include "chow/errors.hpp"

namespace chow {

namespace {

using Grid = std::vector<std::vector<Poly>>;

Grid to_grid(const PIDMatrix& m) {
  Grid g(m.rows(), std::vector<Poly>(m.cols(), Poly(m.context())));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j);
  }
  return g;
}

// p / t^k, exact.
Poly strip_t(const Poly& p, int k) {
  if (k == 0) return p;
  std::vector<Poly::Term> terms;
  for (const auto& [mono, c] : p.terms()) {
    terms.emplace_back(Mono{mono[0] - k}, c);
  }
  return Poly::from_terms(p.context(), std::move(terms));
}

}  // namespace

PIDMatrix::PIDMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ctx_)) {
  if (ctx_->size() != 1) throw DomainError("PID matrices live over a one-variable context");
}

PIDMatrix PIDMatrix::from_rows(ContextPtr ctx, const std::vector<std::vector<Poly>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  PIDMatrix m(std::move(ctx), rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

PIDMatrix PIDMatrix::diagonal(ContextPtr ctx, const std::vector<Poly>& entries) {
  PIDMatrix m(std::move(ctx), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

void PIDMatrix::set(std::size_t i, std::size_t j, Poly p) {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  if (*p.context() != *ctx_) throw ContextMismatch("matrix entry over a different context");
  entries_[i * cols_ + j] = std::move(p);
}

int t_order(const Poly& p) {
  if (p.is_zero()) return -1;
  // Terms are in descending degree, so the last one has the lowest.
  return p.terms().back().first[0];
}

LocalStructure local_structure(const PIDMatrix& m) {
  Grid a = to_grid(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const ContextPtr& ctx = m.context();
  LocalStructure out;
  std::size_t pivots = 0;
  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    std::size_t pi = rows;
    std::size_t pj = cols;
    int best = -1;
    for (std::size_t i = s; i < rows; ++i) {
      for (std::size_t j = s; j < cols; ++j) {
        int o = t_order(a[i][j]);
        if (o >= 0 && (best < 0 || o < best)) {
          best = o;
          pi = i;
          pj = j;
        }
      }
    }
    if (best < 0) break;
    std::swap(a[s], a[pi]);
    for (auto& row : a) std::swap(row[s], row[pj]);

    const Poly unit = strip_t(a[s][s], best);
    for (std::size_t i = s + 1; i < rows; ++i) {
      int o = t_order(a[i][s]);
      if (o < 0) continue;
      Poly factor = strip_t(a[i][s], o).times_mono(Mono{o - best});
      for (std::size_t j = s; j < cols; ++j) a[i][j] = unit * a[i][j] - factor * a[s][j];
    }
    for (std::size_t j = s + 1; j < cols; ++j) {
      int o = t_order(a[s][j]);
      if (o < 0) continue;
      Poly factor = strip_t(a[s][j], o).times_mono(Mono{o - best});
      for (std::size_t i = s; i < rows; ++i) a[i][j] = unit * a[i][j] - factor * a[i][s];
    }
    ++pivots;
    if (best > 0) out.torsion_orders.push_back(best);
  }
  (void)ctx;
  out.free_rank = rows - pivots;
  std::sort(out.torsion_orders.begin(), out.torsion_orders.end());
  return out;
}

Length pid_coker_length(const PIDMatrix& m) {
  LocalStructure s = local_structure(m);
  if (s.free_rank > 0) return Length::infinite();
  std::int64_t total = 0;
  for (int o : s.torsion_orders) total += o;
  return Length::finite(total);
}

std::size_t generic_rank(const PIDMatrix& m) {
  Grid a = to_grid(m);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col].is_zero()) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col].is_zero()) continue;
      Poly p = a[rank][col];
      Poly e = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] = p * a[i][j] - e * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Poly determinant(const PIDMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const ContextPtr& ctx = m.context();
  if (n == 0) return Poly::constant(ctx, 1);
  Grid a = to_grid(m);
  Poly prev = Poly::constant(ctx, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Poly(ctx);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

ChiReport check_chi(const PIDMatrix& m, const Poly& x) {
  if (x.is_zero()) throw DomainError("chi needs a nonzero element");
  const std::size_t rows = m.rows();
  PIDMatrix aug(m.context(), rows, m.cols() + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols() + i, x);
  }
  ChiReport r;
  r.quotient_length = pid_coker_length(aug);
  r.order_x = t_order(x);
  // M = free part + sum of A/(t^e); x kills a copy of A/(t^min(e, ord x)) in each.
  std::int64_t kernel = 0;
  for (int e : local_structure(m).torsion_orders) kernel += std::min(e, r.order_x);
  r.kernel_length = Length::finite(kernel);
  r.rank = rows - generic_rank(m);
  r.holds = r.quotient_length.is_finite() &&
            r.quotient_length.value() - kernel ==
                static_cast<std::int64_t>(r.order_x) * static_cast<std::int64_t>(r.rank);
  return r;
}

DetLengthReport check_det_length(const PIDMatrix& phi, const Poly& a, const Poly& b) {
  if (phi.rows() != phi.cols()) throw DomainError("determinant-length check needs a square matrix");
  DetLengthReport r{determinant(phi), Length::infinite()};
  if (r.det.is_zero()) throw DomainError("endomorphism with zero determinant");
  if (b.is_zero()) throw DomainError("zero denominator");
  if (a != b * r.det) throw PreconditionError("a/b is not the determinant");
  r.coker_length = pid_coker_length(phi);
  r.order_a = t_order(a);
  r.order_b = t_order(b);
  r.holds = r.coker_length.is_finite() && r.coker_length.value() == r.order_a - r.order_b;
  return r;
}

}  // namespace chow
