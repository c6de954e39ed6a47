#ifndef CARTAN_LINALG_HPP
#define CARTAN_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "cartan/rational.hpp"

namespace cartan {

/// Sparse vector: (column, value) pairs, strictly ascending columns, no zeros.
template <class F>
using SparseVec = std::vector<std::pair<std::int32_t, typename F::Elt>>;

using QVec = SparseVec<RationalField>;

namespace detail {

inline void normalize_row(const RationalField&, QVec& row) {
  // scale to a primitive integer vector with positive leading entry
  if (row.empty()) return;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (auto& [c, v] : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  for (auto& [c, v] : row) {
    mpz_class num = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
  }
  if (sgn(row.front().second) < 0) num_gcd = -num_gcd;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (auto& [c, v] : row) {
    v *= scale;
    v.canonicalize();
  }
}

inline void normalize_row(const PrimeField& f, SparseVec<PrimeField>& row) {
  // make the leading entry 1 so later reductions need no inversion
  if (row.empty()) return;
  auto s = f.inv(row.front().second);
  for (auto& [c, v] : row) v = f.mul(v, s);
}

}  // namespace detail

/// Streamed row-echelon elimination over an exact field. Rows are added one
/// at a time; dependent rows reduce to zero and are discarded. Pivot columns
/// are chosen deterministically (smallest column of the reduced row).
template <class F>
class Eliminator {
 public:
  using Elt = typename F::Elt;
  using Row = SparseVec<F>;

  Eliminator(const F& field, int ncols, int pivot_limit = -1)
      : f_(field),
        ncols_(ncols),
        pivot_limit_(pivot_limit < 0 ? ncols : pivot_limit),
        pivot_of_col_(ncols, -1),
        work_(ncols, field.zero()),
        in_heap_(ncols, 0) {}

  int ncols() const { return ncols_; }
  int rank() const { return int(rows_.size()); }
  long long nullity() const { return (long long)(pivot_limit_) - rank(); }
  const std::vector<Row>& rows() const { return rows_; }
  int pivot_of(int col) const { return pivot_of_col_[col]; }

  static constexpr int kReducedToZero = -1;
  /// Nonzero remainder supported entirely on columns >= pivot_limit; the row
  /// is discarded. Only possible when a pivot limit is in use.
  static constexpr int kNoAllowedPivot = -2;

  /// Returns the pivot column if the row was independent, kReducedToZero or
  /// kNoAllowedPivot otherwise.
  int add_row(const Row& row) {
    Row rem = reduce_impl(row, /*stop_at_free=*/true);
    if (rem.empty()) return kReducedToZero;
    if (rem.front().first >= pivot_limit_) return kNoAllowedPivot;
    detail::normalize_row(f_, rem);
    int piv = rem.front().first;
    pivot_of_col_[piv] = int(rows_.size());
    rows_.push_back(std::move(rem));
    return piv;
  }

  /// Fully reduce a vector against the current rows; the remainder is empty
  /// iff the vector lies in their span.
  Row reduce(const Row& row) { return reduce_impl(row, /*stop_at_free=*/false); }

  /// Basis of the kernel of the matrix whose rows were added, one vector per
  /// pivot-free column, that column's entry normalized to 1.
  std::vector<Row> nullspace() const {
    std::vector<Row> basis;
    std::vector<int> pivcols;
    for (int c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] >= 0) pivcols.push_back(c);
    for (int free = 0; free < pivot_limit_; ++free) {
      if (pivot_of_col_[free] >= 0) continue;
      std::vector<Elt> x(ncols_, f_.zero());
      x[free] = f_.one();
      for (auto it = pivcols.rbegin(); it != pivcols.rend(); ++it) {
        const Row& r = rows_[pivot_of_col_[*it]];
        Elt s = f_.zero();
        for (std::size_t j = 1; j < r.size(); ++j)
          if (!f_.is_zero(x[r[j].first])) s = f_.add(s, f_.mul(r[j].second, x[r[j].first]));
        x[*it] = f_.is_zero(s) ? f_.zero() : f_.neg(f_.div(s, r.front().second));
      }
      Row v;
      for (int c = 0; c < ncols_; ++c)
        if (!f_.is_zero(x[c])) v.emplace_back(c, x[c]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  Row reduce_impl(const Row& row, bool stop_at_free) {
    heap_ = {};
    for (const auto& [c, v] : row) {
      if (f_.is_zero(v)) continue;
      if (!in_heap_[c]) {
        in_heap_[c] = 1;
        heap_.push(c);
      }
      work_[c] = f_.add(work_[c], v);
    }
    Row rem;
    while (!heap_.empty()) {
      int c = heap_.top();
      heap_.pop();
      in_heap_[c] = 0;
      if (f_.is_zero(work_[c])) {
        work_[c] = f_.zero();
        continue;
      }
      int pr = pivot_of_col_[c];
      if (pr < 0) {
        rem.emplace_back(c, work_[c]);
        work_[c] = f_.zero();
        if (stop_at_free && c < pivot_limit_) {
          // gather the unreduced tail and stop; row echelon form only needs
          // the leading column to be pivot-free
          while (!heap_.empty()) {
            int t = heap_.top();
            heap_.pop();
            in_heap_[t] = 0;
            if (!f_.is_zero(work_[t])) rem.emplace_back(t, work_[t]);
            work_[t] = f_.zero();
          }
          return rem;
        }
        continue;
      }
      const Row& prow = rows_[pr];
      Elt factor = f_.div(work_[c], prow.front().second);
      work_[c] = f_.zero();
      for (std::size_t j = 1; j < prow.size(); ++j) {
        int col = prow[j].first;
        work_[col] = f_.sub(work_[col], f_.mul(factor, prow[j].second));
        if (!in_heap_[col]) {
          in_heap_[col] = 1;
          heap_.push(col);
        }
      }
    }
    return rem;
  }

  const F& f_;
  int ncols_;
  int pivot_limit_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_col_;
  std::vector<Elt> work_;
  std::vector<char> in_heap_;
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap_;
};

template <class F>
int rank_of(const F& f, int ncols, const std::vector<SparseVec<F>>& rows) {
  Eliminator<F> e(f, ncols);
  for (const auto& r : rows) e.add_row(r);
  return e.rank();
}

template <class F>
bool in_span(const F& f, int ncols, const std::vector<SparseVec<F>>& vectors,
             const SparseVec<F>& v) {
  Eliminator<F> e(f, ncols);
  for (const auto& r : vectors) e.add_row(r);
  return e.reduce(v).empty();
}

/// Exact residual check M*v for a row-streamed matrix.
template <class F>
class ResidualAccumulator {
 public:
  ResidualAccumulator(const F& f, const std::vector<typename F::Elt>& v) : f_(f), v_(v) {}
  bool all_zero() const { return all_zero_; }
  void row(const SparseVec<F>& r) {
    typename F::Elt s = f_.zero();
    for (const auto& [c, val] : r) s = f_.add(s, f_.mul(val, v_[c]));
    if (!f_.is_zero(s)) all_zero_ = false;
  }

 private:
  const F& f_;
  const std::vector<typename F::Elt>& v_;
  bool all_zero_ = true;
};

}  // namespace cartan

#endif
