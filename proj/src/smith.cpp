// Smith normal form by exact integer row/column reduction. Each step moves
// the smallest nonzero entry of the active block to the pivot position and
// clears its row and column by Euclidean reduction.

#include <alexinv/smith.hpp>

#include <stdexcept>

namespace alexinv {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

namespace {

// Row and column operations on the working matrix, mirrored into the
// optional transform matrices.
class Reducer {
 public:
  Reducer(IntMatrix& a, IntMatrix* u, IntMatrix* v, IntMatrix* v_inv)
      : a_(a), u_(u), v_(v), v_inv_(v_inv) {}

  // row[target] -= q * row[source]
  void row_axpy(std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_(source, j) != 0) a_(target, j) -= q * a_(source, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j)
        if ((*u_)(source, j) != 0) (*u_)(target, j) -= q * (*u_)(source, j);
  }

  // col[target] -= q * col[source]
  void col_axpy(std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (a_(i, source) != 0) a_(i, target) -= q * a_(i, source);
    if (v_)
      for (std::size_t i = 0; i < v_->rows(); ++i)
        if ((*v_)(i, source) != 0) (*v_)(i, target) -= q * (*v_)(i, source);
    // Inverse transform: row[source] += q * row[target].
    if (v_inv_)
      for (std::size_t j = 0; j < v_inv_->cols(); ++j)
        if ((*v_inv_)(target, j) != 0) (*v_inv_)(source, j) += q * (*v_inv_)(target, j);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    if (u_) u_->swap_rows(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    if (v_) v_->swap_cols(i, j);
    if (v_inv_) v_inv_->swap_rows(i, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) (*u_)(i, j) = -(*u_)(i, j);
  }

  void run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!move_smallest_to_pivot(t)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a_(i, t) == 0) continue;
          row_axpy(i, t, floor_quotient(a_(i, t), a_(t, t)));
          if (a_(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_(t, j) == 0) continue;
          col_axpy(j, t, floor_quotient(a_(t, j), a_(t, t)));
          if (a_(t, j) != 0) dirty = true;
        }
        if (dirty) {
          move_smallest_to_pivot(t, /*cross_only=*/true);
          continue;
        }
        // Row and column are clear; enforce divisibility of the rest.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
              row_axpy(t, i, -1);  // row t += row i
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
  }

 private:
  static Integer floor_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  // Brings the smallest nonzero |entry| of the block [t.., t..] (or only of
  // row t and column t) to (t, t). Returns false when the block is zero.
  bool move_smallest_to_pivot(std::size_t t, bool cross_only = false) {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t bi = m, bj = n;
    Integer best = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (a_(i, j) == 0) return;
      if (bi == m || abs_value(a_(i, j)) < best) {
        best = abs_value(a_(i, j));
        bi = i;
        bj = j;
      }
    };
    if (cross_only) {
      for (std::size_t i = t; i < m; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < n; ++j) consider(t, j);
    } else {
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) consider(i, j);
    }
    if (bi == m) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  IntMatrix& a_;
  IntMatrix* u_;
  IntMatrix* v_;
  IntMatrix* v_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition s{identity_matrix(a.rows()), a, identity_matrix(a.cols()),
                       identity_matrix(a.cols())};
  Reducer(s.D, &s.U, &s.V, &s.V_inverse).run();
  return s;
}

std::vector<Integer> smith_diagonal(IntMatrix a) {
  Reducer(a, nullptr, nullptr, nullptr).run();
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) d.push_back(a(i, i));
  return d;
}

std::size_t rank_mod_p(const IntMatrix& a, unsigned p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be at least 2");
  const std::int64_t mod = p;
  Matrix<std::int64_t> m(a.rows(), a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = floor_mod(a(i, j), Integer(p)).get_si();

  auto inverse = [mod](std::int64_t x) {
    std::int64_t result = 1, base = x % mod, e = mod - 2;
    while (e > 0) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    const std::int64_t inv = inverse(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const std::int64_t f = m(i, col) * inv % mod;
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = ((m(i, j) - f * m(rank, j)) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace alexinv
