#include <alexinv/random_instances.hpp>

namespace alexinv {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

LaurentPoly random_laurent(Rng& rng, std::size_t arity, Exponent max_degree, std::size_t max_terms,
                           long coefficient_bound) {
  LaurentPoly f(arity);
  const std::size_t terms = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_terms)));
  const Exponent lo = -(max_degree / 2);
  ExponentVector e(arity);
  for (std::size_t k = 0; k < terms; ++k) {
    for (auto& x : e) x = uniform_int(rng, lo, lo + max_degree);
    f.add_term(e, uniform_int(rng, -coefficient_bound, coefficient_bound));
  }
  return f;
}

LaurentPoly random_polynomial(Rng& rng, std::size_t arity, Exponent max_degree, std::size_t max_terms,
                              long coefficient_bound) {
  while (true) {
    LaurentPoly f(arity);
    const std::size_t terms = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_terms)));
    ExponentVector e(arity);
    for (std::size_t k = 0; k < terms; ++k) {
      Exponent budget = uniform_int(rng, 0, max_degree);
      for (auto& x : e) {
        x = uniform_int(rng, 0, budget);
        budget -= x;
      }
      f.add_term(e, uniform_int(rng, -coefficient_bound, coefficient_bound));
    }
    if (!f.is_zero()) return f;
  }
}

LaurentPoly random_symmetric_nonzero_trace(Rng& rng, std::size_t arity, Exponent max_degree) {
  const Exponent half = max_degree / 2;
  LaurentPoly f(arity);
  const std::size_t pairs = static_cast<std::size_t>(uniform_int(rng, 0, 3));
  ExponentVector e(arity), minus(arity);
  for (std::size_t k = 0; k < pairs; ++k) {
    for (std::size_t i = 0; i < arity; ++i) {
      e[i] = uniform_int(rng, -half, half);
      minus[i] = -e[i];
    }
    const Integer c = uniform_int(rng, -4, 4);
    f.add_term(e, c);
    f.add_term(minus, c);
  }
  const ExponentVector origin(arity, 0);
  f.add_term(origin, uniform_int(rng, -5, 5));
  if (trace(f) == 0) f.add_term(origin, uniform_int(rng, 0, 1) == 0 ? -1 : 1);
  return f;
}

LaurentPoly random_unit_symmetric_nonzero_trace(Rng& rng, Exponent max_degree) {
  const LaurentPoly sym = random_symmetric_nonzero_trace(rng, 1, max_degree);
  const Integer sign = uniform_int(rng, 0, 1) == 0 ? -1 : 1;
  return sym.shifted({uniform_int(rng, -3, 3)}) * sign;
}

LaurentPoly random_b1_one_rejected(Rng& rng, Exponent max_degree, std::size_t variant) {
  if (variant % 2 == 0) {
    // Symmetric with the constant term chosen to cancel the trace.
    while (true) {
      LaurentPoly f = random_symmetric_nonzero_trace(rng, 1, max_degree);
      f.add_term({0}, -trace(f));
      if (f.is_zero()) continue;
      return f.shifted({uniform_int(rng, -3, 3)});
    }
  }
  while (true) {
    LaurentPoly f = random_laurent(rng, 1, max_degree, 5, 5);
    if (f.is_zero()) continue;
    if (!classify_symmetry(f).unit_symmetric()) return f;
  }
}

AlexanderMatrix random_alexander_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t arity,
                                        Exponent max_degree) {
  AlexanderMatrix m(rows, cols, arity);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (uniform_int(rng, 0, 3) != 0) m.set(i, j, random_laurent(rng, arity, max_degree, 3, 3));
  return m;
}

Word random_word(Rng& rng, std::size_t generators, std::size_t max_length) {
  const std::size_t length = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_length)));
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < length; ++k)
    letters.push_back(Letter{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(generators) - 1)),
                             uniform_int(rng, 0, 1) == 0 ? -1 : 1});
  return reduce_word(letters);
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps, long entry_bound) {
  IntMatrix m = identity_matrix(n);
  if (n < 2) {
    if (n == 1 && uniform_int(rng, 0, 1) == 0) m(0, 0) = -1;
    return m;
  }
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const long q = uniform_int(rng, 0, 1) == 0 ? -1 : 1;
    IntMatrix next = m;
    for (std::size_t c = 0; c < n; ++c) next(i, c) += q * m(j, c);
    bool within = true;
    for (std::size_t c = 0; c < n; ++c)
      if (abs_value(next(i, c)) > entry_bound) within = false;
    if (within) m = std::move(next);
  }
  return m;
}

}  // namespace alexinv
