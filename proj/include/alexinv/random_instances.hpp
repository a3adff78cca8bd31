#pragma once

// Seeded generators for property checks. Ranges are taken by reduction modulo
// the span so a given seed produces the same instances on every platform.

#include <alexinv/alexander_matrix.hpp>
#include <alexinv/laurent.hpp>
#include <alexinv/presentation.hpp>
#include <alexinv/smith.hpp>

#include <cstdint>
#include <random>

namespace alexinv {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Up to max_terms terms, exponents in [-max_degree/2, max_degree - max_degree/2],
/// coefficients in [-coefficient_bound, coefficient_bound]. May be zero.
LaurentPoly random_laurent(Rng& rng, std::size_t arity, Exponent max_degree, std::size_t max_terms,
                           long coefficient_bound);

/// Nonzero polynomial with nonnegative exponents and total degree <= max_degree.
LaurentPoly random_polynomial(Rng& rng, std::size_t arity, Exponent max_degree, std::size_t max_terms,
                              long coefficient_bound);

/// Symmetric (fixed by the involution), degree span <= max_degree in each
/// variable, nonzero trace.
LaurentPoly random_symmetric_nonzero_trace(Rng& rng, std::size_t arity, Exponent max_degree);

/// One variable: a random unit times a symmetric polynomial of nonzero trace.
LaurentPoly random_unit_symmetric_nonzero_trace(Rng& rng, Exponent max_degree);

/// One variable, nonzero, failing unit symmetry or nonzero trace. Even
/// `variant` values give unit symmetric polynomials of trace zero, odd ones
/// polynomials that are not unit symmetric.
LaurentPoly random_b1_one_rejected(Rng& rng, Exponent max_degree, std::size_t variant);

AlexanderMatrix random_alexander_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t arity,
                                        Exponent max_degree);

/// Reduced word of length <= max_length in `generators` generators.
Word random_word(Rng& rng, std::size_t generators, std::size_t max_length);

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

/// Identity matrix after `steps` random row additions (determinant 1); steps
/// that would push an entry past entry_bound are skipped.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps, long entry_bound);

}  // namespace alexinv
