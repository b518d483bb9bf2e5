#pragma once

#include <array>
#include <cstdint>

namespace plesken {

/// 3x3 matrix with entries in Z_p, each stored as a residue in [0, p).
using ModMatrix3 = std::array<std::array<std::int64_t, 3>, 3>;

/// The unitriangular matrix [[1,a,b],[0,1,c],[0,0,1]] mod p.
ModMatrix3 unitriangular(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c);

ModMatrix3 mat_mul(const ModMatrix3 &x, const ModMatrix3 &y, std::int64_t p);
ModMatrix3 mat_sub(const ModMatrix3 &x, const ModMatrix3 &y, std::int64_t p);

/// Inverse of a determinant-one matrix over Z_p via its adjugate.
ModMatrix3 mat_inverse_unimodular(const ModMatrix3 &x, std::int64_t p);

/// A - A^{-1} computed in the matrix ring.
ModMatrix3 heisenberg_hat_direct(std::int64_t p, std::int64_t a, std::int64_t b,
                                 std::int64_t c);

/// [[0, 2a, 2b - ac], [0, 0, 2c], [0, 0, 0]] mod p, cross-checked against
/// heisenberg_hat_direct. Throws InvalidPrime unless p is an odd prime.
ModMatrix3 heisenberg_hat_closed_form(std::int64_t p, std::int64_t a, std::int64_t b,
                                      std::int64_t c);

} // namespace plesken
