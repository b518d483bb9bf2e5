#include "plesken/heisenberg.hpp"

#include "plesken/error.hpp"
#include "plesken/group.hpp"

#include <string>

namespace plesken {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p)
{
	std::int64_t r = x % p;
	return r < 0 ? r + p : r;
}

void require_odd_prime(std::int64_t p)
{
	if (p < 3 || p > 1'000'000 || !is_prime(static_cast<unsigned>(p)))
		throw InvalidPrime(std::to_string(p) + " is not an odd prime");
}

} // namespace

ModMatrix3 unitriangular(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c)
{
	return {{{1, mod(a, p), mod(b, p)}, {0, 1, mod(c, p)}, {0, 0, 1}}};
}

ModMatrix3 mat_mul(const ModMatrix3 &x, const ModMatrix3 &y, std::int64_t p)
{
	ModMatrix3 out{};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
		{
			std::int64_t s = 0;
			for (int k = 0; k < 3; ++k)
				s = mod(s + x[i][k] * y[k][j], p);
			out[i][j] = s;
		}
	return out;
}

ModMatrix3 mat_sub(const ModMatrix3 &x, const ModMatrix3 &y, std::int64_t p)
{
	ModMatrix3 out{};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			out[i][j] = mod(x[i][j] - y[i][j], p);
	return out;
}

ModMatrix3 mat_inverse_unimodular(const ModMatrix3 &x, std::int64_t p)
{
	// adj(x)[i][j] = cofactor(j, i)
	ModMatrix3 out{};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
		{
			int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
			int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
			out[i][j] = mod(x[r0][c0] * x[r1][c1] - x[r0][c1] * x[r1][c0], p);
		}
	ModMatrix3 check = mat_mul(x, out, p);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			if (check[i][j] != (i == j ? 1 : 0))
				throw InvalidGroup("matrix does not have determinant one");
	return out;
}

ModMatrix3 heisenberg_hat_direct(std::int64_t p, std::int64_t a, std::int64_t b,
                                 std::int64_t c)
{
	require_odd_prime(p);
	ModMatrix3 m = unitriangular(p, a, b, c);
	return mat_sub(m, mat_inverse_unimodular(m, p), p);
}

ModMatrix3 heisenberg_hat_closed_form(std::int64_t p, std::int64_t a, std::int64_t b,
                                      std::int64_t c)
{
	require_odd_prime(p);
	a = mod(a, p);
	b = mod(b, p);
	c = mod(c, p);
	ModMatrix3 closed{{{0, mod(2 * a, p), mod(2 * b - a * c, p)},
	                   {0, 0, mod(2 * c, p)},
	                   {0, 0, 0}}};
	if (closed != heisenberg_hat_direct(p, a, b, c))
		throw InvalidGroup("closed form of A - A^-1 disagrees with the matrix ring at (" +
		                   std::to_string(a) + "," + std::to_string(b) + "," +
		                   std::to_string(c) + ") mod " + std::to_string(p));
	return closed;
}

} // namespace plesken
