#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace plesken {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept canonical (reduced, positive denominator), so
/// equality is structural.
class Scalar
{
public:
	Scalar() = default;
	Scalar(long n) : re_(n) {}
	Scalar(mpq_class re, mpq_class im = 0);
	Scalar(long num, long den);

	static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

	/// Parses an exact rational "p", "-p", "p/q"; throws ParseError.
	static mpq_class parse_rational(std::string_view text);

	const mpq_class &re() const { return re_; }
	const mpq_class &im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }

	Scalar conj() const { return Scalar(re_, -im_); }

	Scalar &operator+=(const Scalar &o);
	Scalar &operator-=(const Scalar &o);
	Scalar &operator*=(const Scalar &o);
	Scalar &operator/=(const Scalar &o);

	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
	friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
	Scalar operator-() const { return Scalar(-re_, -im_); }

	friend bool operator==(const Scalar &a, const Scalar &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}
	friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

	/// Human-readable form such as "3/2", "-i" or "1/2+2i".
	std::string to_string() const;

private:
	mpq_class re_{0};
	mpq_class im_{0};
};

/// Fraction string "p/q" (or "p" when q = 1).
std::string rational_to_string(const mpq_class &q);

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace plesken
