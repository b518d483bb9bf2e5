#include "plesken/scalar.hpp"

#include "plesken/error.hpp"

#include <cctype>
#include <ostream>

namespace plesken {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
	re_.canonicalize();
	im_.canonicalize();
}

Scalar::Scalar(long num, long den)
{
	if (den == 0)
		throw ParseError("zero denominator");
	re_ = mpq_class(num, den);
	re_.canonicalize();
}

mpq_class Scalar::parse_rational(std::string_view text)
{
	auto digits = [](std::string_view s) {
		if (s.empty())
			return false;
		for (char c : s)
			if (!std::isdigit(static_cast<unsigned char>(c)))
				return false;
		return true;
	};

	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+'))
	{
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	auto slash = body.find('/');
	std::string_view num = body.substr(0, slash);
	std::string_view den =
	    slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
	if (!digits(num) || !digits(den))
		throw ParseError("not a rational: '" + std::string(text) + "'");

	mpz_class n(std::string(num), 10);
	mpz_class d(std::string(den), 10);
	if (d == 0)
		throw ParseError("zero denominator in '" + std::string(text) + "'");
	mpq_class q(n, d);
	q.canonicalize();
	return negative ? mpq_class(-q) : q;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
	mpq_class re = re_ * o.re_ - im_ * o.im_;
	mpq_class im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
	mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
	if (sgn(norm) == 0)
		throw std::domain_error("Scalar division by zero");
	mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
	mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

std::string rational_to_string(const mpq_class &q)
{
	return q.get_str(10);
}

std::string Scalar::to_string() const
{
	if (is_real())
		return rational_to_string(re_);

	std::string imag;
	if (im_ == 1)
		imag = "i";
	else if (im_ == -1)
		imag = "-i";
	else
		imag = rational_to_string(im_) + "i";

	if (sgn(re_) == 0)
		return imag;
	if (imag.front() != '-')
		imag.insert(imag.begin(), '+');
	return rational_to_string(re_) + imag;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
	return os << s.to_string();
}

} // namespace plesken
