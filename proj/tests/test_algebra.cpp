#include "catalog.hpp"

#include "plesken/algebra.hpp"
#include "plesken/error.hpp"
#include "plesken/expr.hpp"

#include <doctest.h>

using namespace plesken;

namespace {

AlgebraElement el(const GroupPtr &g, const char *text)
{
	return parse_element(g, text);
}

} // namespace

TEST_CASE("scalars are exact Gaussian rationals")
{
	Scalar half(1, 2);
	CHECK(half + half == Scalar(1));
	CHECK(Scalar(2, 4) == half);
	CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
	CHECK((Scalar(1) + Scalar::i()) * (Scalar(1) - Scalar::i()) == Scalar(2));
	CHECK(Scalar(1) / (Scalar(1) + Scalar::i()) == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
	CHECK((Scalar(3) - Scalar(3)).is_zero());
	CHECK(Scalar(-3, 2).to_string() == "-3/2");
	CHECK((Scalar(1, 2) + Scalar(0, 2) * Scalar::i()).to_string() == "1/2");
	CHECK(Scalar(mpq_class(1, 2), mpq_class(-3)).to_string() == "1/2-3i");
	CHECK((-Scalar::i()).to_string() == "-i");
	CHECK(Scalar::parse_rational("-6/4") == mpq_class(-3, 2));
	CHECK_THROWS_AS(Scalar::parse_rational("1/0"), ParseError);
	CHECK_THROWS_AS(Scalar::parse_rational("x"), ParseError);
	CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);

	CHECK(parse_scalar("1/2+3i") == Scalar(mpq_class(1, 2), mpq_class(3)));
	CHECK(parse_scalar("-i") == -Scalar::i());
	CHECK(parse_scalar("2*i") == Scalar(mpq_class(0), mpq_class(2)));
}

TEST_CASE("add and scale")
{
	auto c3 = build_group("C3");
	AlgebraElement zero(c3);
	auto x = el(c3, "2*e + a");
	CHECK(add(x, zero) == x);
	CHECK(add(el(c3, "e + a"), scale(Scalar(-1), el(c3, "e"))) == el(c3, "a"));
	CHECK(add(el(c3, "e + a"), scale(Scalar(-1), el(c3, "e"))).support_size() == 1);
	CHECK(add(el(c3, "2*e + a"), el(c3, "e + 3*a^2")) == el(c3, "3*e + a + 3*a^2"));

	CHECK(scale(Scalar(0), x).is_zero());
	CHECK(scale(Scalar(1), x) == x);
	CHECK(scale(Scalar(1, 2), el(c3, "2*e + 4*a")) == el(c3, "e + 2*a"));
}

TEST_CASE("no zero coefficient is ever stored")
{
	auto s3 = build_group("S3");
	std::mt19937_64 rng(7);
	for (int n = 0; n < 200; ++n)
	{
		auto x = random_element(s3, rng);
		auto y = random_element(s3, rng);
		for (const auto &z : {x + y, x - x, convolve(x, y), lie_bracket(x, y), scale(Scalar(0), x)})
			for (const auto &[g, k] : z.terms())
			{
				CHECK_FALSE(k.is_zero());
				CHECK(g < s3->order());
			}
	}
}

TEST_CASE("convolve")
{
	auto c3 = build_group("C3");
	auto x = el(c3, "2*e + (1/2)*a - i*a^2");
	CHECK(convolve(el(c3, "e"), x) == x);
	CHECK(convolve(el(c3, "e + a"), el(c3, "e + a^2")) == el(c3, "2*e + a + a^2"));

	auto s3 = build_group("S3");
	for (Element g = 0; g < s3->order(); ++g)
		CHECK(convolve(AlgebraElement::basis(s3, g), AlgebraElement::basis(s3, s3->inverse(g))) ==
		      AlgebraElement::basis(s3, s3->identity()));

	CHECK_THROWS_AS(convolve(x, el(s3, "e")), GroupMismatch);
	CHECK_THROWS_AS(add(x, el(s3, "e")), GroupMismatch);
}

TEST_CASE("lie_bracket")
{
	auto s3 = build_group("S3");
	auto t = el(s3, "(12)"), c = el(s3, "(123)");
	// (12)(123) = (23) and (123)(12) = (13)
	CHECK(lie_bracket(t, c) == el(s3, "(23) - (13)"));
	CHECK(lie_bracket(t, t).is_zero());

	std::mt19937_64 rng(3);
	for (const char *s : {"C3", "K4", "C6"})
	{
		auto g = build_group(s);
		for (int n = 0; n < 20; ++n)
			CHECK(lie_bracket(random_element(g, rng), random_element(g, rng)).is_zero());
	}
	CHECK_THROWS_AS(lie_bracket(t, el(build_group("C3"), "a")), GroupMismatch);
}

TEST_CASE("Lie algebra axioms on the catalog")
{
	std::mt19937_64 rng(2024);
	for (const auto &g : catalog::groups(24))
	{
		CAPTURE(g->name());
		for (int n = 0; n < 100; ++n)
		{
			auto x = random_element(g, rng), y = random_element(g, rng),
			     z = random_element(g, rng);
			Scalar a = random_coefficient(rng), b = random_coefficient(rng);
			CHECK(lie_bracket(a * x + b * y, z) == a * lie_bracket(x, z) + b * lie_bracket(y, z));
			CHECK(lie_bracket(x, a * y + b * z) == a * lie_bracket(x, y) + b * lie_bracket(x, z));
			CHECK(lie_bracket(x, x).is_zero());
			CHECK((lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
			       lie_bracket(z, lie_bracket(x, y)))
			          .is_zero());
			CHECK(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)));
		}
	}
}

TEST_CASE("random elements follow the sampling contract")
{
	auto s4 = build_group("S4");
	std::mt19937_64 a(11), b(11);
	for (int n = 0; n < 50; ++n)
	{
		auto x = random_element(s4, a);
		CHECK(x == random_element(s4, b));
		CHECK(x.support_size() <= 5);
	}
}

TEST_CASE("induced maps on group algebras")
{
	auto c2 = build_group("C2"), k4 = build_group("K4"), s3 = build_group("S3");

	auto id = lift_hom_bar(identity_hom(s3));
	std::mt19937_64 rng(5);
	for (int n = 0; n < 20; ++n)
	{
		auto x = random_element(s3, rng);
		CHECK(id(x) == x);
	}

	// trivial hom: every term collides on the identity
	auto triv = lift_hom_bar(trivial_hom(s3, k4));
	auto x = el(s3, "2*e + (1/2)*(12) - i*(123)");
	CHECK(triv(x) == AlgebraElement::basis(k4, k4->identity(), Scalar(5, 2) - Scalar::i()));

	for (const auto &f : enumerate_homs(c2, k4))
	{
		if (f.image[1] == k4->identity())
			continue;
		auto fb = lift_hom_bar(f);
		CHECK(fb(el(c2, "e + a")) == AlgebraElement::basis(k4, 0) + AlgebraElement::basis(k4, f.image[1]));
		auto u = el(c2, "2*e - a"), v = el(c2, "i*a");
		CHECK(fb(lie_bracket(u, v)).is_zero());
		CHECK(lie_bracket(fb(u), fb(v)).is_zero());
	}

	CHECK_THROWS_AS(lift_hom_bar(GroupHom{c2, k4, {0, 0, 0}}), InvalidHom);
	CHECK_THROWS_AS(lift_hom_bar(GroupHom{c2, k4, {1, 0}}), InvalidHom);
	CHECK_THROWS_AS(id(el(k4, "a")), GroupMismatch);
}

TEST_CASE("induced maps preserve brackets and compose")
{
	std::mt19937_64 rng(99);
	auto groups = catalog::groups(8);
	for (const auto &g : groups)
		for (const auto &h : groups)
			for (const auto &f : enumerate_homs(g, h))
			{
				auto fb = lift_hom_bar(f);
				for (int n = 0; n < 5; ++n)
				{
					auto x = random_element(g, rng), y = random_element(g, rng);
					Scalar a = random_coefficient(rng);
					REQUIRE(fb(lie_bracket(x, y)) == lie_bracket(fb(x), fb(y)));
					REQUIRE(fb(a * x + y) == a * fb(x) + fb(y));
				}
			}

	auto c6 = build_group("C6"), c3 = build_group("C3");
	for (const auto &f1 : enumerate_homs(c6, c3))
		for (const auto &f2 : enumerate_homs(c3, c6))
		{
			auto composite = compose(lift_hom_bar(f2), lift_hom_bar(f1));
			for (Element x = 0; x < c6->order(); ++x)
			{
				auto bx = AlgebraElement::basis(c6, x);
				CHECK(composite(bx) == lift_hom_bar(f2)(lift_hom_bar(f1)(bx)));
			}
		}
}

TEST_CASE("element text syntax")
{
	auto c3 = build_group("C3");
	auto x = el(c3, "2*e + (1/2)*a - i*a^2");
	CHECK(x.coefficient(0) == Scalar(2));
	CHECK(x.coefficient(1) == Scalar(1, 2));
	CHECK(x.coefficient(2) == -Scalar::i());
	CHECK(format_element(x) == "2*e + (1/2)*a - i*a^2");
	CHECK(el(c3, "0").is_zero());
	CHECK(el(c3, "a - a").is_zero());
	CHECK(el(c3, "3") == el(c3, "3*e"));
	CHECK(el(c3, "(1+i)*a") == (Scalar(1) + Scalar::i()) * el(c3, "a"));
	CHECK(el(c3, "2i*a") == Scalar(mpq_class(0), mpq_class(2)) * el(c3, "a"));
	CHECK(format_element(el(c3, "-a + (1-2i)*a^2")) == "-a + (1-2i)*a^2");

	auto s3 = build_group("S3");
	CHECK(el(s3, "(1/2)*(12) - (123)").coefficient(*s3->find("(12)")) == Scalar(1, 2));
	auto h3 = build_group("H3");
	CHECK(el(h3, "2*(1,0,1) + (0,0,0)").support_size() == 2);

	CHECK_THROWS_AS(el(c3, "b"), ParseError);
	CHECK_THROWS_AS(el(c3, "a^5"), ParseError);
	CHECK_THROWS_AS(el(c3, ""), ParseError);
	CHECK_THROWS_AS(el(c3, "a a"), ParseError);
	CHECK_THROWS_AS(el(c3, "2*"), ParseError);
	CHECK_THROWS_AS(el(c3, "(1/2*a"), ParseError);

	// text form round-trips
	std::mt19937_64 rng(1);
	for (const auto &g : catalog::groups())
		for (int n = 0; n < 20; ++n)
		{
			auto y = random_element(g, rng);
			CHECK(parse_element(g, format_element(y)) == y);
		}
}
