#include "catalog.hpp"

#include "plesken/error.hpp"
#include "plesken/expr.hpp"
#include "plesken/functor.hpp"

#include <doctest.h>

using namespace plesken;

namespace {

std::size_t object_of_order(const SubgroupCategory &c, std::size_t order)
{
	for (std::size_t i = 0; i < c.size(); ++i)
		if (c.objects[i]->order() == order)
			return i;
	FAIL("no object of order " << order);
	return 0;
}

} // namespace

TEST_CASE("object map")
{
	auto c3 = build_group("C3");
	CHECK(object_map(parse_element(c3, "e")).is_zero());
	CHECK(object_map(parse_element(c3, "a")) == parse_element(c3, "2*a - 2*a^2"));
	CHECK(object_map(parse_element(c3, "a"), ObjectMapConvention::pairwise) ==
	      parse_element(c3, "a - a^2"));

	auto k4 = build_group("K4");
	std::mt19937_64 rng(4);
	for (int n = 0; n < 20; ++n)
		CHECK(object_map(random_element(k4, rng)).is_zero());

	for (const auto &g : catalog::groups())
	{
		auto basis = canonical_basis(g);
		for (int n = 0; n < 30; ++n)
		{
			auto x = random_element(g, rng), y = random_element(g, rng);
			Scalar a = random_coefficient(rng), b = random_coefficient(rng);
			auto tx = object_map(x);
			CHECK_NOTHROW(reduce(basis, tx));
			CHECK(tx == Scalar(2) * object_map(x, ObjectMapConvention::pairwise));
			CHECK(object_map(a * x + b * y) == a * tx + b * object_map(y));
			// on L(G) the pairwise reading doubles: a_g - a_{g^-1} = 2 a_g
			auto h = embed(reduce(basis, tx));
			CHECK(object_map(h, ObjectMapConvention::pairwise) == Scalar(2) * h);
		}
	}

	CHECK(parse_convention("pairwise") == ObjectMapConvention::pairwise);
	CHECK(to_string(ObjectMapConvention::literal) == "literal");
	CHECK_THROWS_AS(parse_convention("double"), ParseError);
}

TEST_CASE("morphism map")
{
	auto c3 = build_group("C3");
	auto b = canonical_basis(c3);
	CHECK(morphism_map(lift_hom_bar(identity_hom(c3))) == HatMap::identity(b));
	CHECK(morphism_map(lift_hom_bar(trivial_hom(c3, c3))) == HatMap::zero(b, b));

	auto homs = enumerate_homs(c3, c3);
	REQUIRE(homs.size() == 3);
	for (const auto &f1 : homs)
		for (const auto &f2 : homs)
		{
			auto fb1 = lift_hom_bar(f1), fb2 = lift_hom_bar(f2);
			CHECK(morphism_map(compose(fb2, fb1)) ==
			      compose(morphism_map(fb2), morphism_map(fb1)));
		}
}

TEST_CASE("subgroup categories")
{
	auto c = build_subgroup_category(build_group("S3"));
	CHECK(c.size() == 6);
	for (std::size_t i = 0; i < c.size(); ++i)
		for (std::size_t j = 0; j < c.size(); ++j)
			for (const auto &f : c.homset(i, j))
				CHECK(validate_hom(f));
	CHECK_THROWS_AS(build_subgroup_category(build_group("S5")), SearchTooLarge);
}

TEST_CASE("functor laws")
{
	for (const char *spec : {"C3", "K4", "S3", "C6", "D4", "C2"})
	{
		CAPTURE(spec);
		auto c = build_subgroup_category(build_group(spec));
		auto r = check_functor_laws(c);
		CHECK(r.identity.size() == c.size());
		CHECK(r.identity_law_holds());
		CHECK(r.composition_law_holds());
		std::size_t pairs = 0;
		for (const auto &e : r.composition)
			pairs += e.pairs_checked;
		CHECK(pairs > 0);
	}

	// K4: every object has a zero Plesken algebra, so every image is zero
	auto k = build_subgroup_category(build_group("K4"));
	auto w = materialize_functor(k);
	for (const auto &m : w.morphism_map)
		CHECK(m.hat_is_zero);
	for (const auto &o : w.object_map)
		CHECK(o.plesken_dim == 0);
}

TEST_CASE("fullness")
{
	for (const char *spec : {"C3", "K4", "S3", "C6", "D4"})
	{
		CAPTURE(spec);
		auto c = build_subgroup_category(build_group(spec));
		auto r = check_full(c);
		CHECK(r.pairs.size() == c.size() * c.size());
		CHECK(r.full());
	}

	auto k = build_subgroup_category(build_group("K4"));
	auto rk = check_full(k);
	std::size_t top = object_of_order(k, 4);
	for (const auto &p : rk.pairs)
		if (p.i == top && p.j == top)
		{
			CHECK(p.target_maps == 1); // only the zero map
			CHECK(p.surjective);
		}

	auto s = build_subgroup_category(build_group("S3"));
	std::size_t a3 = object_of_order(s, 3), s3 = object_of_order(s, 6);
	auto rs = check_full(s);
	for (const auto &p : rs.pairs)
		if (p.i == a3 && p.j == s3)
		{
			// a -> e, a -> (123), a -> (132) give three distinct induced maps
			CHECK(p.target_maps == 3);
			CHECK(p.preimages.size() == 3);
			for (long pre : p.preimages)
			{
				REQUIRE(pre >= 0);
				const auto &f = s.homset(a3, s3)[static_cast<std::size_t>(pre)];
				CHECK(validate_hom(f));
			}
		}
}

TEST_CASE("faithfulness counterexamples")
{
	auto k = build_subgroup_category(build_group("K4"));
	auto wk = find_faithfulness_counterexample(k);
	REQUIRE_FALSE(wk.empty());
	std::size_t top = object_of_order(k, 4);
	bool found = false;
	for (const auto &w : wk)
	{
		CHECK(w.images_are_zero);
		const auto &homs = k.homset(w.i, w.j);
		auto a = homs[w.first].image, b = homs[w.second].image;
		bool id_and_trivial = (a == identity_hom(k.objects[top]).image &&
		                       b == trivial_hom(k.objects[top], k.objects[top]).image) ||
		                      (b == identity_hom(k.objects[top]).image &&
		                       a == trivial_hom(k.objects[top], k.objects[top]).image);
		found = found || (w.i == top && w.j == top && id_and_trivial);
	}
	CHECK(found);

	// C3: a -> a and a -> a^2 have different lifts (hat a -> hat a, hat a -> -hat a)
	auto c = build_subgroup_category(build_group("C3"));
	CHECK(find_faithfulness_counterexample(c).empty());

	// C2: L(C2) = 0, so the two endomorphisms of C2 collide
	auto c2 = build_subgroup_category(build_group("C2"));
	auto w2 = find_faithfulness_counterexample(c2);
	std::size_t expected = 0;
	for (const auto &h : c2.homsets)
		expected += h.size() * (h.size() - 1) / 2;
	CHECK(w2.size() == expected);
	CHECK(w2.size() == 1);

	// witnesses are ordered by object pair, then by image table
	for (std::size_t n = 1; n < wk.size(); ++n)
	{
		const auto &p = wk[n - 1], &q = wk[n];
		CHECK(std::tie(p.i, p.j, p.first, p.second) < std::tie(q.i, q.j, q.first, q.second));
	}
}

TEST_CASE("materialized functor is consistent")
{
	auto c = build_subgroup_category(build_group("D4"));
	auto w = materialize_functor(c);
	CHECK(w.object_map.size() == c.size());
	CHECK(w.morphism_map.size() == c.morphism_count());
	CHECK(w.laws.all_hold());
	CHECK(w.fullness.full());
	CHECK_FALSE(w.faithfulness_counterexamples.empty());
}
