#include "plesken/algebra.hpp"

#include "plesken/error.hpp"

namespace plesken {

AlgebraElement::AlgebraElement(GroupPtr group) : group_(std::move(group))
{
	if (!group_)
		throw GroupMismatch("algebra element without a group");
}

AlgebraElement::AlgebraElement(GroupPtr group, Terms terms)
    : AlgebraElement(std::move(group))
{
	for (auto &[g, k] : terms)
	{
		if (g >= group_->order())
			throw IndexOutOfRange("term index " + std::to_string(g) + " in " +
			                      group_->name());
		if (!k.is_zero())
			terms_.emplace(g, std::move(k));
	}
}

AlgebraElement AlgebraElement::basis(GroupPtr group, Element g, Scalar k)
{
	AlgebraElement out(std::move(group));
	out.add_term(g, k);
	return out;
}

Scalar AlgebraElement::coefficient(Element g) const
{
	auto it = terms_.find(g);
	return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::add_term(Element g, const Scalar &k)
{
	if (g >= group_->order())
		throw IndexOutOfRange("term index " + std::to_string(g) + " in " + group_->name());
	if (k.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(g, k);
	if (!inserted)
	{
		it->second += k;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o)
{
	require_same_group(*this, o);
	for (const auto &[g, k] : o.terms_)
		add_term(g, k);
	return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o)
{
	require_same_group(*this, o);
	for (const auto &[g, k] : o.terms_)
		add_term(g, -k);
	return *this;
}

AlgebraElement AlgebraElement::operator-() const
{
	AlgebraElement out(group_);
	for (const auto &[g, k] : terms_)
		out.terms_.emplace(g, -k);
	return out;
}

AlgebraElement operator*(const Scalar &k, const AlgebraElement &x)
{
	AlgebraElement out(x.group_);
	if (k.is_zero())
		return out;
	for (const auto &[g, c] : x.terms_)
		out.terms_.emplace(g, k * c);
	return out;
}

AlgebraElement operator*(const AlgebraElement &x, const AlgebraElement &y)
{
	require_same_group(x, y);
	const FiniteGroup &group = *x.group_;
	AlgebraElement out(x.group_);
	for (const auto &[g, a] : x.terms_)
		for (const auto &[h, b] : y.terms_)
			out.add_term(group.mul_unchecked(g, h), a * b);
	return out;
}

bool operator==(const AlgebraElement &a, const AlgebraElement &b)
{
	return same_group(a.group_, b.group_) && a.terms_ == b.terms_;
}

void require_same_group(const AlgebraElement &x, const AlgebraElement &y)
{
	if (!same_group(x.group(), y.group()))
		throw GroupMismatch("elements of " + x.group()->name() + " and " +
		                    y.group()->name());
}

AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y)
{
	return x + y;
}

AlgebraElement scale(const Scalar &k, const AlgebraElement &x)
{
	return k * x;
}

AlgebraElement convolve(const AlgebraElement &x, const AlgebraElement &y)
{
	return x * y;
}

AlgebraElement lie_bracket(const AlgebraElement &x, const AlgebraElement &y)
{
	return x * y - y * x;
}

InducedMap::InducedMap(GroupHom f) : hom_(std::move(f))
{
	require_hom(hom_);
}

AlgebraElement InducedMap::operator()(const AlgebraElement &x) const
{
	if (!same_group(x.group(), hom_.domain))
		throw GroupMismatch("induced map on " + hom_.domain->name() +
		                    " applied to element of " + x.group()->name());
	AlgebraElement out(hom_.codomain);
	for (const auto &[g, k] : x.terms())
		out.add_term(hom_.image[g], k);
	return out;
}

bool operator==(const InducedMap &a, const InducedMap &b)
{
	return same_group(a.domain(), b.domain()) && same_group(a.codomain(), b.codomain()) &&
	       a.hom_.image == b.hom_.image;
}

InducedMap lift_hom_bar(const GroupHom &f)
{
	return InducedMap(f);
}

InducedMap compose(const InducedMap &f2, const InducedMap &f1)
{
	return InducedMap(compose_homs(f2.hom(), f1.hom()));
}

Scalar random_coefficient(std::mt19937_64 &rng)
{
	static const Scalar pool[] = {
	    Scalar(-2), Scalar(-1), Scalar(-1, 2), Scalar(0),   Scalar(1, 2),
	    Scalar(1),  Scalar(2),  Scalar::i(),   -Scalar::i(),
	};
	std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
	return pool[pick(rng)];
}

AlgebraElement random_element(const GroupPtr &group, std::mt19937_64 &rng,
                              std::size_t max_support)
{
	std::uniform_int_distribution<std::size_t> size_dist(0, max_support);
	std::uniform_int_distribution<Element> elem_dist(
	    0, static_cast<Element>(group->order() - 1));
	AlgebraElement out(group);
	std::size_t terms = size_dist(rng);
	for (std::size_t k = 0; k < terms; ++k)
	{
		Element g = elem_dist(rng);
		Scalar c = random_coefficient(rng);
		out.add_term(g, c);
	}
	return out;
}

} // namespace plesken
