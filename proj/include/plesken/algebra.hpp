#pragma once

#include "plesken/group.hpp"
#include "plesken/scalar.hpp"

#include <map>
#include <random>

namespace plesken {

/// An element sum_g a_g g of the group algebra FG over Q(i).
///
/// Coefficients are stored sparsely, keyed by element index, and zero
/// coefficients are never stored, so two elements are equal exactly when
/// their maps are.
class AlgebraElement
{
public:
	using Terms = std::map<Element, Scalar>;

	/// The zero element of FG.
	explicit AlgebraElement(GroupPtr group);
	AlgebraElement(GroupPtr group, Terms terms);

	/// The basis element g with coefficient k.
	static AlgebraElement basis(GroupPtr group, Element g, Scalar k = 1);

	const GroupPtr &group() const { return group_; }
	const Terms &terms() const { return terms_; }
	Scalar coefficient(Element g) const;
	bool is_zero() const { return terms_.empty(); }
	std::size_t support_size() const { return terms_.size(); }

	/// Adds k*g in place, dropping the term if it cancels.
	void add_term(Element g, const Scalar &k);

	AlgebraElement &operator+=(const AlgebraElement &o);
	AlgebraElement &operator-=(const AlgebraElement &o);

	friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
	friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
	friend AlgebraElement operator*(const Scalar &k, const AlgebraElement &x);
	friend AlgebraElement operator*(const AlgebraElement &x, const AlgebraElement &y);
	AlgebraElement operator-() const;

	friend bool operator==(const AlgebraElement &a, const AlgebraElement &b);
	friend bool operator!=(const AlgebraElement &a, const AlgebraElement &b) { return !(a == b); }

private:
	GroupPtr group_;
	Terms terms_;
};

/// Throws GroupMismatch unless both elements live in the same group.
void require_same_group(const AlgebraElement &x, const AlgebraElement &y);

AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y);
AlgebraElement scale(const Scalar &k, const AlgebraElement &x);

/// The group-algebra product: sum_{g,h} a_g b_h (gh).
AlgebraElement convolve(const AlgebraElement &x, const AlgebraElement &y);

/// The commutator xy - yx that makes FG the Lie algebra L_FG.
AlgebraElement lie_bracket(const AlgebraElement &x, const AlgebraElement &y);

/// Linear extension of a group homomorphism f: G -> H to L_FG -> L_FH.
class InducedMap
{
public:
	/// Throws InvalidHom if f is not a homomorphism.
	explicit InducedMap(GroupHom f);

	const GroupHom &hom() const { return hom_; }
	const GroupPtr &domain() const { return hom_.domain; }
	const GroupPtr &codomain() const { return hom_.codomain; }

	/// Pushes each basis term through f; terms landing on the same image add.
	AlgebraElement operator()(const AlgebraElement &x) const;

	/// Two induced maps agree on every basis element iff their tables agree.
	friend bool operator==(const InducedMap &a, const InducedMap &b);

private:
	GroupHom hom_;
};

InducedMap lift_hom_bar(const GroupHom &f);

/// (f2 after f1) as an induced map; throws DomainMismatch.
InducedMap compose(const InducedMap &f2, const InducedMap &f1);

/// Seeded sample elements for property checks: support of at most
/// max_support elements, coefficients drawn from
/// {-2, -1, -1/2, 0, 1/2, 1, 2, i, -i}.
AlgebraElement random_element(const GroupPtr &group, std::mt19937_64 &rng,
                              std::size_t max_support = 5);
Scalar random_coefficient(std::mt19937_64 &rng);

} // namespace plesken
