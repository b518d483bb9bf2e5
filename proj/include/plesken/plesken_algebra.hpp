#pragma once

#include "plesken/algebra.hpp"

#include <optional>

namespace plesken {

/// hat(g) = g - g^{-1} in FG. Zero for the identity and for involutions.
AlgebraElement hat(const GroupPtr &group, Element g);

/// Canonical spanning set of the Plesken Lie algebra L(G).
///
/// One representative per pair {g, g^{-1}} with g != g^{-1}: the member with
/// the smaller index. The hats of the representatives form a basis of L(G),
/// because hat(g^{-1}) = -hat(g) and distinct pairs have disjoint supports.
class PleskenBasis
{
public:
	explicit PleskenBasis(GroupPtr group);

	const GroupPtr &group() const { return group_; }
	std::span<const Element> reps() const { return reps_; }
	std::size_t dim() const { return reps_.size(); }
	Element rep(std::size_t k) const { return reps_.at(k); }

	struct Slot
	{
		std::size_t position;
		int sign; // hat(g) = sign * hat(reps[position])
	};
	/// Where hat(g) lives in the basis; nullopt when hat(g) = 0.
	std::optional<Slot> slot(Element g) const;

	friend bool operator==(const PleskenBasis &a, const PleskenBasis &b)
	{
		return same_group(a.group_, b.group_) && a.reps_ == b.reps_;
	}

private:
	GroupPtr group_;
	std::vector<Element> reps_;
	std::vector<std::optional<Slot>> slots_;
};

using BasisPtr = std::shared_ptr<const PleskenBasis>;

BasisPtr canonical_basis(const GroupPtr &group);

/// Coordinates of an element of L(G) in a PleskenBasis.
class PleskenElement
{
public:
	using Coords = std::map<std::size_t, Scalar>;

	explicit PleskenElement(BasisPtr basis);
	PleskenElement(BasisPtr basis, Coords coords);

	static PleskenElement unit(BasisPtr basis, std::size_t position, Scalar k = 1);

	const BasisPtr &basis() const { return basis_; }
	const Coords &coords() const { return coords_; }
	Scalar coord(std::size_t position) const;
	bool is_zero() const { return coords_.empty(); }

	void add_coord(std::size_t position, const Scalar &k);

	PleskenElement &operator+=(const PleskenElement &o);
	PleskenElement &operator-=(const PleskenElement &o);
	friend PleskenElement operator+(PleskenElement a, const PleskenElement &b) { return a += b; }
	friend PleskenElement operator-(PleskenElement a, const PleskenElement &b) { return a -= b; }
	friend PleskenElement operator*(const Scalar &k, const PleskenElement &x);

	friend bool operator==(const PleskenElement &a, const PleskenElement &b);
	friend bool operator!=(const PleskenElement &a, const PleskenElement &b) { return !(a == b); }

private:
	BasisPtr basis_;
	Coords coords_;
};

/// Throws BasisMismatch unless both elements use the same basis.
void require_same_basis(const PleskenElement &x, const PleskenElement &y);

/// Coordinates of x in the basis; throws NotInSpan if x is not in L(G).
PleskenElement reduce(const BasisPtr &basis, const AlgebraElement &x);

/// sum_k coords[k] * hat(reps[k]).
AlgebraElement embed(const PleskenElement &x);

/// Bracket in L(G), computed in FG and reduced back. Throws BasisMismatch.
PleskenElement plesken_bracket(const PleskenElement &x, const PleskenElement &y);

/// Checks [hat g, hat h] = hat(gh) - hat(gh^-1) - hat(g^-1 h) + hat(g^-1 h^-1).
bool bracket_expansion_check(const GroupPtr &group, Element g, Element h);

/// c(k,l,m) with [e_k, e_l] = sum_m c(k,l,m) e_m for the canonical basis.
class StructureConstants
{
public:
	explicit StructureConstants(BasisPtr basis);

	const BasisPtr &basis() const { return basis_; }
	std::size_t dim() const { return dim_; }
	const Scalar &at(std::size_t k, std::size_t l, std::size_t m) const
	{
		return table_[(k * dim_ + l) * dim_ + m];
	}

	bool is_antisymmetric() const;
	/// sum_m c(k,l,m)c(m,q,r) + c(l,q,m)c(m,k,r) + c(q,k,m)c(m,l,r) = 0 everywhere.
	bool satisfies_jacobi() const;

	struct Entry
	{
		std::size_t k, l, m;
		Scalar value;
	};
	/// Nonzero entries with k < l, in (k, l, m) order.
	std::vector<Entry> nonzero_upper() const;

private:
	BasisPtr basis_;
	std::size_t dim_;
	std::vector<Scalar> table_;
};

StructureConstants structure_constants(const BasisPtr &basis);

/// Linear map L(G) -> L(H) induced by a group homomorphism: hat(g) is sent
/// to hat(f(g)).
class HatMap
{
public:
	/// Throws InvalidHom if f is not a homomorphism.
	HatMap(const GroupHom &f, BasisPtr domain, BasisPtr codomain);
	/// Built from explicit images of the domain basis vectors.
	HatMap(BasisPtr domain, BasisPtr codomain, std::vector<PleskenElement> columns);

	static HatMap identity(const BasisPtr &basis);
	static HatMap zero(const BasisPtr &domain, const BasisPtr &codomain);

	const BasisPtr &domain() const { return domain_; }
	const BasisPtr &codomain() const { return codomain_; }
	/// Image of the k-th domain basis vector.
	const PleskenElement &column(std::size_t k) const { return columns_.at(k); }
	bool is_zero() const;

	PleskenElement operator()(const PleskenElement &x) const;

	/// Maps are equal iff they agree on every domain basis vector.
	friend bool operator==(const HatMap &a, const HatMap &b);
	friend bool operator!=(const HatMap &a, const HatMap &b) { return !(a == b); }

private:
	BasisPtr domain_;
	BasisPtr codomain_;
	std::vector<PleskenElement> columns_;
};

HatMap lift_hom_hat(const GroupHom &f);
HatMap lift_hom_hat(const GroupHom &f, const BasisPtr &domain, const BasisPtr &codomain);

/// g after f; throws BasisMismatch.
HatMap compose(const HatMap &g, const HatMap &f);

} // namespace plesken
