#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plesken {

/// Index of a group element, 0..order-1.
using Element = std::uint32_t;

enum class GroupKind
{
	cyclic,
	symmetric,
	dihedral,
	klein4,
	heisenberg,
};

/// Names one of the built-in groups.
///
/// Textual form (case-insensitive): "C<n>", "S<n>", "D<n>", "K4", "H<p>".
/// D<n> is the dihedral group of order 2n; H<p> is the Heisenberg group of
/// 3x3 upper unitriangular matrices over Z_p.
struct GroupSpec
{
	GroupKind kind = GroupKind::cyclic;
	unsigned param = 1;

	static GroupSpec cyclic(unsigned n) { return {GroupKind::cyclic, n}; }
	static GroupSpec symmetric(unsigned n) { return {GroupKind::symmetric, n}; }
	static GroupSpec dihedral(unsigned n) { return {GroupKind::dihedral, n}; }
	static GroupSpec klein4() { return {GroupKind::klein4, 4}; }
	static GroupSpec heisenberg(unsigned p) { return {GroupKind::heisenberg, p}; }

	/// Throws InvalidSpec on malformed text or unsupported parameters.
	static GroupSpec parse(std::string_view text);

	std::string to_string() const;

	friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Largest order accepted by build_group; bounds the Cayley table to a few
/// tens of megabytes.
inline constexpr std::size_t max_group_order = 2500;

bool is_prime(unsigned n);

/// A finite group given by its full Cayley table.
///
/// Immutable after construction. The constructor validates the group axioms
/// (identity, inverses, Latin-square rows/columns, associativity), so any
/// FiniteGroup that exists is a group.
class FiniteGroup
{
public:
	/// Builds and validates a group from a row-major n*n Cayley table.
	/// Throws InvalidGroup if an axiom fails.
	FiniteGroup(std::string name, std::vector<Element> cayley,
	            std::vector<std::string> labels,
	            std::optional<GroupSpec> spec = std::nullopt,
	            std::vector<Element> embedding = {});

	std::size_t order() const { return order_; }
	Element identity() const { return identity_; }
	const std::string &name() const { return name_; }
	const std::optional<GroupSpec> &spec() const { return spec_; }

	/// Throws IndexOutOfRange.
	Element mul(Element x, Element y) const;
	Element inverse(Element x) const;

	/// Unchecked table access for hot loops.
	Element mul_unchecked(Element x, Element y) const { return cayley_[x * order_ + y]; }
	Element inverse_unchecked(Element x) const { return inv_[x]; }

	const std::string &label(Element x) const;
	std::span<const std::string> labels() const { return labels_; }
	std::optional<Element> find(std::string_view label) const;

	std::span<const Element> cayley() const { return cayley_; }
	std::span<const Element> inverses() const { return inv_; }

	/// For subgroups produced by enumerate_subgroups: position i holds the
	/// ambient index of element i. Empty for groups built from a spec.
	std::span<const Element> embedding() const { return embedding_; }

	/// Number of x with x*x = identity, identity included.
	std::size_t involution_count() const;
	bool is_involution(Element x) const { return inv_[x] == x; }
	bool is_abelian() const;

	/// Structural equality: same table and labels.
	friend bool operator==(const FiniteGroup &a, const FiniteGroup &b);

private:
	void check_index(Element x) const;

	std::string name_;
	std::size_t order_;
	std::vector<Element> cayley_;
	std::vector<Element> inv_;
	Element identity_ = 0;
	std::vector<std::string> labels_;
	std::optional<GroupSpec> spec_;
	std::vector<Element> embedding_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Same group object, or structurally equal groups.
bool same_group(const GroupPtr &a, const GroupPtr &b);

GroupPtr build_group(const GroupSpec &spec);
inline GroupPtr build_group(std::string_view text)
{
	return build_group(GroupSpec::parse(text));
}

/// A map between two groups given by its image table.
struct GroupHom
{
	GroupPtr domain;
	GroupPtr codomain;
	std::vector<Element> image;

	Element operator()(Element x) const { return image.at(x); }
};

/// True iff the image table is total, in range and multiplicative.
bool validate_hom(const GroupHom &h);

/// Throws InvalidHom unless validate_hom holds.
void require_hom(const GroupHom &h);

GroupHom identity_hom(const GroupPtr &g);
GroupHom trivial_hom(const GroupPtr &g, const GroupPtr &h);

/// f2 after f1. Throws DomainMismatch if codomain(f1) != domain(f2).
GroupHom compose_homs(const GroupHom &f2, const GroupHom &f1);

/// Maximum |H|^(#generators) explored by enumerate_homs.
inline constexpr double max_hom_search = 1e7;
/// Maximum order accepted by enumerate_subgroups.
inline constexpr std::size_t max_subgroup_search_order = 64;

/// Greedy generating set: walks the elements in index order and keeps each
/// one that is not yet in the subgroup generated by the previous picks.
std::vector<Element> generating_set(const FiniteGroup &g);

/// The subgroup generated by gens, as a sorted list of element indices.
std::vector<Element> closure(const FiniteGroup &g, std::span<const Element> gens);

/// All homomorphisms G -> H, lexicographically ordered by image table.
/// Throws SearchTooLarge.
std::vector<GroupHom> enumerate_homs(const GroupPtr &g, const GroupPtr &h);

/// All subgroups of G, ordered by (order, sorted ambient indices). Each is a
/// standalone FiniteGroup whose embedding() maps back into G. Throws
/// SearchTooLarge when |G| exceeds max_subgroup_search_order.
std::vector<GroupPtr> enumerate_subgroups(const GroupPtr &g);

/// The subgroup on the given sorted, closed element subset.
GroupPtr make_subgroup(const GroupPtr &g, std::span<const Element> elements,
                       std::string name);

} // namespace plesken
