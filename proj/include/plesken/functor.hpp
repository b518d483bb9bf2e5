#pragma once

#include "plesken/algebra.hpp"
#include "plesken/plesken_algebra.hpp"

#include <string>
#include <string_view>

namespace plesken {

/// How the object map sums (a_i - a_i')(g_i - g_i^{-1}).
///
/// literal: over every group element i, so each pair {g, g^{-1}} contributes
/// twice; pairwise: once per canonical representative. They differ by a
/// factor of exactly 2.
enum class ObjectMapConvention
{
	literal,
	pairwise,
};

ObjectMapConvention parse_convention(std::string_view text);
std::string to_string(ObjectMapConvention c);

/// Sends x = sum a_i g_i in L_FG to sum (a_i - a_i')(g_i - g_i^{-1}), where
/// a_i' is the coefficient of g_i^{-1} in x. The result always lies in L(G).
AlgebraElement object_map(const AlgebraElement &x,
                          ObjectMapConvention convention = ObjectMapConvention::literal);

/// Lie algebras of the group algebras of all subgroups of an ambient group,
/// with every induced map between them as morphisms.
struct SubgroupCategory
{
	GroupPtr ambient;
	std::vector<GroupPtr> objects;
	std::vector<BasisPtr> bases;
	/// homsets[i * size() + j] = all homs objects[i] -> objects[j], lexicographic.
	std::vector<std::vector<GroupHom>> homsets;

	std::size_t size() const { return objects.size(); }
	const std::vector<GroupHom> &homset(std::size_t i, std::size_t j) const
	{
		return homsets.at(i * size() + j);
	}
	std::size_t morphism_count() const;
};

/// Throws SearchTooLarge when the ambient group or a hom search is too big.
SubgroupCategory build_subgroup_category(const GroupPtr &ambient);

/// T(fbar) = fhat on the canonical bases.
HatMap morphism_map(const InducedMap &fbar);
HatMap morphism_map(const InducedMap &fbar, const BasisPtr &domain, const BasisPtr &codomain);

struct IdentityLawResult
{
	std::size_t object;
	bool identity_in_homset;
	bool holds;
};

/// Composition results aggregated over all composable pairs through one
/// object triple (i, j, k).
struct CompositionLawResult
{
	std::size_t i, j, k;
	std::size_t pairs_checked;
	std::size_t closure_failures; // composite missing from homset(i, k)
	std::size_t bar_failures;     // (f2 f1)bar != f2bar f1bar
	std::size_t hat_failures;     // T(f2bar f1bar) != T(f2bar) T(f1bar)
	bool holds() const { return closure_failures == 0 && bar_failures == 0 && hat_failures == 0; }
};

struct LawReport
{
	std::vector<IdentityLawResult> identity;
	std::vector<CompositionLawResult> composition;
	bool identity_law_holds() const;
	bool composition_law_holds() const;
	bool all_hold() const { return identity_law_holds() && composition_law_holds(); }
};

LawReport check_functor_laws(const SubgroupCategory &c);

struct FullnessPair
{
	std::size_t i, j;
	/// Distinct induced maps L(H_i) -> L(H_j).
	std::size_t target_maps;
	/// For each target map, the index in homset(i, j) of a preimage, or -1.
	std::vector<long> preimages;
	bool surjective;
};

struct FullnessReport
{
	std::vector<FullnessPair> pairs;
	bool full() const;
};

FullnessReport check_full(const SubgroupCategory &c);

/// Two distinct morphisms with the same image under T.
struct FaithfulnessWitness
{
	std::size_t i, j;
	std::size_t first, second; // indices into homset(i, j), first < second
	bool images_are_zero;
};

/// All colliding pairs, ordered by (i, j) and then by the image tables.
std::vector<FaithfulnessWitness> find_faithfulness_counterexample(const SubgroupCategory &c);

/// Everything computed about T on one subgroup category.
struct FunctorWitness
{
	struct ObjectRecord
	{
		std::size_t object;
		std::size_t group_order;
		std::size_t plesken_dim;
	};
	struct MorphismRecord
	{
		std::size_t i, j, hom;
		bool hat_is_zero;
	};
	std::vector<ObjectRecord> object_map;
	std::vector<MorphismRecord> morphism_map;
	LawReport laws;
	FullnessReport fullness;
	std::vector<FaithfulnessWitness> faithfulness_counterexamples;
};

FunctorWitness materialize_functor(const SubgroupCategory &c);

} // namespace plesken
