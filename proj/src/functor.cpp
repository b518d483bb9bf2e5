#include "plesken/functor.hpp"

#include "plesken/error.hpp"

#include <algorithm>

namespace plesken {

ObjectMapConvention parse_convention(std::string_view text)
{
	if (text == "literal")
		return ObjectMapConvention::literal;
	if (text == "pairwise")
		return ObjectMapConvention::pairwise;
	throw ParseError("unknown convention '" + std::string(text) + "'");
}

std::string to_string(ObjectMapConvention c)
{
	return c == ObjectMapConvention::literal ? "literal" : "pairwise";
}

AlgebraElement object_map(const AlgebraElement &x, ObjectMapConvention convention)
{
	const GroupPtr &group = x.group();
	AlgebraElement out(group);

	if (convention == ObjectMapConvention::pairwise)
	{
		for (Element g = 0; g < group->order(); ++g)
		{
			Element ginv = group->inverse_unchecked(g);
			if (g >= ginv)
				continue;
			out += (x.coefficient(g) - x.coefficient(ginv)) * hat(group, g);
		}
		return out;
	}

	// Every i with a_i or a_i' nonzero: the support and its inverses.
	std::vector<Element> indices;
	for (const auto &[g, c] : x.terms())
	{
		indices.push_back(g);
		indices.push_back(group->inverse_unchecked(g));
	}
	std::sort(indices.begin(), indices.end());
	indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
	for (Element g : indices)
		out += (x.coefficient(g) - x.coefficient(group->inverse_unchecked(g))) * hat(group, g);
	return out;
}

std::size_t SubgroupCategory::morphism_count() const
{
	std::size_t n = 0;
	for (const auto &h : homsets)
		n += h.size();
	return n;
}

SubgroupCategory build_subgroup_category(const GroupPtr &ambient)
{
	SubgroupCategory c;
	c.ambient = ambient;
	c.objects = enumerate_subgroups(ambient);
	for (const auto &h : c.objects)
		c.bases.push_back(canonical_basis(h));
	for (const auto &src : c.objects)
		for (const auto &dst : c.objects)
			c.homsets.push_back(enumerate_homs(src, dst));
	return c;
}

HatMap morphism_map(const InducedMap &fbar)
{
	return lift_hom_hat(fbar.hom());
}

HatMap morphism_map(const InducedMap &fbar, const BasisPtr &domain, const BasisPtr &codomain)
{
	return lift_hom_hat(fbar.hom(), domain, codomain);
}

namespace {

std::vector<std::vector<HatMap>> hat_lifts(const SubgroupCategory &c)
{
	std::vector<std::vector<HatMap>> out(c.homsets.size());
	const std::size_t n = c.size();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (const auto &f : c.homset(i, j))
				out[i * n + j].push_back(morphism_map(InducedMap(f), c.bases[i], c.bases[j]));
	return out;
}

} // namespace

bool LawReport::identity_law_holds() const
{
	return std::all_of(identity.begin(), identity.end(),
	                   [](const auto &r) { return r.identity_in_homset && r.holds; });
}

bool LawReport::composition_law_holds() const
{
	return std::all_of(composition.begin(), composition.end(),
	                   [](const auto &r) { return r.holds(); });
}

LawReport check_functor_laws(const SubgroupCategory &c)
{
	const std::size_t n = c.size();
	const auto lifts = hat_lifts(c);
	LawReport report;

	for (std::size_t i = 0; i < n; ++i)
	{
		GroupHom id = identity_hom(c.objects[i]);
		const auto &homs = c.homset(i, i);
		bool present = std::any_of(homs.begin(), homs.end(),
		                           [&](const GroupHom &f) { return f.image == id.image; });
		HatMap t_id = morphism_map(InducedMap(id), c.bases[i], c.bases[i]);
		report.identity.push_back({i, present, t_id == HatMap::identity(c.bases[i])});
	}

	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				CompositionLawResult r{i, j, k, 0, 0, 0, 0};
				const auto &homs_ij = c.homset(i, j);
				const auto &homs_jk = c.homset(j, k);
				const auto &homs_ik = c.homset(i, k);
				for (std::size_t a = 0; a < homs_ij.size(); ++a)
					for (std::size_t b = 0; b < homs_jk.size(); ++b)
					{
						++r.pairs_checked;
						const InducedMap f1(homs_ij[a]);
						const InducedMap f2(homs_jk[b]);
						const InducedMap f21 = compose(f2, f1);

						bool in_homset = std::any_of(
						    homs_ik.begin(), homs_ik.end(),
						    [&](const GroupHom &h) { return h.image == f21.hom().image; });
						r.closure_failures += !in_homset;

						bool bar_ok = true;
						for (Element g = 0; g < c.objects[i]->order() && bar_ok; ++g)
						{
							auto basis_g = AlgebraElement::basis(c.objects[i], g);
							bar_ok = f21(basis_g) == f2(f1(basis_g));
						}
						r.bar_failures += !bar_ok;

						HatMap t_composite = morphism_map(f21, c.bases[i], c.bases[k]);
						HatMap composite_t = compose(lifts[j * n + k][b], lifts[i * n + j][a]);
						r.hat_failures += !(t_composite == composite_t);
					}
				report.composition.push_back(r);
			}
	}
	return report;
}

bool FullnessReport::full() const
{
	return std::all_of(pairs.begin(), pairs.end(), [](const auto &p) { return p.surjective; });
}

FullnessReport check_full(const SubgroupCategory &c)
{
	const std::size_t n = c.size();
	const auto lifts = hat_lifts(c);
	FullnessReport report;

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			// The target hom-set: every map L(H_i) -> L(H_j) induced by a group
			// homomorphism, from a fresh enumeration and with duplicates merged.
			std::vector<HatMap> targets;
			for (const auto &f : enumerate_homs(c.objects[i], c.objects[j]))
			{
				HatMap t = lift_hom_hat(f, c.bases[i], c.bases[j]);
				if (std::find(targets.begin(), targets.end(), t) == targets.end())
					targets.push_back(std::move(t));
			}

			FullnessPair pair{i, j, targets.size(), {}, true};
			const auto &source = lifts[i * n + j];
			for (const auto &t : targets)
			{
				auto it = std::find(source.begin(), source.end(), t);
				long pre = it == source.end() ? -1 : static_cast<long>(it - source.begin());
				pair.preimages.push_back(pre);
				pair.surjective = pair.surjective && pre >= 0;
			}
			report.pairs.push_back(std::move(pair));
		}
	return report;
}

std::vector<FaithfulnessWitness> find_faithfulness_counterexample(const SubgroupCategory &c)
{
	const std::size_t n = c.size();
	const auto lifts = hat_lifts(c);
	std::vector<FaithfulnessWitness> out;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			const auto &homs = c.homset(i, j);
			const auto &maps = lifts[i * n + j];
			for (std::size_t a = 0; a < homs.size(); ++a)
				for (std::size_t b = a + 1; b < homs.size(); ++b)
				{
					if (InducedMap(homs[a]) == InducedMap(homs[b]))
						continue;
					if (maps[a] == maps[b])
						out.push_back({i, j, a, b, maps[a].is_zero()});
				}
		}
	return out;
}

FunctorWitness materialize_functor(const SubgroupCategory &c)
{
	FunctorWitness w;
	const std::size_t n = c.size();
	for (std::size_t i = 0; i < n; ++i)
		w.object_map.push_back({i, c.objects[i]->order(), c.bases[i]->dim()});
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			const auto &homs = c.homset(i, j);
			for (std::size_t h = 0; h < homs.size(); ++h)
				w.morphism_map.push_back(
				    {i, j, h,
				     morphism_map(InducedMap(homs[h]), c.bases[i], c.bases[j]).is_zero()});
		}
	w.laws = check_functor_laws(c);
	w.fullness = check_full(c);
	w.faithfulness_counterexamples = find_faithfulness_counterexample(c);
	return w;
}

} // namespace plesken
