#include "plesken/json_io.hpp"

#include "plesken/error.hpp"

namespace plesken {

namespace {

std::string group_tag(const GroupPtr &g)
{
	return g->name();
}

Json labels_of(const GroupPtr &g, std::span<const Element> elements)
{
	Json out = Json::array();
	for (Element x : elements)
		out.push_back(g->label(x));
	return out;
}

} // namespace

Json scalar_to_json(const Scalar &k)
{
	return Json{{"re", rational_to_string(k.re())}, {"im", rational_to_string(k.im())}};
}

Scalar scalar_from_json(const Json &j)
{
	try
	{
		mpq_class re = Scalar::parse_rational(j.at("re").get<std::string>());
		mpq_class im = j.contains("im") ? Scalar::parse_rational(j.at("im").get<std::string>())
		                                : mpq_class(0);
		return Scalar(re, im);
	}
	catch (const Json::exception &e)
	{
		throw ParseError(std::string("malformed scalar: ") + e.what());
	}
}

Json element_to_json(const AlgebraElement &x)
{
	Json terms = Json::array();
	for (const auto &[g, k] : x.terms())
	{
		Json t = scalar_to_json(k);
		t["elem"] = x.group()->label(g);
		terms.push_back(std::move(t));
	}
	return Json{{"group", group_tag(x.group())}, {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const Json &j, const GroupPtr &group)
{
	try
	{
		AlgebraElement out(group);
		for (const auto &t : j.at("terms"))
		{
			const auto label = t.at("elem").get<std::string>();
			auto g = group->find(label);
			if (!g)
				throw ParseError("unknown element '" + label + "' in " + group->name());
			out.add_term(*g, scalar_from_json(t));
		}
		return out;
	}
	catch (const Json::exception &e)
	{
		throw ParseError(std::string("malformed element: ") + e.what());
	}
}

AlgebraElement element_from_json(const Json &j)
{
	try
	{
		return element_from_json(j, build_group(j.at("group").get<std::string>()));
	}
	catch (const Json::exception &e)
	{
		throw ParseError(std::string("malformed element: ") + e.what());
	}
}

Json structure_constants_to_json(const StructureConstants &sc)
{
	const auto &basis = sc.basis();
	Json entries = Json::array();
	for (const auto &e : sc.nonzero_upper())
	{
		Json t = scalar_to_json(e.value);
		t["k"] = e.k;
		t["l"] = e.l;
		t["m"] = e.m;
		entries.push_back(std::move(t));
	}
	return Json{{"group", group_tag(basis->group())},
	            {"dim", sc.dim()},
	            {"basis", labels_of(basis->group(), basis->reps())},
	            {"sc", std::move(entries)}};
}

Json hom_to_json(const GroupHom &f)
{
	Json images = Json::array();
	for (Element x = 0; x < f.image.size(); ++x)
		images.push_back(f.codomain->label(f.image[x]));
	return Json{{"domain", f.domain->name()},
	            {"codomain", f.codomain->name()},
	            {"image", f.image},
	            {"image_labels", std::move(images)}};
}

Json objects_to_json(const SubgroupCategory &c)
{
	Json out = Json::array();
	for (std::size_t i = 0; i < c.size(); ++i)
	{
		const auto &h = c.objects[i];
		out.push_back(Json{{"index", i},
		                   {"name", h->name()},
		                   {"order", h->order()},
		                   {"elements", labels_of(c.ambient, h->embedding())},
		                   {"plesken_dim", c.bases[i]->dim()},
		                   {"plesken_basis", labels_of(h, c.bases[i]->reps())}});
	}
	return out;
}

Json law_report_to_json(const SubgroupCategory &c, const LawReport &r)
{
	Json identity = Json::array();
	for (const auto &e : r.identity)
		identity.push_back(Json{{"object", e.object},
		                        {"identity_in_homset", e.identity_in_homset},
		                        {"holds", e.holds}});
	Json composition = Json::array();
	std::size_t pairs = 0;
	for (const auto &e : r.composition)
	{
		pairs += e.pairs_checked;
		if (e.pairs_checked == 0)
			continue;
		composition.push_back(Json{{"i", e.i},
		                           {"j", e.j},
		                           {"k", e.k},
		                           {"pairs_checked", e.pairs_checked},
		                           {"closure_failures", e.closure_failures},
		                           {"bar_failures", e.bar_failures},
		                           {"hat_failures", e.hat_failures},
		                           {"holds", e.holds()}});
	}
	return Json{{"ambient", c.ambient->name()},
	            {"objects", objects_to_json(c)},
	            {"morphisms", c.morphism_count()},
	            {"identity_law", r.identity_law_holds()},
	            {"composition_law", r.composition_law_holds()},
	            {"composable_pairs_checked", pairs},
	            {"all_hold", r.all_hold()},
	            {"identity", std::move(identity)},
	            {"composition", std::move(composition)}};
}

Json fullness_to_json(const SubgroupCategory &c, const FullnessReport &r)
{
	Json pairs = Json::array();
	for (const auto &p : r.pairs)
		pairs.push_back(Json{{"i", p.i},
		                     {"j", p.j},
		                     {"source_morphisms", c.homset(p.i, p.j).size()},
		                     {"target_morphisms", p.target_maps},
		                     {"preimages", p.preimages},
		                     {"surjective", p.surjective}});
	return Json{{"ambient", c.ambient->name()},
	            {"objects", objects_to_json(c)},
	            {"full", r.full()},
	            {"pairs", std::move(pairs)}};
}

Json witnesses_to_json(const SubgroupCategory &c, const std::vector<FaithfulnessWitness> &w)
{
	Json list = Json::array();
	for (const auto &e : w)
	{
		const auto &homs = c.homset(e.i, e.j);
		list.push_back(Json{{"i", e.i},
		                    {"j", e.j},
		                    {"first", hom_to_json(homs[e.first])},
		                    {"second", hom_to_json(homs[e.second])},
		                    {"images_are_zero", e.images_are_zero}});
	}
	return Json{{"ambient", c.ambient->name()},
	            {"objects", objects_to_json(c)},
	            {"faithful", w.empty()},
	            {"count", w.size()},
	            {"witnesses", std::move(list)}};
}

} // namespace plesken
