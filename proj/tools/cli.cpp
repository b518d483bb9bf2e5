#include "cli.hpp"

#include "plesken/error.hpp"
#include "plesken/expr.hpp"
#include "plesken/functor.hpp"
#include "plesken/json_io.hpp"
#include "plesken/plesken_algebra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace plesken::cli {

namespace {

constexpr const char *schema_version = "1";

struct Options
{
	std::string format = "json";
	std::string convention = "literal";
	std::uint64_t seed = 1;

	std::string spec;
	std::string spec2;
	std::string x;
	std::string y;
	std::string what;
	std::string action;
	std::string ambient;
	std::string element;
	std::size_t samples = 100;
};

/// Result of one command: the JSON payload, a text rendering and an exit code.
struct Outcome
{
	Json payload;
	std::string text;
	int exit_code = success;
};

std::string join(const Json &labels)
{
	std::string out;
	for (const auto &l : labels)
		out += (out.empty() ? "" : ", ") + l.get<std::string>();
	return out;
}

Outcome run_group(const Options &opt)
{
	GroupPtr g = build_group(opt.spec);
	Json labels = Json::array();
	for (const auto &l : g->labels())
		labels.push_back(l);
	Outcome o;
	o.payload = Json{{"group", g->name()},
	                 {"order", g->order()},
	                 {"identity", g->label(g->identity())},
	                 {"involution_count", g->involution_count()},
	                 {"abelian", g->is_abelian()},
	                 {"plesken_dim", canonical_basis(g)->dim()},
	                 {"labels", labels}};
	std::ostringstream s;
	s << g->name() << ": order " << g->order() << ", " << g->involution_count()
	  << " involutions (identity included), " << (g->is_abelian() ? "abelian" : "non-abelian")
	  << "\nelements: " << join(labels) << "\n";
	o.text = s.str();
	return o;
}

Outcome run_homs(const Options &opt)
{
	GroupPtr g = build_group(opt.spec);
	GroupPtr h = build_group(opt.spec2);
	auto homs = enumerate_homs(g, h);
	Json list = Json::array();
	std::ostringstream s;
	s << homs.size() << " homomorphisms " << g->name() << " -> " << h->name() << "\n";
	for (const auto &f : homs)
	{
		Json j = hom_to_json(f);
		s << "  [" << join(j["image_labels"]) << "]\n";
		list.push_back(std::move(j));
	}
	Outcome o;
	o.payload = Json{{"domain", g->name()},
	                 {"codomain", h->name()},
	                 {"count", homs.size()},
	                 {"homs", std::move(list)}};
	o.text = s.str();
	return o;
}

Outcome run_bracket(const Options &opt)
{
	GroupPtr g = build_group(opt.spec);
	AlgebraElement x = parse_element(g, opt.x);
	AlgebraElement y = parse_element(g, opt.y);
	AlgebraElement b = lie_bracket(x, y);
	Outcome o;
	o.payload = Json{{"x", element_to_json(x)},
	                 {"y", element_to_json(y)},
	                 {"bracket", element_to_json(b)},
	                 {"bracket_text", format_element(b)}};
	o.text = "[" + format_element(x) + ", " + format_element(y) + "] = " + format_element(b) +
	         "\n";
	return o;
}

Outcome run_plesken_laws(const GroupPtr &g, const Options &opt)
{
	std::mt19937_64 rng(opt.seed);
	auto basis = canonical_basis(g);
	const auto convention = parse_convention(opt.convention);
	std::size_t jacobi = 0, bilinear = 0, alternating = 0, closure = 0;
	for (std::size_t n = 0; n < opt.samples; ++n)
	{
		auto x = random_element(g, rng);
		auto y = random_element(g, rng);
		auto z = random_element(g, rng);
		Scalar a = random_coefficient(rng);
		Scalar b = random_coefficient(rng);

		auto jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
		           lie_bracket(z, lie_bracket(x, y));
		jacobi += jac.is_zero();
		bilinear += lie_bracket(a * x + b * y, z) == a * lie_bracket(x, z) + b * lie_bracket(y, z) &&
		            lie_bracket(z, a * x + b * y) == a * lie_bracket(z, x) + b * lie_bracket(z, y);
		alternating += lie_bracket(x, x).is_zero();

		auto px = reduce(basis, object_map(x, convention));
		auto py = reduce(basis, object_map(y, convention));
		try
		{
			auto br = plesken_bracket(px, py);
			closure += embed(br) == lie_bracket(embed(px), embed(py));
		}
		catch (const NotInSpan &)
		{
		}
	}
	const std::size_t n = opt.samples;
	bool ok = jacobi == n && bilinear == n && alternating == n && closure == n;
	Outcome o;
	o.payload = Json{{"group", g->name()},  {"seed", opt.seed},       {"samples", n},
	                 {"jacobi", jacobi},    {"bilinear", bilinear},   {"alternating", alternating},
	                 {"plesken_closure", closure}, {"all_hold", ok}};
	std::ostringstream s;
	s << g->name() << ", " << n << " samples (seed " << opt.seed << "): jacobi " << jacobi
	  << ", bilinear " << bilinear << ", alternating " << alternating << ", closure "
	  << closure << (ok ? " -- all hold\n" : " -- VIOLATION\n");
	o.text = s.str();
	o.exit_code = ok ? success : law_violation;
	return o;
}

Outcome run_plesken(const Options &opt)
{
	GroupPtr g = build_group(opt.spec);
	auto basis = canonical_basis(g);
	Json labels = Json::array();
	for (Element r : basis->reps())
		labels.push_back(g->label(r));

	Outcome o;
	if (opt.what == "dim")
	{
		o.payload = Json{{"group", g->name()}, {"dim", basis->dim()}};
		o.text = std::to_string(basis->dim()) + "\n";
	}
	else if (opt.what == "basis")
	{
		o.payload = Json{{"group", g->name()}, {"dim", basis->dim()}, {"basis", labels}};
		std::ostringstream s;
		s << "dim " << basis->dim() << "\n";
		for (Element r : basis->reps())
			s << "  " << format_element(hat(g, r)) << "\n";
		o.text = s.str();
	}
	else if (opt.what == "sc")
	{
		auto sc = structure_constants(basis);
		o.payload = structure_constants_to_json(sc);
		std::ostringstream s;
		s << "dim " << sc.dim() << ", basis: " << join(labels) << "\n";
		for (const auto &e : sc.nonzero_upper())
			s << "  c[" << e.k << "][" << e.l << "][" << e.m << "] = " << e.value << "\n";
		o.text = s.str();
	}
	else
		return run_plesken_laws(g, opt);
	return o;
}

std::string objects_text(const SubgroupCategory &c)
{
	std::ostringstream s;
	for (std::size_t i = 0; i < c.size(); ++i)
		s << "  [" << i << "] order " << c.objects[i]->order() << ", Plesken dim "
		  << c.bases[i]->dim() << ": {" << join(objects_to_json(c)[i]["elements"]) << "}\n";
	return s.str();
}

Outcome run_functor(const Options &opt)
{
	GroupPtr ambient = build_group(opt.ambient);
	Outcome o;

	if (opt.action == "object")
	{
		if (opt.element.empty())
			throw ParseError("functor object needs --element");
		const auto convention = parse_convention(opt.convention);
		AlgebraElement x = parse_element(ambient, opt.element);
		AlgebraElement tx = object_map(x, convention);
		auto coords = reduce(canonical_basis(ambient), tx);
		Json cj = Json::array();
		for (const auto &[k, v] : coords.coords())
		{
			Json e = scalar_to_json(v);
			e["k"] = k;
			cj.push_back(std::move(e));
		}
		o.payload = Json{{"ambient", ambient->name()},
		                 {"convention", to_string(convention)},
		                 {"input", element_to_json(x)},
		                 {"image", element_to_json(tx)},
		                 {"image_text", format_element(tx)},
		                 {"plesken_coords", std::move(cj)}};
		o.text = "T(" + format_element(x) + ") = " + format_element(tx) + "\n";
		return o;
	}

	SubgroupCategory c = build_subgroup_category(ambient);
	std::ostringstream s;
	s << ambient->name() << ": " << c.size() << " subgroups, " << c.morphism_count()
	  << " morphisms\n"
	  << objects_text(c);

	if (opt.action == "check")
	{
		LawReport r = check_functor_laws(c);
		o.payload = law_report_to_json(c, r);
		s << "identity law: " << (r.identity_law_holds() ? "holds" : "FAILS") << "\n"
		  << "composition law: " << (r.composition_law_holds() ? "holds" : "FAILS") << " ("
		  << o.payload["composable_pairs_checked"].get<std::size_t>() << " composable pairs)\n";
		o.exit_code = r.all_hold() ? success : law_violation;
	}
	else if (opt.action == "full")
	{
		FullnessReport r = check_full(c);
		o.payload = fullness_to_json(c, r);
		s << "full: " << (r.full() ? "yes" : "NO") << " (" << r.pairs.size()
		  << " object pairs)\n";
		o.exit_code = r.full() ? success : law_violation;
	}
	else
	{
		auto w = find_faithfulness_counterexample(c);
		o.payload = witnesses_to_json(c, w);
		s << w.size() << " pairs of distinct morphisms with equal images"
		  << (w.empty() ? " (faithful)" : "") << "\n";
		for (const auto &e : w)
		{
			const auto &homs = c.homset(e.i, e.j);
			s << "  " << e.i << " -> " << e.j << ": ["
			  << join(hom_to_json(homs[e.first])["image_labels"]) << "] vs ["
			  << join(hom_to_json(homs[e.second])["image_labels"]) << "]"
			  << (e.images_are_zero ? " (both zero)" : "") << "\n";
		}
	}
	o.text = s.str();
	return o;
}

Json command_echo(const std::string &verb, const std::vector<std::string> &args,
                  const Options &opt)
{
	return Json{{"verb", verb},
	            {"args", args},
	            {"format", opt.format},
	            {"convention", opt.convention},
	            {"seed", opt.seed}};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	Options opt;
	CLI::App app{"Exact group algebras, Plesken Lie algebras and the functor between them",
	             "plesken-lab"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_option("--format", opt.format, "Output format")
	    ->check(CLI::IsMember({"json", "text"}));
	app.add_option("--convention", opt.convention, "Object map summation convention")
	    ->check(CLI::IsMember({"literal", "pairwise"}));
	app.add_option("--seed", opt.seed, "Seed for sampled property checks");

	auto *group = app.add_subcommand("group", "Describe a group");
	group->add_option("spec", opt.spec, "Group spec, e.g. S3")->required();

	auto *homs = app.add_subcommand("homs", "List all homomorphisms between two groups");
	homs->add_option("domain", opt.spec, "Domain group spec")->required();
	homs->add_option("codomain", opt.spec2, "Codomain group spec")->required();

	auto *bracket = app.add_subcommand("bracket", "Lie bracket xy - yx in the group algebra");
	bracket->add_option("spec", opt.spec, "Group spec")->required();
	bracket->add_option("x", opt.x, "First element, e.g. \"2*e + (1/2)*a\"")->required();
	bracket->add_option("y", opt.y, "Second element")->required();

	auto *plesken = app.add_subcommand("plesken", "Plesken Lie algebra of a group");
	plesken->add_option("spec", opt.spec, "Group spec")->required();
	plesken->add_option("what", opt.what, "basis | dim | sc | laws")
	    ->required()
	    ->check(CLI::IsMember({"basis", "dim", "sc", "laws"}));
	plesken->add_option("--samples", opt.samples, "Random samples for 'laws'");

	auto *functor = app.add_subcommand("functor", "Check the functor on a subgroup category");
	functor->add_option("action", opt.action, "check | counterexample | full | object")
	    ->required()
	    ->check(CLI::IsMember({"check", "counterexample", "full", "object"}));
	functor->add_option("--ambient", opt.ambient, "Ambient group spec")->required();
	functor->add_option("--element", opt.element, "Element for 'object'");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try
	{
		app.parse(reversed);
	}
	catch (const CLI::CallForHelp &)
	{
		out << app.help();
		return success;
	}
	catch (const CLI::ParseError &e)
	{
		err << "plesken-lab: " << e.what() << "\n";
		return usage_error;
	}

	const std::string verb = app.get_subcommands().front()->get_name();
	Json report{{"schema_version", schema_version}, {"command", command_echo(verb, args, opt)}};

	Outcome outcome;
	try
	{
		if (verb == "group")
			outcome = run_group(opt);
		else if (verb == "homs")
			outcome = run_homs(opt);
		else if (verb == "bracket")
			outcome = run_bracket(opt);
		else if (verb == "plesken")
			outcome = run_plesken(opt);
		else
			outcome = run_functor(opt);
	}
	catch (const SearchTooLarge &e)
	{
		err << "plesken-lab: " << e.what() << "\n";
		outcome.exit_code = guard_tripped;
		outcome.payload = Json{{"error", e.what()}};
		outcome.text = std::string("error: ") + e.what() + "\n";
	}
	catch (const Error &e)
	{
		err << "plesken-lab: " << e.what() << "\n";
		outcome.exit_code = usage_error;
		outcome.payload = Json{{"error", e.what()}};
		outcome.text = std::string("error: ") + e.what() + "\n";
	}

	if (opt.format == "json")
	{
		report["payload"] = std::move(outcome.payload);
		report["exit_code"] = outcome.exit_code;
		out << report.dump(2) << "\n";
	}
	else
		out << outcome.text;
	return outcome.exit_code;
}

} // namespace plesken::cli
