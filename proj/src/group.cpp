#include "plesken/group.hpp"

#include "plesken/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace plesken {

namespace {

constexpr Element unset = static_cast<Element>(-1);

// Above this order associativity is checked on a fixed pseudo-random sample
// of triples instead of all n^3.
constexpr std::size_t full_associativity_limit = 512;
constexpr std::size_t associativity_samples = 2'000'000;

std::string power_label(const char *base, unsigned k)
{
	if (k == 0)
		return "e";
	if (k == 1)
		return base;
	return std::string(base) + "^" + std::to_string(k);
}

GroupPtr build_cyclic(const GroupSpec &spec)
{
	unsigned n = spec.param;
	std::vector<Element> table(std::size_t(n) * n);
	std::vector<std::string> labels;
	for (unsigned x = 0; x < n; ++x)
	{
		labels.push_back(power_label("a", x));
		for (unsigned y = 0; y < n; ++y)
			table[std::size_t(x) * n + y] = (x + y) % n;
	}
	return std::make_shared<FiniteGroup>(spec.to_string(), std::move(table),
	                                     std::move(labels), spec);
}

std::string cycle_label(const std::vector<unsigned> &perm)
{
	// perm is 0-based one-line notation: point i maps to perm[i]
	std::size_t n = perm.size();
	std::string sep = n >= 10 ? "," : "";
	std::vector<bool> seen(n, false);
	std::string out;
	for (std::size_t start = 0; start < n; ++start)
	{
		if (seen[start] || perm[start] == start)
			continue;
		out += "(";
		std::size_t i = start;
		bool first = true;
		while (!seen[i])
		{
			seen[i] = true;
			if (!first)
				out += sep;
			out += std::to_string(i + 1);
			first = false;
			i = perm[i];
		}
		out += ")";
	}
	return out.empty() ? "e" : out;
}

GroupPtr build_symmetric(const GroupSpec &spec)
{
	unsigned n = spec.param;
	std::vector<std::vector<unsigned>> perms;
	std::vector<unsigned> p(n);
	std::iota(p.begin(), p.end(), 0u);
	do
		perms.push_back(p);
	while (std::next_permutation(p.begin(), p.end()));

	std::map<std::vector<unsigned>, Element> index;
	for (std::size_t k = 0; k < perms.size(); ++k)
		index.emplace(perms[k], static_cast<Element>(k));

	std::size_t order = perms.size();
	std::vector<Element> table(order * order);
	std::vector<unsigned> prod(n);
	for (std::size_t x = 0; x < order; ++x)
		for (std::size_t y = 0; y < order; ++y)
		{
			// (xy)(i) = x(y(i)): y acts first
			for (unsigned i = 0; i < n; ++i)
				prod[i] = perms[x][perms[y][i]];
			table[x * order + y] = index.at(prod);
		}

	std::vector<std::string> labels;
	for (const auto &perm : perms)
		labels.push_back(cycle_label(perm));
	return std::make_shared<FiniteGroup>(spec.to_string(), std::move(table),
	                                     std::move(labels), spec);
}

GroupPtr build_dihedral(const GroupSpec &spec)
{
	// r^k -> k, r^k s -> n + k
	unsigned n = spec.param;
	std::size_t order = 2 * std::size_t(n);
	std::vector<Element> table(order * order);
	for (std::size_t x = 0; x < order; ++x)
		for (std::size_t y = 0; y < order; ++y)
		{
			unsigned a = x % n, i = x / n;
			unsigned b = y % n, j = y / n;
			unsigned rot = i == 0 ? (a + b) % n : (a + n - b) % n;
			table[x * order + y] = (i ^ j) * n + rot;
		}

	std::vector<std::string> labels;
	for (unsigned k = 0; k < n; ++k)
		labels.push_back(power_label("r", k));
	for (unsigned k = 0; k < n; ++k)
		labels.push_back(k == 0 ? std::string("s") : power_label("r", k) + "s");
	return std::make_shared<FiniteGroup>(spec.to_string(), std::move(table),
	                                     std::move(labels), spec);
}

GroupPtr build_klein4(const GroupSpec &spec)
{
	std::vector<Element> table(16);
	for (Element x = 0; x < 4; ++x)
		for (Element y = 0; y < 4; ++y)
			table[x * 4 + y] = x ^ y;
	return std::make_shared<FiniteGroup>(spec.to_string(), std::move(table),
	                                     std::vector<std::string>{"e", "a", "b", "c"},
	                                     spec);
}

GroupPtr build_heisenberg(const GroupSpec &spec)
{
	// (a,b,c) is the matrix [[1,a,b],[0,1,c],[0,0,1]], index a*p^2 + b*p + c
	unsigned p = spec.param;
	std::size_t order = std::size_t(p) * p * p;
	auto encode = [p](unsigned a, unsigned b, unsigned c) {
		return static_cast<Element>((a * p + b) * p + c);
	};
	std::vector<Element> table(order * order);
	std::vector<std::string> labels(order);
	for (unsigned a = 0; a < p; ++a)
		for (unsigned b = 0; b < p; ++b)
			for (unsigned c = 0; c < p; ++c)
			{
				Element x = encode(a, b, c);
				labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
				            std::to_string(c) + ")";
				for (unsigned a2 = 0; a2 < p; ++a2)
					for (unsigned b2 = 0; b2 < p; ++b2)
						for (unsigned c2 = 0; c2 < p; ++c2)
							table[x * order + encode(a2, b2, c2)] =
							    encode((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
			}
	return std::make_shared<FiniteGroup>(spec.to_string(), std::move(table),
	                                     std::move(labels), spec);
}

std::size_t spec_order(const GroupSpec &spec)
{
	switch (spec.kind)
	{
	case GroupKind::cyclic:
		return spec.param;
	case GroupKind::symmetric:
	{
		std::size_t f = 1;
		for (unsigned k = 2; k <= spec.param; ++k)
		{
			f *= k;
			if (f > max_group_order)
				return f;
		}
		return f;
	}
	case GroupKind::dihedral:
		return 2 * std::size_t(spec.param);
	case GroupKind::klein4:
		return 4;
	case GroupKind::heisenberg:
		return std::size_t(spec.param) * spec.param * spec.param;
	}
	return 0;
}

void validate_spec(const GroupSpec &spec)
{
	if (spec.kind == GroupKind::klein4)
	{
		if (spec.param != 4)
			throw InvalidSpec("Klein four-group takes no parameter other than 4");
		return;
	}
	if (spec.param < 1)
		throw InvalidSpec(spec.to_string() + ": parameter must be at least 1");
	if (spec.kind == GroupKind::heisenberg && (spec.param == 2 || !is_prime(spec.param)))
		throw InvalidSpec(spec.to_string() + ": Heisenberg group needs an odd prime");
	if (spec.param > 100000 || spec_order(spec) > max_group_order)
		throw InvalidSpec(spec.to_string() + ": order exceeds " +
		                  std::to_string(max_group_order));
}

} // namespace

bool is_prime(unsigned n)
{
	if (n < 2)
		return false;
	for (unsigned d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

GroupSpec GroupSpec::parse(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
	if (s.size() < 2)
		throw InvalidSpec("cannot parse group spec '" + std::string(text) + "'");

	unsigned param = 0;
	const char *first = s.data() + 1;
	const char *last = s.data() + s.size();
	auto [ptr, ec] = std::from_chars(first, last, param);
	if (ec != std::errc() || ptr != last)
		throw InvalidSpec("cannot parse group spec '" + std::string(text) + "'");

	GroupSpec spec;
	switch (s.front())
	{
	case 'C':
		spec = cyclic(param);
		break;
	case 'S':
		spec = symmetric(param);
		break;
	case 'D':
		spec = dihedral(param);
		break;
	case 'H':
		spec = heisenberg(param);
		break;
	case 'K':
		if (param != 4)
			throw InvalidSpec("only K4 is supported, got '" + std::string(text) + "'");
		spec = klein4();
		break;
	default:
		throw InvalidSpec("unknown group family in '" + std::string(text) + "'");
	}
	validate_spec(spec);
	return spec;
}

std::string GroupSpec::to_string() const
{
	switch (kind)
	{
	case GroupKind::cyclic:
		return "C" + std::to_string(param);
	case GroupKind::symmetric:
		return "S" + std::to_string(param);
	case GroupKind::dihedral:
		return "D" + std::to_string(param);
	case GroupKind::klein4:
		return "K4";
	case GroupKind::heisenberg:
		return "H" + std::to_string(param);
	}
	return "?";
}

FiniteGroup::FiniteGroup(std::string name, std::vector<Element> cayley,
                         std::vector<std::string> labels, std::optional<GroupSpec> spec,
                         std::vector<Element> embedding)
    : name_(std::move(name)), order_(labels.size()), cayley_(std::move(cayley)),
      labels_(std::move(labels)), spec_(spec), embedding_(std::move(embedding))
{
	const std::size_t n = order_;
	if (n == 0)
		throw InvalidGroup(name_ + ": empty group");
	if (cayley_.size() != n * n)
		throw InvalidGroup(name_ + ": Cayley table is not n x n");
	if (!embedding_.empty() && embedding_.size() != n)
		throw InvalidGroup(name_ + ": embedding has wrong length");

	// Latin square: every row and column a permutation of 0..n-1.
	std::vector<std::size_t> stamp(n, n);
	for (std::size_t x = 0; x < n; ++x)
	{
		for (std::size_t y = 0; y < n; ++y)
		{
			Element v = cayley_[x * n + y];
			if (v >= n || stamp[v] == x)
				throw InvalidGroup(name_ + ": row " + std::to_string(x) +
				                   " is not a permutation");
			stamp[v] = x;
		}
	}
	std::fill(stamp.begin(), stamp.end(), n);
	for (std::size_t y = 0; y < n; ++y)
		for (std::size_t x = 0; x < n; ++x)
		{
			Element v = cayley_[x * n + y];
			if (stamp[v] == y)
				throw InvalidGroup(name_ + ": column " + std::to_string(y) +
				                   " is not a permutation");
			stamp[v] = y;
		}

	// Identity: the unique e with e*x = x for all x.
	std::optional<Element> e;
	for (std::size_t c = 0; c < n && !e; ++c)
	{
		bool ok = true;
		for (std::size_t x = 0; x < n && ok; ++x)
			ok = cayley_[c * n + x] == x && cayley_[x * n + c] == x;
		if (ok)
			e = static_cast<Element>(c);
	}
	if (!e)
		throw InvalidGroup(name_ + ": no identity element");
	identity_ = *e;

	inv_.assign(n, unset);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			if (cayley_[x * n + y] == identity_)
			{
				if (cayley_[y * n + x] != identity_)
					throw InvalidGroup(name_ + ": one-sided inverse for " + labels_[x]);
				inv_[x] = static_cast<Element>(y);
				break;
			}
	for (std::size_t x = 0; x < n; ++x)
		if (inv_[x] == unset)
			throw InvalidGroup(name_ + ": " + labels_[x] + " has no inverse");

	auto associative = [&](std::size_t x, std::size_t y, std::size_t z) {
		return cayley_[cayley_[x * n + y] * n + z] == cayley_[x * n + cayley_[y * n + z]];
	};
	if (n <= full_associativity_limit)
	{
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				for (std::size_t z = 0; z < n; ++z)
					if (!associative(x, y, z))
						throw InvalidGroup(name_ + ": multiplication is not associative");
	}
	else
	{
		std::mt19937_64 rng(0x5eed);
		std::uniform_int_distribution<std::size_t> pick(0, n - 1);
		for (std::size_t k = 0; k < associativity_samples; ++k)
			if (!associative(pick(rng), pick(rng), pick(rng)))
				throw InvalidGroup(name_ + ": multiplication is not associative");
	}
}

void FiniteGroup::check_index(Element x) const
{
	if (x >= order_)
		throw IndexOutOfRange("element " + std::to_string(x) + " in group " + name_ +
		                      " of order " + std::to_string(order_));
}

Element FiniteGroup::mul(Element x, Element y) const
{
	check_index(x);
	check_index(y);
	return mul_unchecked(x, y);
}

Element FiniteGroup::inverse(Element x) const
{
	check_index(x);
	return inv_[x];
}

const std::string &FiniteGroup::label(Element x) const
{
	check_index(x);
	return labels_[x];
}

std::optional<Element> FiniteGroup::find(std::string_view label) const
{
	for (std::size_t x = 0; x < order_; ++x)
		if (labels_[x] == label)
			return static_cast<Element>(x);
	return std::nullopt;
}

std::size_t FiniteGroup::involution_count() const
{
	std::size_t count = 0;
	for (std::size_t x = 0; x < order_; ++x)
		count += inv_[x] == x;
	return count;
}

bool FiniteGroup::is_abelian() const
{
	for (std::size_t x = 0; x < order_; ++x)
		for (std::size_t y = x + 1; y < order_; ++y)
			if (cayley_[x * order_ + y] != cayley_[y * order_ + x])
				return false;
	return true;
}

bool operator==(const FiniteGroup &a, const FiniteGroup &b)
{
	return a.cayley_ == b.cayley_ && a.labels_ == b.labels_;
}

bool same_group(const GroupPtr &a, const GroupPtr &b)
{
	if (a == b)
		return true;
	return a && b && *a == *b;
}

GroupPtr build_group(const GroupSpec &spec)
{
	validate_spec(spec);
	switch (spec.kind)
	{
	case GroupKind::cyclic:
		return build_cyclic(spec);
	case GroupKind::symmetric:
		return build_symmetric(spec);
	case GroupKind::dihedral:
		return build_dihedral(spec);
	case GroupKind::klein4:
		return build_klein4(spec);
	case GroupKind::heisenberg:
		return build_heisenberg(spec);
	}
	throw InvalidSpec("unknown group kind");
}

bool validate_hom(const GroupHom &h)
{
	if (!h.domain || !h.codomain)
		return false;
	const FiniteGroup &g = *h.domain;
	const FiniteGroup &k = *h.codomain;
	if (h.image.size() != g.order())
		return false;
	for (Element v : h.image)
		if (v >= k.order())
			return false;
	if (h.image[g.identity()] != k.identity())
		return false;
	for (Element x = 0; x < g.order(); ++x)
		for (Element y = 0; y < g.order(); ++y)
			if (h.image[g.mul_unchecked(x, y)] !=
			    k.mul_unchecked(h.image[x], h.image[y]))
				return false;
	return true;
}

void require_hom(const GroupHom &h)
{
	if (!validate_hom(h))
		throw InvalidHom("map " + (h.domain ? h.domain->name() : "?") + " -> " +
		                 (h.codomain ? h.codomain->name() : "?") +
		                 " is not a group homomorphism");
}

GroupHom identity_hom(const GroupPtr &g)
{
	GroupHom h{g, g, std::vector<Element>(g->order())};
	std::iota(h.image.begin(), h.image.end(), Element{0});
	return h;
}

GroupHom trivial_hom(const GroupPtr &g, const GroupPtr &h)
{
	return GroupHom{g, h, std::vector<Element>(g->order(), h->identity())};
}

GroupHom compose_homs(const GroupHom &f2, const GroupHom &f1)
{
	if (!same_group(f1.codomain, f2.domain))
		throw DomainMismatch("cannot compose " + f1.domain->name() + " -> " +
		                     f1.codomain->name() + " with " + f2.domain->name() +
		                     " -> " + f2.codomain->name());
	GroupHom out{f1.domain, f2.codomain, std::vector<Element>(f1.image.size())};
	for (std::size_t x = 0; x < f1.image.size(); ++x)
		out.image[x] = f2.image.at(f1.image[x]);
	require_hom(out);
	return out;
}

std::vector<Element> closure(const FiniteGroup &g, std::span<const Element> gens)
{
	std::vector<char> seen(g.order(), 0);
	std::vector<Element> members{g.identity()};
	seen[g.identity()] = 1;
	for (std::size_t k = 0; k < members.size(); ++k)
		for (Element s : gens)
		{
			Element y = g.mul(members[k], s);
			if (!seen[y])
			{
				seen[y] = 1;
				members.push_back(y);
			}
		}
	std::sort(members.begin(), members.end());
	return members;
}

std::vector<Element> generating_set(const FiniteGroup &g)
{
	std::vector<Element> gens;
	std::vector<Element> current{g.identity()};
	for (Element x = 0; x < g.order() && current.size() < g.order(); ++x)
	{
		if (std::binary_search(current.begin(), current.end(), x))
			continue;
		gens.push_back(x);
		current = closure(g, gens);
	}
	return gens;
}

std::vector<GroupHom> enumerate_homs(const GroupPtr &g, const GroupPtr &h)
{
	const std::vector<Element> gens = generating_set(*g);
	const std::size_t target = h->order();
	double space = std::pow(static_cast<double>(target), static_cast<double>(gens.size()));
	if (space > max_hom_search)
		throw SearchTooLarge("hom search " + g->name() + " -> " + h->name() + " needs " +
		                     std::to_string(target) + "^" + std::to_string(gens.size()) +
		                     " candidates");

	std::vector<GroupHom> out;
	std::vector<Element> choice(gens.size(), 0);
	std::vector<Element> image(g->order());
	std::vector<Element> queue;
	queue.reserve(g->order());

	while (true)
	{
		// Extend the generator images along the right Cayley graph; any
		// inconsistency on an edge rules the candidate out.
		std::fill(image.begin(), image.end(), unset);
		image[g->identity()] = h->identity();
		queue.assign(1, g->identity());
		bool consistent = true;
		for (std::size_t k = 0; k < queue.size() && consistent; ++k)
		{
			Element x = queue[k];
			for (std::size_t t = 0; t < gens.size(); ++t)
			{
				Element y = g->mul_unchecked(x, gens[t]);
				Element v = h->mul_unchecked(image[x], choice[t]);
				if (image[y] == unset)
				{
					image[y] = v;
					queue.push_back(y);
				}
				else if (image[y] != v)
				{
					consistent = false;
					break;
				}
			}
		}
		if (consistent)
		{
			GroupHom f{g, h, image};
			if (validate_hom(f))
				out.push_back(std::move(f));
		}

		std::size_t pos = 0;
		while (pos < choice.size() && ++choice[pos] == target)
			choice[pos++] = 0;
		if (pos == choice.size())
			break;
	}

	std::sort(out.begin(), out.end(),
	          [](const GroupHom &a, const GroupHom &b) { return a.image < b.image; });
	return out;
}

GroupPtr make_subgroup(const GroupPtr &g, std::span<const Element> elements, std::string name)
{
	const std::size_t m = elements.size();
	std::vector<Element> local(g->order(), unset);
	for (std::size_t k = 0; k < m; ++k)
		local[elements[k]] = static_cast<Element>(k);

	std::vector<Element> table(m * m);
	for (std::size_t x = 0; x < m; ++x)
		for (std::size_t y = 0; y < m; ++y)
		{
			Element v = local[g->mul(elements[x], elements[y])];
			if (v == unset)
				throw InvalidGroup(name + ": subset is not closed");
			table[x * m + y] = v;
		}

	std::vector<std::string> labels;
	for (Element x : elements)
		labels.push_back(g->label(x));

	std::vector<Element> embedding(elements.begin(), elements.end());
	if (!g->embedding().empty())
		for (Element &x : embedding)
			x = g->embedding()[x];
	return std::make_shared<FiniteGroup>(std::move(name), std::move(table),
	                                     std::move(labels), g->spec(),
	                                     std::move(embedding));
}

std::vector<GroupPtr> enumerate_subgroups(const GroupPtr &g)
{
	if (g->order() > max_subgroup_search_order)
		throw SearchTooLarge("subgroup search on " + g->name() + " of order " +
		                     std::to_string(g->order()) + " (limit " +
		                     std::to_string(max_subgroup_search_order) + ")");

	// Every subgroup is a join of cyclic subgroups: start from the cyclic ones
	// and join with cyclic subgroups until nothing new appears.
	std::set<std::vector<Element>> cyclic;
	std::vector<Element> cyclic_gen;
	for (Element x = 0; x < g->order(); ++x)
	{
		Element gen[] = {x};
		if (cyclic.insert(closure(*g, gen)).second)
			cyclic_gen.push_back(x);
	}

	std::set<std::vector<Element>> found(cyclic.begin(), cyclic.end());
	std::vector<std::vector<Element>> frontier(cyclic.begin(), cyclic.end());
	while (!frontier.empty())
	{
		std::vector<std::vector<Element>> next;
		for (const auto &sub : frontier)
			for (Element c : cyclic_gen)
			{
				if (std::binary_search(sub.begin(), sub.end(), c))
					continue;
				std::vector<Element> gens = sub;
				gens.push_back(c);
				auto joined = closure(*g, gens);
				if (found.insert(joined).second)
					next.push_back(std::move(joined));
			}
		frontier = std::move(next);
	}

	std::vector<std::vector<Element>> subsets(found.begin(), found.end());
	std::sort(subsets.begin(), subsets.end(), [](const auto &a, const auto &b) {
		return a.size() != b.size() ? a.size() < b.size() : a < b;
	});

	std::vector<GroupPtr> out;
	for (std::size_t k = 0; k < subsets.size(); ++k)
		out.push_back(make_subgroup(g, subsets[k], g->name() + "#" + std::to_string(k)));
	return out;
}

} // namespace plesken
