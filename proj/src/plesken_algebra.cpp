#include "plesken/plesken_algebra.hpp"

#include "plesken/error.hpp"

namespace plesken {

AlgebraElement hat(const GroupPtr &group, Element g)
{
	Element ginv = group->inverse(g);
	AlgebraElement out(group);
	out.add_term(g, 1);
	out.add_term(ginv, -1);
	return out;
}

PleskenBasis::PleskenBasis(GroupPtr group)
    : group_(std::move(group)), slots_(group_->order())
{
	for (Element g = 0; g < group_->order(); ++g)
	{
		Element ginv = group_->inverse_unchecked(g);
		if (g < ginv)
		{
			slots_[g] = Slot{reps_.size(), +1};
			slots_[ginv] = Slot{reps_.size(), -1};
			reps_.push_back(g);
		}
	}
}

std::optional<PleskenBasis::Slot> PleskenBasis::slot(Element g) const
{
	if (g >= slots_.size())
		throw IndexOutOfRange("element " + std::to_string(g) + " in " + group_->name());
	return slots_[g];
}

BasisPtr canonical_basis(const GroupPtr &group)
{
	return std::make_shared<const PleskenBasis>(group);
}

PleskenElement::PleskenElement(BasisPtr basis) : basis_(std::move(basis))
{
	if (!basis_)
		throw BasisMismatch("Plesken element without a basis");
}

PleskenElement::PleskenElement(BasisPtr basis, Coords coords)
    : PleskenElement(std::move(basis))
{
	for (auto &[k, c] : coords)
		add_coord(k, c);
}

PleskenElement PleskenElement::unit(BasisPtr basis, std::size_t position, Scalar k)
{
	PleskenElement out(std::move(basis));
	out.add_coord(position, k);
	return out;
}

Scalar PleskenElement::coord(std::size_t position) const
{
	auto it = coords_.find(position);
	return it == coords_.end() ? Scalar() : it->second;
}

void PleskenElement::add_coord(std::size_t position, const Scalar &k)
{
	if (position >= basis_->dim())
		throw IndexOutOfRange("coordinate " + std::to_string(position) +
		                      " in Plesken basis of dimension " +
		                      std::to_string(basis_->dim()));
	if (k.is_zero())
		return;
	auto [it, inserted] = coords_.try_emplace(position, k);
	if (!inserted)
	{
		it->second += k;
		if (it->second.is_zero())
			coords_.erase(it);
	}
}

PleskenElement &PleskenElement::operator+=(const PleskenElement &o)
{
	require_same_basis(*this, o);
	for (const auto &[k, c] : o.coords_)
		add_coord(k, c);
	return *this;
}

PleskenElement &PleskenElement::operator-=(const PleskenElement &o)
{
	require_same_basis(*this, o);
	for (const auto &[k, c] : o.coords_)
		add_coord(k, -c);
	return *this;
}

PleskenElement operator*(const Scalar &k, const PleskenElement &x)
{
	PleskenElement out(x.basis_);
	if (k.is_zero())
		return out;
	for (const auto &[pos, c] : x.coords_)
		out.coords_.emplace(pos, k * c);
	return out;
}

bool operator==(const PleskenElement &a, const PleskenElement &b)
{
	return (a.basis_ == b.basis_ || *a.basis_ == *b.basis_) && a.coords_ == b.coords_;
}

void require_same_basis(const PleskenElement &x, const PleskenElement &y)
{
	if (x.basis() != y.basis() && !(*x.basis() == *y.basis()))
		throw BasisMismatch("Plesken elements over " + x.basis()->group()->name() +
		                    " and " + y.basis()->group()->name());
}

PleskenElement reduce(const BasisPtr &basis, const AlgebraElement &x)
{
	if (!same_group(basis->group(), x.group()))
		throw GroupMismatch("reducing an element of " + x.group()->name() +
		                    " in the Plesken basis of " + basis->group()->name());

	// Read each coordinate off the representative's coefficient, then subtract
	// the reconstruction; anything left over lies outside span{hat g}.
	PleskenElement out(basis);
	AlgebraElement residual = x;
	for (std::size_t k = 0; k < basis->dim(); ++k)
	{
		Scalar c = x.coefficient(basis->rep(k));
		if (c.is_zero())
			continue;
		out.add_coord(k, c);
		residual -= c * hat(basis->group(), basis->rep(k));
	}
	if (!residual.is_zero())
	{
		const auto &[g, c] = *residual.terms().begin();
		throw NotInSpan("element of " + x.group()->name() +
		                " has a component outside the Plesken Lie algebra (residual " +
		                c.to_string() + " at " + x.group()->label(g) + ")");
	}
	return out;
}

AlgebraElement embed(const PleskenElement &x)
{
	const BasisPtr &basis = x.basis();
	AlgebraElement out(basis->group());
	for (const auto &[k, c] : x.coords())
	{
		Element g = basis->rep(k);
		out.add_term(g, c);
		out.add_term(basis->group()->inverse_unchecked(g), -c);
	}
	return out;
}

PleskenElement plesken_bracket(const PleskenElement &x, const PleskenElement &y)
{
	require_same_basis(x, y);
	return reduce(x.basis(), lie_bracket(embed(x), embed(y)));
}

bool bracket_expansion_check(const GroupPtr &group, Element g, Element h)
{
	const FiniteGroup &G = *group;
	Element gi = G.inverse(g);
	Element hi = G.inverse(h);
	AlgebraElement lhs = lie_bracket(hat(group, g), hat(group, h));
	AlgebraElement rhs = hat(group, G.mul(g, h)) - hat(group, G.mul(g, hi)) -
	                     hat(group, G.mul(gi, h)) + hat(group, G.mul(gi, hi));
	return lhs == rhs;
}

StructureConstants::StructureConstants(BasisPtr basis)
    : basis_(std::move(basis)), dim_(basis_->dim()), table_(dim_ * dim_ * dim_)
{
	const GroupPtr &group = basis_->group();
	for (std::size_t k = 0; k < dim_; ++k)
		for (std::size_t l = k + 1; l < dim_; ++l)
		{
			PleskenElement br = reduce(
			    basis_, lie_bracket(hat(group, basis_->rep(k)), hat(group, basis_->rep(l))));
			for (const auto &[m, c] : br.coords())
			{
				table_[(k * dim_ + l) * dim_ + m] = c;
				table_[(l * dim_ + k) * dim_ + m] = -c;
			}
		}
}

bool StructureConstants::is_antisymmetric() const
{
	for (std::size_t k = 0; k < dim_; ++k)
		for (std::size_t l = 0; l < dim_; ++l)
			for (std::size_t m = 0; m < dim_; ++m)
				if (at(k, l, m) != -at(l, k, m))
					return false;
	return true;
}

bool StructureConstants::satisfies_jacobi() const
{
	// Only the nonzero c(x,y,m) contribute, so collect them per (x,y) first.
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows(dim_ * dim_);
	for (std::size_t k = 0; k < dim_; ++k)
		for (std::size_t l = 0; l < dim_; ++l)
			for (std::size_t m = 0; m < dim_; ++m)
				if (!at(k, l, m).is_zero())
					rows[k * dim_ + l].emplace_back(m, at(k, l, m));

	std::vector<Scalar> acc(dim_);
	auto accumulate = [&](std::size_t x, std::size_t y, std::size_t z) {
		for (const auto &[m, c] : rows[x * dim_ + y])
			for (const auto &[r, d] : rows[m * dim_ + z])
				acc[r] += c * d;
	};
	for (std::size_t k = 0; k < dim_; ++k)
		for (std::size_t l = 0; l < dim_; ++l)
			for (std::size_t q = 0; q < dim_; ++q)
			{
				std::fill(acc.begin(), acc.end(), Scalar());
				accumulate(k, l, q);
				accumulate(l, q, k);
				accumulate(q, k, l);
				for (const Scalar &s : acc)
					if (!s.is_zero())
						return false;
			}
	return true;
}

std::vector<StructureConstants::Entry> StructureConstants::nonzero_upper() const
{
	std::vector<Entry> out;
	for (std::size_t k = 0; k < dim_; ++k)
		for (std::size_t l = k + 1; l < dim_; ++l)
			for (std::size_t m = 0; m < dim_; ++m)
				if (!at(k, l, m).is_zero())
					out.push_back({k, l, m, at(k, l, m)});
	return out;
}

StructureConstants structure_constants(const BasisPtr &basis)
{
	return StructureConstants(basis);
}

HatMap::HatMap(const GroupHom &f, BasisPtr domain, BasisPtr codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
	require_hom(f);
	if (!same_group(f.domain, domain_->group()) || !same_group(f.codomain, codomain_->group()))
		throw BasisMismatch("homomorphism " + f.domain->name() + " -> " +
		                    f.codomain->name() + " does not match the given bases");
	for (Element g : domain_->reps())
		columns_.push_back(reduce(codomain_, hat(codomain_->group(), f.image[g])));
}

HatMap::HatMap(BasisPtr domain, BasisPtr codomain, std::vector<PleskenElement> columns)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(std::move(columns))
{
	if (columns_.size() != domain_->dim())
		throw BasisMismatch("hat map needs one column per domain basis vector");
	for (const auto &c : columns_)
		if (c.basis() != codomain_ && !(*c.basis() == *codomain_))
			throw BasisMismatch("hat map column outside the codomain");
}

HatMap HatMap::identity(const BasisPtr &basis)
{
	std::vector<PleskenElement> columns;
	for (std::size_t k = 0; k < basis->dim(); ++k)
		columns.push_back(PleskenElement::unit(basis, k));
	return HatMap(basis, basis, std::move(columns));
}

HatMap HatMap::zero(const BasisPtr &domain, const BasisPtr &codomain)
{
	return HatMap(domain, codomain,
	              std::vector<PleskenElement>(domain->dim(), PleskenElement(codomain)));
}

bool HatMap::is_zero() const
{
	for (const auto &c : columns_)
		if (!c.is_zero())
			return false;
	return true;
}

PleskenElement HatMap::operator()(const PleskenElement &x) const
{
	if (x.basis() != domain_ && !(*x.basis() == *domain_))
		throw BasisMismatch("hat map applied outside its domain");
	PleskenElement out(codomain_);
	for (const auto &[k, c] : x.coords())
		out += c * columns_[k];
	return out;
}

bool operator==(const HatMap &a, const HatMap &b)
{
	return *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_ &&
	       a.columns_ == b.columns_;
}

HatMap lift_hom_hat(const GroupHom &f)
{
	return HatMap(f, canonical_basis(f.domain), canonical_basis(f.codomain));
}

HatMap lift_hom_hat(const GroupHom &f, const BasisPtr &domain, const BasisPtr &codomain)
{
	return HatMap(f, domain, codomain);
}

HatMap compose(const HatMap &g, const HatMap &f)
{
	if (!(*f.codomain() == *g.domain()))
		throw BasisMismatch("cannot compose hat maps with mismatched middle algebra");
	std::vector<PleskenElement> columns;
	for (std::size_t k = 0; k < f.domain()->dim(); ++k)
		columns.push_back(g(f.column(k)));
	return HatMap(f.domain(), g.codomain(), std::move(columns));
}

} // namespace plesken
