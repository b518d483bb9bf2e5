#include "plesken/expr.hpp"

#include "plesken/error.hpp"

#include <algorithm>
#include <cctype>

namespace plesken {

namespace {

class Parser
{
public:
	Parser(const GroupPtr &group, std::string_view text) : group_(group), text_(text)
	{
		for (Element x = 0; x < group->order(); ++x)
			labels_.emplace_back(group->label(x), x);
		std::stable_sort(labels_.begin(), labels_.end(), [](const auto &a, const auto &b) {
			return a.first.size() > b.first.size();
		});
	}

	AlgebraElement parse()
	{
		AlgebraElement out(group_);
		skip_ws();
		if (done())
			fail("empty expression");

		bool first = true;
		while (!done())
		{
			int sign = 1;
			if (peek() == '+' || peek() == '-')
			{
				sign = peek() == '-' ? -1 : 1;
				++pos_;
				skip_ws();
			}
			else if (!first)
				fail("expected '+' or '-'");
			first = false;

			auto [g, k] = term();
			out.add_term(g, sign == 1 ? k : -k);
			skip_ws();
		}
		return out;
	}

private:
	std::pair<Element, Scalar> term()
	{
		if (auto g = label())
			return {*g, Scalar(1)};

		Scalar k = coefficient();
		skip_ws();
		if (!done() && peek() == '*')
		{
			++pos_;
			skip_ws();
			auto g = label();
			if (!g)
				fail("expected an element label");
			return {*g, k};
		}
		return {group_->identity(), k};
	}

	std::optional<Element> label()
	{
		for (const auto &[name, x] : labels_)
		{
			if (text_.substr(pos_, name.size()) != name)
				continue;
			std::size_t end = pos_ + name.size();
			if (end < text_.size())
			{
				char c = text_[end];
				if (!std::isspace(static_cast<unsigned char>(c)) && c != '+' && c != '-')
					continue;
			}
			pos_ = end;
			return x;
		}
		return std::nullopt;
	}

	Scalar coefficient()
	{
		if (peek() == '(')
		{
			std::size_t close = text_.find(')', pos_);
			if (close == std::string_view::npos)
				fail("unbalanced parenthesis");
			Scalar k = parse_scalar(text_.substr(pos_ + 1, close - pos_ - 1));
			pos_ = close + 1;
			return k;
		}
		std::size_t start = pos_;
		while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
			++pos_;
		if (!done() && peek() == 'i')
			++pos_;
		if (pos_ == start)
			fail("expected a coefficient or element label");
		return parse_scalar(text_.substr(start, pos_ - start));
	}

	bool done() const { return pos_ >= text_.size(); }
	char peek() const { return text_[pos_]; }
	void skip_ws()
	{
		while (!done() && std::isspace(static_cast<unsigned char>(peek())))
			++pos_;
	}
	[[noreturn]] void fail(const std::string &msg) const
	{
		throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" +
		                 std::string(text_) + "'");
	}

	GroupPtr group_;
	std::string_view text_;
	std::size_t pos_ = 0;
	std::vector<std::pair<std::string, Element>> labels_;
};

std::string coefficient_prefix(const Scalar &k)
{
	if (k.is_real())
	{
		if (k.re() == 1)
			return "";
		if (k.re().get_den() == 1)
			return k.to_string() + "*";
		return "(" + k.to_string() + ")*";
	}
	if (sgn(k.re()) == 0 && (k.im() == 1 || k.im() == -1))
		return k.to_string() + "*";
	return "(" + k.to_string() + ")*";
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	if (s.empty())
		throw ParseError("empty scalar");

	// Split into signed parts; each is a rational or a rational followed by i.
	Scalar out;
	std::size_t pos = 0;
	while (pos < s.size())
	{
		std::size_t end = s.find_first_of("+-", pos + 1);
		std::string part = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
		pos = end == std::string::npos ? s.size() : end;

		bool imaginary = !part.empty() && part.back() == 'i';
		if (imaginary)
		{
			part.pop_back();
			if (!part.empty() && part.back() == '*')
				part.pop_back();
			if (part.empty() || part == "+" || part == "-")
				part += "1";
		}
		mpq_class q = Scalar::parse_rational(part);
		out += imaginary ? Scalar(0, q) : Scalar(q);
	}
	return out;
}

AlgebraElement parse_element(const GroupPtr &group, std::string_view text)
{
	if (text.find_first_not_of(" \t") != std::string_view::npos)
	{
		std::string_view trimmed = text.substr(text.find_first_not_of(" \t"));
		if (trimmed == "0")
			return AlgebraElement(group);
	}
	return Parser(group, text).parse();
}

std::string format_element(const AlgebraElement &x)
{
	if (x.is_zero())
		return "0";
	std::string out;
	for (const auto &[g, k] : x.terms())
	{
		// Pull a leading minus out of real and purely imaginary coefficients.
		bool negative = (k.is_real() && sgn(k.re()) < 0) ||
		                (sgn(k.re()) == 0 && sgn(k.im()) < 0);
		Scalar shown = negative ? -k : k;
		if (out.empty())
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		out += coefficient_prefix(shown) + x.group()->label(g);
	}
	return out;
}

} // namespace plesken
