#pragma once

#include <stdexcept>
#include <string>

namespace plesken {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

#define PLESKEN_DEFINE_ERROR(Name)                                             \
	class Name : public Error                                                  \
	{                                                                          \
	public:                                                                    \
		explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
	}

PLESKEN_DEFINE_ERROR(InvalidSpec);
PLESKEN_DEFINE_ERROR(InvalidGroup);
PLESKEN_DEFINE_ERROR(IndexOutOfRange);
PLESKEN_DEFINE_ERROR(SearchTooLarge);
PLESKEN_DEFINE_ERROR(DomainMismatch);
PLESKEN_DEFINE_ERROR(GroupMismatch);
PLESKEN_DEFINE_ERROR(InvalidHom);
PLESKEN_DEFINE_ERROR(NotInSpan);
PLESKEN_DEFINE_ERROR(BasisMismatch);
PLESKEN_DEFINE_ERROR(InvalidPrime);
PLESKEN_DEFINE_ERROR(ParseError);

#undef PLESKEN_DEFINE_ERROR

} // namespace plesken
