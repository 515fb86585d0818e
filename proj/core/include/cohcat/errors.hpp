#ifndef COHCAT_ERRORS_HPP
#define COHCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cohcat {

// Every failure mode has its own type so callers (and the CLI exit-code
// mapping) can tell validation problems from size limits apart.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};
struct AxiomViolation : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct SizeOverflow : Error {
  using Error::Error;
};
struct UnknownObject : Error {
  using Error::Error;
};
struct NoLimit : Error {
  using Error::Error;
};
struct NoFactorization : Error {
  using Error::Error;
};
struct NoUnion : Error {
  using Error::Error;
};
struct NotBoolean : Error {
  using Error::Error;
};
struct NotLex : Error {
  using Error::Error;
};
struct NotNatural : Error {
  using Error::Error;
};
struct NotRegular : Error {
  using Error::Error;
};
struct NotCoherent : Error {
  using Error::Error;
};
struct NotCoherentModel : Error {
  using Error::Error;
};
struct MissingCoproduct : Error {
  using Error::Error;
};

}  // namespace cohcat

#endif
