#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace signil {

// failure kinds surfaced by construction, parsing and analysis routines
enum class errc {
  malformed_table,
  no_identity,
  no_inverse,
  not_associative,
  cap_exceeded,
  not_bijection,
  not_automorphism,
  not_homomorphism,
  not_normal,
  precondition_violated,
  internal_inconsistency,
  syntax_error,
  semantic_error,
  overlap_error,
  io_error,
};

inline const char *errc_name(errc c)
{
  switch (c) {
  case errc::malformed_table: return "MalformedTable";
  case errc::no_identity: return "NoIdentity";
  case errc::no_inverse: return "NoInverse";
  case errc::not_associative: return "NotAssociative";
  case errc::cap_exceeded: return "CapExceeded";
  case errc::not_bijection: return "NotBijection";
  case errc::not_automorphism: return "NotAutomorphism";
  case errc::not_homomorphism: return "NotHomomorphism";
  case errc::not_normal: return "NotNormal";
  case errc::precondition_violated: return "PreconditionViolated";
  case errc::internal_inconsistency: return "InternalInconsistency";
  case errc::syntax_error: return "SyntaxError";
  case errc::semantic_error: return "SemanticError";
  case errc::overlap_error: return "OverlapError";
  case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string &msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), _code(code)
  {}

  errc code() const noexcept { return _code; }

private:
  errc _code;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string &msg, std::size_t line, std::size_t column)
    : Error(errc::syntax_error,
            msg + " (line " + std::to_string(line) + ", column "
              + std::to_string(column) + ")"),
      _line(line),
      _column(column)
  {}

  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

private:
  std::size_t _line, _column;
};

// carries how far a capped enumeration got
class CapExceeded : public Error {
public:
  CapExceeded(const std::string &msg, std::size_t partial)
    : Error(errc::cap_exceeded,
            msg + " (progress: " + std::to_string(partial) + ")"),
      _partial(partial)
  {}

  std::size_t partial() const noexcept { return _partial; }

private:
  std::size_t _partial;
};

[[noreturn]] inline void fail(errc c, const std::string &msg)
{
  throw Error(c, msg);
}

} // namespace signil
