#ifndef RAMIFY2_ERRORS_HPP
#define RAMIFY2_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramify2 {

// Everything thrown by the library derives from error, so callers can map
// library failures to a single exit path while still telling the classes
// apart when they need to.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (slope contents, rationals, catalog files, override
// files).  Carries the byte offset of the first offending character.
class syntax_error : public error {
  public:
    syntax_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Structurally valid input that violates a documented precondition or
// invariant: slope out of range, tame degree sharing a factor with p,
// nu outside its stage window, unknown cap class, and so on.
class domain_error : public error {
  public:
    using error::error;
};

// Requested composition cannot satisfy the wild-slope budget.
class infeasible_error : public domain_error {
  public:
    using domain_error::domain_error;
};

// Degree-6 local caps are intentionally not defined.
class twin_algebra_error : public domain_error {
  public:
    using domain_error::domain_error;
};

// The discriminant-bound table has no row strong enough for the request.
class no_bound_error : public domain_error {
  public:
    using domain_error::domain_error;
};

// Catalog integrity problems: duplicate records, dangling references,
// missing degrees.
class catalog_error : public error {
  public:
    using error::error;
};

}  // namespace ramify2

#endif
