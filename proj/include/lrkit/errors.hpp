#ifndef LRKIT_ERRORS_HPP
#define LRKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrkit {

/// Base class for all lrkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live over different variable lists / basis sizes.
struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& msg) : Error(msg) {}
};

/// Division by a zero scalar.
struct ZeroDivisor : Error {
  explicit ZeroDivisor(const std::string& msg) : Error(msg) {}
};

/// A fraction-field value was used where a polynomial one is required.
struct ModeMismatch : Error {
  explicit ModeMismatch(const std::string& msg) : Error(msg) {}
};

/// Syntax error in an expression or definition file; 1-based position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

/// Identifier that is neither a ring variable nor a basis element.
struct UnknownSymbol : Error {
  std::string name;
  int line;
  int column;
  UnknownSymbol(const std::string& name_, int line_, int column_)
      : Error("unknown symbol '" + name_ + "' (line " + std::to_string(line_) +
              ", column " + std::to_string(column_) + ")"),
        name(name_),
        line(line_),
        column(column_) {}
};

/// Argument must lie in the augmentation ideal (counit zero).
struct NotInAugmentationIdeal : Error {
  explicit NotInAugmentationIdeal(const std::string& msg) : Error(msg) {}
};

/// Operation undefined on the zero element.
struct ZeroArgument : Error {
  explicit ZeroArgument(const std::string& msg) : Error(msg) {}
};

/// Coalgebra element with no finite primitive-filtration degree in range.
struct NotCocomplete : Error {
  explicit NotCocomplete(const std::string& msg) : Error(msg) {}
};

/// Operation requires a presentation that passed check_axioms.
struct InvalidPresentation : Error {
  explicit InvalidPresentation(const std::string& msg) : Error(msg) {}
};

}  // namespace lrkit

#endif  // LRKIT_ERRORS_HPP
