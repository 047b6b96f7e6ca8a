#pragma once

#include <stdexcept>
#include <string>

namespace tga {

/// Base of every error raised by the library. `kind()` is the stable,
/// machine-readable tag emitted by the CLI in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TGA_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(#Name, what) {}          \
  };

TGA_DEFINE_ERROR(NotAGroup)
TGA_DEFINE_ERROR(NotAbelian)
TGA_DEFINE_ERROR(NotCommuting)
TGA_DEFINE_ERROR(CollectionDiverged)
TGA_DEFINE_ERROR(ResourceBudgetExceeded)
TGA_DEFINE_ERROR(TooManyClasses)
TGA_DEFINE_ERROR(DegenerateCocycle)
TGA_DEFINE_ERROR(InternalInconsistency)
TGA_DEFINE_ERROR(CrosscheckInconclusive)
TGA_DEFINE_ERROR(BadCatalogId)
TGA_DEFINE_ERROR(UnsupportedCase)
TGA_DEFINE_ERROR(UndeclaredGenerator)
TGA_DEFINE_ERROR(MissingOrder)
TGA_DEFINE_ERROR(InvalidArgument)
TGA_DEFINE_ERROR(FormatError)

#undef TGA_DEFINE_ERROR

/// The 2-cocycle identity fails at (x, y, z).
class NotACocycle : public Error {
 public:
  NotACocycle(const std::string& what, int x = -1, int y = -1, int z = -1)
      : Error("NotACocycle", what), x(x), y(y), z(z) {}
  int x, y, z;
};

class NotMultiplicative : public Error {
 public:
  NotMultiplicative(const std::string& what, int g, int h)
      : Error("NotMultiplicative", what), g(g), h(h) {}
  int g, h;
};

class WrongOrder : public Error {
 public:
  WrongOrder(const std::string& what, int power)
      : Error("WrongOrder", what), power(power) {}
  int power;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError", what + " at line " + std::to_string(line) +
                                ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line, column;
};

}  // namespace tga
