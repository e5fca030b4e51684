#pragma once

#include <stdexcept>
#include <string>

namespace ftq {

/// Coarse classification used by the command line to pick an exit code.
enum class ErrorCategory {
  Usage,         // bad input text, unknown names, ill-typed bordisms
  Mathematical,  // a mathematical precondition does not hold
  Resource,      // a configured size cap would be exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), category_(category), kind_(std::move(kind)) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorCategory category_;
  std::string kind_;
};

#define FTQ_DEFINE_ERROR(Name, Category)                                  \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(Category, #Name, what) {} \
  }

FTQ_DEFINE_ERROR(InvalidInput, ErrorCategory::Usage);
FTQ_DEFINE_ERROR(SyntaxError, ErrorCategory::Usage);
FTQ_DEFINE_ERROR(TypeError, ErrorCategory::Usage);

FTQ_DEFINE_ERROR(NotAGroup, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(GroupMismatch, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotAnAction, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotAFunctor, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotAGroupoid, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotIsoInvariant, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotClassInvariant, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(MapNotInGroup, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotInvariant, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(DependentGenerators, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(ValidationFailed, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(InsufficientPrimes, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NonIntegerMultiplicity, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotDiagonalizable, ErrorCategory::Mathematical);
FTQ_DEFINE_ERROR(NotEigenvector, ErrorCategory::Mathematical);

FTQ_DEFINE_ERROR(TooLarge, ErrorCategory::Resource);
FTQ_DEFINE_ERROR(SizeCap, ErrorCategory::Resource);
FTQ_DEFINE_ERROR(MemoryCap, ErrorCategory::Resource);
FTQ_DEFINE_ERROR(ResourceCap, ErrorCategory::Resource);

#undef FTQ_DEFINE_ERROR

}  // namespace ftq
