#pragma once

#include <stdexcept>
#include <string>

namespace covol {

/// Base class for every error raised by the library.
class error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct invalid_input : error {
    using error::error;
};

struct not_squarefree : error {
    using error::error;
};

struct non_fundamental_discriminant : error {
    using error::error;
};

struct discriminant_mismatch : error {
    using error::error;
};

struct invalid_dimension : error {
    using error::error;
};

/// Raised when the multiplicity of the minimal covolume is not determined
/// (odd n with more than one ramified prime).
struct unknown_multiplicity : error {
    using error::error;
};

/// Two candidate fields realize the same minimal covolume.
struct tie_detected : error {
    using error::error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

} // namespace covol
