#pragma once

#include <stdexcept>
#include <string>

namespace gxstplc {

// Base for every error raised by the library. The `kind()` string is the
// stable name reported by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define GXSTPLC_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

GXSTPLC_DEFINE_ERROR(InvalidArgument);
GXSTPLC_DEFINE_ERROR(SingularMatrix);
GXSTPLC_DEFINE_ERROR(DuplicateNodes);
GXSTPLC_DEFINE_ERROR(FieldMismatch);
GXSTPLC_DEFINE_ERROR(Infeasible);
GXSTPLC_DEFINE_ERROR(Unbounded);
GXSTPLC_DEFINE_ERROR(ScaleExceeded);
GXSTPLC_DEFINE_ERROR(InvalidPattern);
GXSTPLC_DEFINE_ERROR(DegeneratePattern);
GXSTPLC_DEFINE_ERROR(DegenerateConfig);
GXSTPLC_DEFINE_ERROR(DegenerateInput);
GXSTPLC_DEFINE_ERROR(FieldTooSmall);
GXSTPLC_DEFINE_ERROR(DimensionMismatch);
GXSTPLC_DEFINE_ERROR(UnknownDemo);

#undef GXSTPLC_DEFINE_ERROR

} // namespace gxstplc
