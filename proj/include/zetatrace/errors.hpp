#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zetatrace {

// Every library error carries the module it originated in plus a stable error
// name, so callers (and the CLI) can report "[module] Name: detail" verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string module, std::string name, const std::string& detail)
        : std::runtime_error("[" + module + "] " + name + ": " + detail),
          module_(std::move(module)),
          name_(std::move(name)) {}

    const std::string& module() const noexcept { return module_; }
    const std::string& name() const noexcept { return name_; }

private:
    std::string module_;
    std::string name_;
};

#define ZT_DEFINE_ERROR(ClassName, default_module)                          \
    class ClassName : public Error {                                        \
    public:                                                                  \
        explicit ClassName(const std::string& detail,                       \
                           std::string module = default_module)             \
            : Error(std::move(module), #ClassName, detail) {}               \
    };

ZT_DEFINE_ERROR(CompositeModulus, "field_core")
ZT_DEFINE_ERROR(InvalidDegree, "field_core")
ZT_DEFINE_ERROR(EnumerationTooLarge, "variety_counter")
ZT_DEFINE_ERROR(NotHomogeneous, "variety_counter")
ZT_DEFINE_ERROR(ParseError, "variety_counter")
ZT_DEFINE_ERROR(NotExponentiable, "series_ring")
ZT_DEFINE_ERROR(NotLoggable, "series_ring")
ZT_DEFINE_ERROR(NotRational, "series_ring")
ZT_DEFINE_ERROR(InsufficientTerms, "series_ring")
ZT_DEFINE_ERROR(FactorizationMismatch, "zeta_engine")
ZT_DEFINE_ERROR(IrrationalCharPoly, "zeta_engine")
ZT_DEFINE_ERROR(FieldMismatch, "trace_cohomology")
ZT_DEFINE_ERROR(NotAlgebraicInteger, "trace_cohomology")
ZT_DEFINE_ERROR(InvalidMatrix, "trace_cohomology")
ZT_DEFINE_ERROR(RankDeficient, "trace_cohomology")
ZT_DEFINE_ERROR(InertPrime, "cm_gross")
ZT_DEFINE_ERROR(NormalizationFailure, "cm_gross")
ZT_DEFINE_ERROR(NormMismatch, "cm_gross")
ZT_DEFINE_ERROR(InconsistentCounts, "weil_verifier")
ZT_DEFINE_ERROR(NumericalFailure, "weil_verifier")

#undef ZT_DEFINE_ERROR

}  // namespace zetatrace
