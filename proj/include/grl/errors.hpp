#pragma once

#include <stdexcept>
#include <string>

namespace grl {

// Base for all domain errors. `code()` is a stable machine-readable tag,
// used verbatim in CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GRL_DEFINE_ERROR(NAME, CODE)                         \
    class NAME : public Error {                              \
    public:                                                  \
        explicit NAME(const std::string& message)            \
            : Error(CODE, message) {}                        \
    }

GRL_DEFINE_ERROR(DimensionMismatch, "dimension_mismatch");
GRL_DEFINE_ERROR(FieldMismatch, "field_mismatch");
GRL_DEFINE_ERROR(InvalidComplex, "invalid_complex");
GRL_DEFINE_ERROR(IndexOutOfRange, "index_out_of_range");
GRL_DEFINE_ERROR(NotStabilized, "not_stabilized");
GRL_DEFINE_ERROR(GridMismatch, "grid_mismatch");
GRL_DEFINE_ERROR(NotExact, "not_exact");
GRL_DEFINE_ERROR(UTailNotTrivial, "u_tail_not_trivial");
GRL_DEFINE_ERROR(NoSolution, "no_solution");
GRL_DEFINE_ERROR(BlockStructureViolated, "block_structure_violated");
GRL_DEFINE_ERROR(PreconditionFailed, "precondition_failed");
GRL_DEFINE_ERROR(NotACycle, "not_a_cycle");
GRL_DEFINE_ERROR(WordBoundaryMismatch, "word_boundary_mismatch");
GRL_DEFINE_ERROR(H1Nonzero, "h1_nonzero");
GRL_DEFINE_ERROR(PatternMismatch, "pattern_mismatch");
GRL_DEFINE_ERROR(DimMismatch, "dim_mismatch");
GRL_DEFINE_ERROR(UnsupportedClass, "unsupported_class");
GRL_DEFINE_ERROR(RadiusTooLarge, "radius_too_large");
GRL_DEFINE_ERROR(BadInput, "bad_input");

#undef GRL_DEFINE_ERROR

// Filtration-dominance hypothesis failures carry which hypothesis broke.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(std::string which, const std::string& message)
        : Error("hypothesis_violated", which + ": " + message), which_(std::move(which)) {}

    const std::string& which() const { return which_; }

private:
    std::string which_;
};

} // namespace grl
