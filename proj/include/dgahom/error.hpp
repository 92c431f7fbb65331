#pragma once

#include <stdexcept>
#include <string>

namespace dgahom {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DGAHOM_DEFINE_ERROR(NAME)                                   \
    struct NAME : Error {                                           \
        explicit NAME(const std::string& what) : Error(what) {}     \
    }

DGAHOM_DEFINE_ERROR(MixedAlgebraError);
DGAHOM_DEFINE_ERROR(DegreeOutOfRangeError);
DGAHOM_DEFINE_ERROR(NotExactError);
DGAHOM_DEFINE_ERROR(NonzeroObstructionError);
DGAHOM_DEFINE_ERROR(ValidationError);
DGAHOM_DEFINE_ERROR(ParseError);
DGAHOM_DEFINE_ERROR(MissingWeightsError);
DGAHOM_DEFINE_ERROR(WeightInhomogeneousDifferentialError);
DGAHOM_DEFINE_ERROR(BaseMismatchError);
DGAHOM_DEFINE_ERROR(LevelMismatchError);
DGAHOM_DEFINE_ERROR(InvalidEtaError);
DGAHOM_DEFINE_ERROR(InvalidProblemError);
DGAHOM_DEFINE_ERROR(UnknownSchemaError);
DGAHOM_DEFINE_ERROR(DegenerateDirectionError);
DGAHOM_DEFINE_ERROR(DimensionTooLargeError);
DGAHOM_DEFINE_ERROR(NotInWError);
DGAHOM_DEFINE_ERROR(TPowerCapError);

#undef DGAHOM_DEFINE_ERROR

}  // namespace dgahom
