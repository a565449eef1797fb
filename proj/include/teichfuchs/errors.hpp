#pragma once

#include <stdexcept>
#include <string>

namespace teichfuchs {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TEICHFUCHS_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

TEICHFUCHS_ERROR(MixedDiscriminant);
TEICHFUCHS_ERROR(DivisionByZero);
TEICHFUCHS_ERROR(NotResidue);
TEICHFUCHS_ERROR(BadDenominator);
TEICHFUCHS_ERROR(BadDiscriminant);
TEICHFUCHS_ERROR(NonUnitConstantTerm);
TEICHFUCHS_ERROR(PoleAtPoint);
TEICHFUCHS_ERROR(UnsplittableFactor);
TEICHFUCHS_ERROR(UnsupportedDiscriminant);
TEICHFUCHS_ERROR(NoMatch);
TEICHFUCHS_ERROR(NotApplicable);
TEICHFUCHS_ERROR(SingularFiber);
TEICHFUCHS_ERROR(NotRankTwo);
TEICHFUCHS_ERROR(IrregularSingularity);
TEICHFUCHS_ERROR(IrrationalExponents);
TEICHFUCHS_ERROR(ExponentNormalization);
TEICHFUCHS_ERROR(CongruenceFails);
TEICHFUCHS_ERROR(ExceptionalPrime);
TEICHFUCHS_ERROR(ConstantTermNotUnit);
TEICHFUCHS_ERROR(IOError);

#undef TEICHFUCHS_ERROR

}  // namespace teichfuchs
