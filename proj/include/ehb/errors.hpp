#pragma once
#include <stdexcept>

namespace ehb {

#define EHB_ERROR(Name)                                  \
  struct Name : std::runtime_error {                     \
    using std::runtime_error::runtime_error;             \
  }

EHB_ERROR(DomainError);
EHB_ERROR(PoleError);
EHB_ERROR(ContourError);
EHB_ERROR(HypothesisError);
EHB_ERROR(BranchError);
EHB_ERROR(SeriesDivergence);
EHB_ERROR(NonConvergence);
EHB_ERROR(NonTermination);
EHB_ERROR(InternalError);

#undef EHB_ERROR

}  // namespace ehb
