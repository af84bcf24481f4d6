#ifndef MCS_ERROR_HPP
#define MCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcs {

/// Base class for every error raised by the engine. The CLI maps these
/// to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MCS_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

// kring
MCS_DEFINE_ERROR(SpecMismatch);
MCS_DEFINE_ERROR(MissingAssignment);
MCS_DEFINE_ERROR(InvalidSpecialization);
MCS_DEFINE_ERROR(RingSpecError);
MCS_DEFINE_ERROR(OverflowError);

// monoid
MCS_DEFINE_ERROR(PresentationError);
MCS_DEFINE_ERROR(FiniteFiberError);
MCS_DEFINE_ERROR(MonoidHomError);
MCS_DEFINE_ERROR(TermLimitExceeded);

// series
MCS_DEFINE_ERROR(SeriesMismatch);
MCS_DEFINE_ERROR(ZeroClassFactor);
MCS_DEFINE_ERROR(NotMonic);
MCS_DEFINE_ERROR(PushforwardError);
MCS_DEFINE_ERROR(LocalizationMismatch);

// toric
MCS_DEFINE_ERROR(FanError);
MCS_DEFINE_ERROR(DimensionError);
MCS_DEFINE_ERROR(BlowupError);

// gm_action
MCS_DEFINE_ERROR(UnsupportedStratum);

// io
MCS_DEFINE_ERROR(ParseError);

#undef MCS_DEFINE_ERROR

} // namespace mcs

#endif
