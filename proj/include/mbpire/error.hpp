#ifndef MBPIRE_ERROR_HPP_
#define MBPIRE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mbpire {

enum class Errc {
  empty,
  non_stochastic,
  not_ergodic,
  missing_law,
  domination_violated,
  cap_exceeded,
  depth_exceeded,
  cap_too_small,
  no_convergence,
  supercritical,
  zero_mass,
  not_single_type,
  degenerate_variance,
  divergent,
  parse,
  validation,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty: return "Empty";
    case Errc::non_stochastic: return "NonStochastic";
    case Errc::not_ergodic: return "NotErgodic";
    case Errc::missing_law: return "MissingLaw";
    case Errc::domination_violated: return "DominationViolated";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::depth_exceeded: return "DepthExceeded";
    case Errc::cap_too_small: return "CapTooSmall";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::supercritical: return "Supercritical";
    case Errc::zero_mass: return "ZeroMass";
    case Errc::not_single_type: return "NotSingleType";
    case Errc::degenerate_variance: return "DegenerateVariance";
    case Errc::divergent: return "Divergent";
    case Errc::parse: return "ParseError";
    case Errc::validation: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace mbpire

#endif
