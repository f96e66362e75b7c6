#pragma once

#include <stdexcept>
#include <string>

namespace vclone {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// geometry
struct DegenerateInput : Error { using Error::Error; };
struct CollinearInput : Error { using Error::Error; };
struct CoincidentCircles : Error { using Error::Error; };

// diagrams
struct DuplicateSites : Error { using Error::Error; };
struct OutsideBox : Error { using Error::Error; };

// retroactive dictionary
struct InvalidHandle : Error { using Error::Error; };
struct NonpositiveLifespan : Error { using Error::Error; };

// cloners
struct BudgetExceeded : Error { using Error::Error; };
struct DegenerateInstance : Error { using Error::Error; };
struct InconsistentCircles : Error { using Error::Error; };
struct InvalidParameters : Error { using Error::Error; };
struct EdgeLost : Error { using Error::Error; };

// instance generation
struct Unsatisfiable : Error { using Error::Error; };

}  // namespace vclone
