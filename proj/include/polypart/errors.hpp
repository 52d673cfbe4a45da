#ifndef POLYPART_ERRORS_HPP
#define POLYPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polypart {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundedCell : GeometryError {
  using GeometryError::GeometryError;
};
struct EmptyCell : GeometryError {
  using GeometryError::GeometryError;
};
struct DegenerateFacet : GeometryError {
  using GeometryError::GeometryError;
};
struct OverlayFailure : GeometryError {
  using GeometryError::GeometryError;
};

struct JunctionTooClose : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetInfeasible : std::runtime_error {
  double achieved_residual = 0.0;
  BudgetInfeasible(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_residual(achieved) {}
};
struct InverseDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpacingTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PieceNearBoundary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InjectivityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polypart

#endif
