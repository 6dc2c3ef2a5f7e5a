#pragma once

#include <stdexcept>
#include <string>

namespace smartgrid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// grid simulation
struct SocOutOfRange : Error {
  using Error::Error;
};
struct ActionOutOfBounds : Error {
  using Error::Error;
};
struct EpisodeOver : Error {
  using Error::Error;
};
struct NegativeInput : Error {
  using Error::Error;
};
struct PeakDecreased : Error {
  using Error::Error;
};

// MPC / QP construction
struct InvalidTheta : Error {
  using Error::Error;
};
struct HorizonPriceMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// solver
struct SolverFailure : Error {
  using Error::Error;
};
struct MaxIterations : SolverFailure {
  using SolverFailure::SolverFailure;
};
struct NumericalBreakdown : SolverFailure {
  using SolverFailure::SolverFailure;
};

// sensitivity
struct SingularKktMatrix : Error {
  using Error::Error;
};
struct DegenerateActiveSet : Error {
  using Error::Error;
};

// learning
struct SingularSystem : Error {
  using Error::Error;
};
struct EmptyBatch : Error {
  using Error::Error;
};

// configuration and data files
struct ConfigError : Error {
  using Error::Error;
};
struct MissingFile : Error {
  using Error::Error;
};
struct ShortSeries : Error {
  using Error::Error;
};
struct MalformedRow : Error {
  MalformedRow(const std::string& msg, long line) : Error(msg), line_number(line) {}
  long line_number;
};
struct InvalidSpec : Error {
  using Error::Error;
};

}  // namespace smartgrid
