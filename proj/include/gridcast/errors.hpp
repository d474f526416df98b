#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridcast {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; message carries file and line number.
struct ParseError : Error {
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), file(file), line(line) {}
  std::string file;
  int line;
};

// A structural invariant is violated; message names the invariant.
struct ValidationError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Newton-Raphson failed to reach the mismatch tolerance.
struct NonConvergence : Error {
  NonConvergence(int iterations, double final_mismatch)
      : Error("power flow did not converge after " + std::to_string(iterations) +
              " iterations (max mismatch " + std::to_string(final_mismatch) + " p.u.)"),
        iterations(iterations),
        final_mismatch(final_mismatch) {}
  int iterations;
  double final_mismatch;
};

struct SingularJacobian : Error {
  explicit SingularJacobian(int iteration)
      : Error("singular Jacobian at iteration " + std::to_string(iteration)), iteration(iteration) {}
  int iteration;
};

// One or more timesteps could not be solved even after injection scaling.
struct DatasetError : Error {
  DatasetError(std::string what, std::vector<int> failed)
      : Error(std::move(what)), failed_timesteps(std::move(failed)) {}
  std::vector<int> failed_timesteps;
};

}  // namespace gridcast
