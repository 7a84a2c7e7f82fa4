#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrta {

// Execution mode for kernels with data-parallel inner loops. The parallel
// path uses OpenMP when compiled in and falls back to the serial path
// otherwise. Both paths compute each element independently (no
// floating-point reductions), so results are bit-identical.
enum class Exec { serial, parallel };

// Input that violates an operation's preconditions in a structural way
// (all sites identical, k > n, ...).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A location pair with no connecting path on the grid map.
class InfeasiblePairError : public std::runtime_error {
 public:
  InfeasiblePairError(std::size_t from, std::size_t to)
      : std::runtime_error("no grid path between locations " +
                           std::to_string(from) + " and " + std::to_string(to)),
        from_(from),
        to_(to) {}

  std::size_t from() const { return from_; }
  std::size_t to() const { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

}  // namespace mrta
