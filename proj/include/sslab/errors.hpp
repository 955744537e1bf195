#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sslab {

class lab_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an input exceeds a module's fixed capacity (vertex cap, exhaustive-search limits).
class capacity_error : public lab_error {
public:
  using lab_error::lab_error;
};

class argument_error : public lab_error {
public:
  using lab_error::lab_error;
};

class precondition_error : public lab_error {
public:
  using lab_error::lab_error;
};

class domain_error : public lab_error {
public:
  using lab_error::lab_error;
};

class parse_error : public lab_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : lab_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An iterative solver ran out of budget; carries the best residual it reached.
class numeric_error : public lab_error {
public:
  numeric_error(const std::string& what, double best_residual)
      : lab_error(what + " (best residual " + std::to_string(best_residual) + ")"),
        best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

private:
  double best_residual_;
};

/// Enumeration stopped at its node budget. `nodes` and `deepest` record how far it got.
class budget_exhausted : public lab_error {
public:
  budget_exhausted(std::size_t nodes, int deepest, std::size_t emitted)
      : lab_error("enumeration budget exhausted after " + std::to_string(nodes) +
                  " node expansions (deepest order " + std::to_string(deepest) + ", " +
                  std::to_string(emitted) + " graphs emitted)"),
        nodes_(nodes), deepest_(deepest), emitted_(emitted) {}

  std::size_t nodes() const noexcept { return nodes_; }
  int deepest() const noexcept { return deepest_; }
  std::size_t emitted() const noexcept { return emitted_; }

private:
  std::size_t nodes_;
  int deepest_;
  std::size_t emitted_;
};

}  // namespace sslab
