#ifndef VLMCAST_ERRORS_HPP
#define VLMCAST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlmcast {

/// Malformed input file (bad header, duplicate keys, structural damage).
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A single unreadable data row; carries the 1-based line number.
class RowError : public std::runtime_error {
public:
  RowError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Iterative scheme failed to reach the requested tolerance; carries the
/// last iterate so callers can inspect how close it got.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double last_iterate,
                   std::size_t iterations)
      : std::runtime_error(what), last_iterate_(last_iterate),
        iterations_(iterations) {}
  double last_iterate() const noexcept { return last_iterate_; }
  std::size_t iterations() const noexcept { return iterations_; }

private:
  double last_iterate_;
  std::size_t iterations_;
};

/// Design or kernel matrix too ill-conditioned to solve.
class ConditioningError : public std::runtime_error {
public:
  explicit ConditioningError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A local coordinate was used in the wrong frame.
class FrameError : public std::logic_error {
public:
  explicit FrameError(const std::string& what) : std::logic_error(what) {}
};

/// Metric mathematically undefined for the given inputs (e.g. MASE on a
/// constant series).
class UndefinedMetricError : public std::domain_error {
public:
  explicit UndefinedMetricError(const std::string& what)
      : std::domain_error(what) {}
};

} // namespace vlmcast

#endif
