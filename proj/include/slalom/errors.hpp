#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slalom {

/// Malformed Cayley code. `position()` is 1-based; 0 means the code as a whole.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(position == 0 ? what
                                         : "position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal invariant failed. Never caused by valid user input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The geometric layout violates a divide axiom; adjust the LayoutConfig.
class LayoutError : public std::runtime_error {
 public:
  LayoutError(std::string axiom, const std::string& what)
      : std::runtime_error("axiom " + axiom + ": " + what), axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// Lift, projection or export failed numerically.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slalom
