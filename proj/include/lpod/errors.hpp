#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpod {

// Lexical or grammatical error with a 1-based source position.
struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Raised by the enumeration engines when a signature exceeds the cap.
struct SignatureTooLarge : std::runtime_error {
  SignatureTooLarge(std::size_t size, std::size_t cap)
      : std::runtime_error("signature has " + std::to_string(size) +
                           " atoms, exceeding the enumeration cap of " +
                           std::to_string(cap)),
        size(size),
        cap(cap) {}
  std::size_t size;
  std::size_t cap;
};

// A statement or form outside the fragment an operation handles.
struct UnsupportedConstruct : std::runtime_error {
  explicit UnsupportedConstruct(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace lpod
