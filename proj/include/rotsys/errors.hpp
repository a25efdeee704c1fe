#pragma once

#include <stdexcept>
#include <string>

namespace rotsys {

// Malformed input to a pure operation (bad vertex lists, non-bijective maps).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A 4-element subconfiguration is the non-drawable obstruction, so crossings
// are undefined.
struct NotDrawable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfScope : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The obstruction catalog is missing an entry, or a derivation produced
// cardinalities that disagree with the known class counts.
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent encoding or run options.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The external solver could not be run, or crashed.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The solver ran but its output violates the DIMACS result protocol.
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A model disagrees with the variable semantics (X/Y mismatch).
struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmbeddingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration hit an Unknown outcome and refuses to report a partial count.
struct EnumerationAborted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rotsys
