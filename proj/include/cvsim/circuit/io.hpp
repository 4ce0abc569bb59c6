#pragma once

#include <string>

#include "cvsim/circuit/gate.hpp"

namespace cvsim {

// Circuit file format: one JSON document per circuit, every real carried as a
// decimal string. parse validates invariants and raises ValidationError with
// the violation list; malformed documents raise ParseError.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

// FNV-1a 64-bit content digest, for report headers.
std::string content_digest(const std::string& text);

}  // namespace cvsim
