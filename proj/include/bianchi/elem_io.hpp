#pragma once

#include <string>

#include "bianchi/quadfield.hpp"

namespace bianchi {

/// Parses the element grammar: <rat>, <rat>*w, or <rat>(+|-)<rat>*w, where
/// <rat> is an optionally signed integer or fraction in decimal and w is the
/// omega of the active field.  Whitespace is insignificant.  A bare "w" term
/// is accepted for convenience.  Throws std::invalid_argument on malformed
/// input.
QuadElem parse_elem(const std::string& text, int d_code);

/// Parses either "<elem>" or "(<elem>)/(<elem>)" as an element of K.
QuadElem parse_elem_or_quotient(const std::string& text, int d_code);

/// Canonical form is QuadElem::str() / QuadInt::str(); parse_elem is a left
/// inverse of it.

}  // namespace bianchi
