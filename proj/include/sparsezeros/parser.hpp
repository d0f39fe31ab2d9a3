#ifndef SPARSEZEROS_PARSER_HPP
#define SPARSEZEROS_PARSER_HPP

#include <string>

#include "sparsezeros/poly.hpp"

namespace sparsezeros {

/// Parse the polynomial input language:
///
///   poly   := term (('+'|'-') term)* ;
///   term   := coeff ('*' xpow)? | xpow ;
///   xpow   := 'x' ('^' uint)? ;
///   coeff  := latom | '(' laurent ')' ;
///   laurent:= latom (('+'|'-') latom)* ;
///   latom  := felem ('*' tpow)? | tpow ;
///   tpow   := 'T' ('^' int)? ;
///   felem  := uint | 'g' ('^' uint)? ;
///
/// Integer literals reduce mod p; `g` is the canonical generator of the
/// residue field.  Like x-powers are merged, zero coefficients dropped; a
/// polynomial that normalizes to zero is an error.  Coefficients are exact.
SparsePoly parse_poly(const std::string& src, const SeriesField& fld);

} // namespace sparsezeros

#endif
