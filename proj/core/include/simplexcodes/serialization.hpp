/**
 * Canonical JSON forms of the persistent objects. Keys are emitted sorted
 * and rationals are "num/den" strings, so identical inputs serialize to
 * identical bytes; floats appear only in reports, together with the
 * tolerance they were judged against.
 *
 * l1 code:  { "q", "N", "distance", "points": [[...], ...] }  (lex order)
 * witness:  { "blocks": [[[...], ...], ...], "weights": {"a,b,c": "num/den"} }
 * code:     { "q", "N", "K", "space", "distance", "basis":
 *             [ { "point", "block", "sign", "amp_sq" }, ... ], "provenance" }
 */

#ifndef SIMPLEXCODES_SERIALIZATION_HPP
#define SIMPLEXCODES_SERIALIZATION_HPP

#include <string>

#include "simplexcodes/codes.hpp"
#include "simplexcodes/l1codes.hpp"
#include "simplexcodes/tverberg.hpp"

namespace simplexcodes {

std::string to_json(const L1Code& code);
L1Code l1code_from_json(const std::string& text);

std::string to_json(const TverbergWitness& witness);
TverbergWitness witness_from_json(const std::string& text);

std::string to_json(const SimplexCode& code);
SimplexCode code_from_json(const std::string& text);

std::string to_json(const KLReport& report);

/// Writes via a temp file in the same directory plus an atomic rename.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace simplexcodes

#endif
