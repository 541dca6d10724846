#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "postlie/bimould.hpp"
#include "postlie/freealg.hpp"

namespace postlie {

/// Parse failure with the 0-based character position of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg);
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Grammar: term = [sign] [rational "*"] word, word = "1" | letter ("." letter)*,
/// letter = "v" digits, rational = int ["/" int]. A bare rational is a multiple of 1.
Poly parse_poly(const std::string& s);
/// Same grammar with letters "C" k "_" m.
BiPoly parse_bipoly(const std::string& s);
/// "v1,v2" or "1,2": a list of letters.
std::set<Letter> parse_letter_set(const std::string& s);

/// Canonical text form; re-parses to an equal Poly. "0" for zero.
std::string format_poly(const Poly& p);
std::string format_bipoly(const BiPoly& p);
/// Terms "c*w1 (x) w2" in canonical order of the pairs.
std::string format_tensor(const Tensor2& t);

nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json tensor_to_json(const Tensor2& t);
nlohmann::ordered_json bipoly_to_json(const BiPoly& p);
/// List of {depth, terms: [{xexp, yexp, coeff}]}.
nlohmann::ordered_json bimould_to_json(const Bimould& A);
Bimould bimould_from_json(const nlohmann::ordered_json& j);

}  // namespace postlie
