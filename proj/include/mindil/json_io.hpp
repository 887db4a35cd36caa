#pragma once

#include <nlohmann/json.hpp>

#include "mindil/filling.hpp"
#include "mindil/mat2.hpp"
#include "mindil/surd.hpp"
#include "mindil/twist_word.hpp"

// Documented JSON schemas for the domain types.  Integers that fit a signed
// 64-bit value are emitted as JSON numbers, larger ones as decimal strings.

namespace mindil {

nlohmann::json mpz_to_json(const mpz_class& z);
mpz_class mpz_from_json(const nlohmann::json& j);

/// {"p": int, "q": int, "D": int, "decimal": "15-significant-digit string"}
nlohmann::json surd_to_json(const QuadraticSurd& s);

/// {"m": [[a, b], [c, d]]}
nlohmann::json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const nlohmann::json& j);

/// {"syllables": [["a", 1], ["b", -2], ...]}
nlohmann::json twist_word_to_json(const TwistWord& w);
TwistWord twist_word_from_json(const nlohmann::json& j);

/// {"m": int, "images": [int, ...]}
nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);

}  // namespace mindil
