#include "mindil/json_io.hpp"

#include <stdexcept>

namespace mindil {

nlohmann::json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

nlohmann::json surd_to_json(const QuadraticSurd& s) {
    return {{"p", mpz_to_json(s.p())},
            {"q", mpz_to_json(s.q())},
            {"D", mpz_to_json(s.radicand())},
            {"decimal", s.decimal(15)}};
}

nlohmann::json mat2_to_json(const Mat2& m) {
    return {{"m", {{mpz_to_json(m.a), mpz_to_json(m.b)}, {mpz_to_json(m.c), mpz_to_json(m.d)}}}};
}

Mat2 mat2_from_json(const nlohmann::json& j) {
    const nlohmann::json& m = j.contains("m") ? j.at("m") : j;
    return Mat2(mpz_from_json(m.at(0).at(0)), mpz_from_json(m.at(0).at(1)),
                mpz_from_json(m.at(1).at(0)), mpz_from_json(m.at(1).at(1)));
}

nlohmann::json twist_word_to_json(const TwistWord& w) {
    nlohmann::json syls = nlohmann::json::array();
    for (const Syllable& s : w.syllables()) {
        syls.push_back({s.gen == Twist::Alpha ? "a" : "b", s.exp});
    }
    return {{"syllables", std::move(syls)}};
}

TwistWord twist_word_from_json(const nlohmann::json& j) {
    std::vector<Syllable> syls;
    for (const auto& s : j.at("syllables")) {
        std::string g = s.at(0).get<std::string>();
        if (g != "a" && g != "b") throw std::invalid_argument("twist word generator must be a or b");
        syls.push_back({g == "a" ? Twist::Alpha : Twist::Beta, s.at(1).get<long>()});
    }
    return TwistWord(std::move(syls));
}

nlohmann::json perm_to_json(const Perm& p) {
    return {{"m", p.m()}, {"images", p.images()}};
}

Perm perm_from_json(const nlohmann::json& j) {
    return Perm(j.at("m").get<int>(), j.at("images").get<std::vector<int>>());
}

}  // namespace mindil
