#include "mindil/twist_word.hpp"

#include <sstream>
#include <stdexcept>

namespace mindil {

namespace {

// Merge adjacent same-generator syllables and drop those that cancel.  The
// back of the output is re-examined after every pop, so cascading
// cancellations resolve in one pass.
std::vector<Syllable> merge(std::vector<Syllable> in) {
    std::vector<Syllable> out;
    for (const Syllable& s : in) {
        if (s.exp == 0) continue;
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

TwistWord::TwistWord(std::initializer_list<Syllable> syls) : TwistWord(std::vector<Syllable>(syls)) {}

TwistWord::TwistWord(std::vector<Syllable> syls) : syllables_(merge(std::move(syls))) {}

TwistWord TwistWord::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<Syllable> syls;
    std::string tok;
    while (is >> tok) {
        char g = tok[0];
        if (g != 'a' && g != 'b') {
            throw std::invalid_argument("bad twist word token '" + tok + "': expected a or b");
        }
        long e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw std::invalid_argument("bad twist word token '" + tok + "'");
            try {
                std::size_t pos = 0;
                e = std::stol(tok.substr(2), &pos);
                if (pos != tok.size() - 2) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in twist word token '" + tok + "'");
            }
            if (e == 0) throw std::invalid_argument("zero exponent in twist word token '" + tok + "'");
        }
        syls.push_back({g == 'a' ? Twist::Alpha : Twist::Beta, e});
    }
    return TwistWord(std::move(syls));
}

std::uint64_t TwistWord::letter_length() const {
    std::uint64_t n = 0;
    for (const Syllable& s : syllables_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
    return n;
}

TwistWord TwistWord::operator*(const TwistWord& o) const {
    std::vector<Syllable> all = syllables_;
    all.insert(all.end(), o.syllables_.begin(), o.syllables_.end());
    return TwistWord(std::move(all));
}

TwistWord TwistWord::inverse() const {
    std::vector<Syllable> rev;
    rev.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
        rev.push_back({it->gen, -it->exp});
    }
    return TwistWord(std::move(rev));
}

std::string TwistWord::str() const {
    std::ostringstream os;
    bool first = true;
    for (const Syllable& s : syllables_) {
        if (!first) os << ' ';
        first = false;
        os << (s.gen == Twist::Alpha ? 'a' : 'b');
        if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
}

}  // namespace mindil
