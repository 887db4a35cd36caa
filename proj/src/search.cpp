#include "mindil/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mindil/json_io.hpp"
#include "mindil/thurston.hpp"

namespace mindil {

namespace {

// Letters in canonical expansion order.
constexpr char kLetters[4] = {'a', 'b', 'A', 'B'};

int letter_inverse(int l) { return l ^ 2; }  // a<->A, b<->B

Syllable letter_syllable(int l) {
    switch (l) {
        case 0: return {Twist::Alpha, 1};
        case 1: return {Twist::Beta, 1};
        case 2: return {Twist::Alpha, -1};
        default: return {Twist::Beta, -1};
    }
}

int letter_index(char c) {
    switch (c) {
        case 'a': return 0;
        case 'b': return 1;
        case 'A': return 2;
        default: return 3;
    }
}

struct MatKey {
    mpz_class a, b, c, d;

    explicit MatKey(const Mat2& m) : a(m.a), b(m.b), c(m.c), d(m.d) {}

    bool operator<(const MatKey& o) const {
        int s;
        if ((s = cmp(a, o.a)) != 0) return s < 0;
        if ((s = cmp(b, o.b)) != 0) return s < 0;
        if ((s = cmp(c, o.c)) != 0) return s < 0;
        return cmp(d, o.d) < 0;
    }
};

}  // namespace

TwistWord EnumeratedElement::word() const {
    std::vector<Syllable> syls;
    syls.reserve(letters.size());
    for (char c : letters) syls.push_back(letter_syllable(letter_index(c)));
    return TwistWord(std::move(syls));
}

Enumeration enumerate_subgroup(long n, int max_len, const SearchBudget& budget) {
    if (n < 1) throw std::invalid_argument("enumerate_subgroup: n must be >= 1");
    if (max_len < 1) throw std::invalid_argument("enumerate_subgroup: max_len must be >= 1");

    auto [A, B] = generators(n);
    const Mat2 gens[4] = {A, B, A.inverse(), B.inverse()};

    Enumeration out;
    out.n = n;
    out.max_len = max_len;

    struct Node {
        ProjMat2 mat;
        std::string letters;
        int last_letter;  // -1 for the identity
    };

    std::map<MatKey, std::size_t> seen;
    std::vector<Node> frontier{{ProjMat2::identity(), "", -1}};
    seen.emplace(MatKey(frontier[0].mat.rep()), 0);
    out.elements.push_back({frontier[0].mat, ""});

    std::uint64_t nodes = 0;
    unsigned jobs = std::max(1u, budget.jobs);

    auto partial_error = [&]() {
        SearchReport partial = make_report(out);
        return BudgetExceededError(
            "search budget exceeded after " + std::to_string(nodes) + " expansions", partial);
    };

    for (int len = 1; len <= max_len; ++len) {
        // Expand every frontier node by every non-cancelling letter.  The
        // candidate list is ordered by (parent, letter) regardless of how
        // many workers computed it, so deduplication below is canonical.
        struct Candidate {
            Mat2 mat;
            std::uint32_t parent;
            std::uint8_t letter;
        };
        std::vector<std::vector<Candidate>> chunks(jobs);

        std::uint64_t expansions = 0;
        for (const Node& node : frontier) {
            expansions += (node.last_letter < 0) ? 4 : 3;
        }
        if (nodes + expansions > budget.max_nodes) throw partial_error();
        nodes += expansions;

        auto worker = [&](unsigned w) {
            std::vector<Candidate>& local = chunks[w];
            for (std::size_t i = w; i < frontier.size(); i += jobs) {
                const Node& node = frontier[i];
                for (int l = 0; l < 4; ++l) {
                    if (node.last_letter >= 0 && l == letter_inverse(node.last_letter)) continue;
                    local.push_back({node.mat.rep() * gens[l], static_cast<std::uint32_t>(i),
                                     static_cast<std::uint8_t>(l)});
                }
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
            for (auto& t : pool) t.join();
        }

        std::vector<Candidate> merged;
        merged.reserve(expansions);
        for (auto& c : chunks) {
            merged.insert(merged.end(), std::make_move_iterator(c.begin()),
                          std::make_move_iterator(c.end()));
        }
        std::sort(merged.begin(), merged.end(), [](const Candidate& x, const Candidate& y) {
            return x.parent != y.parent ? x.parent < y.parent : x.letter < y.letter;
        });

        std::vector<Node> next;
        for (const Candidate& c : merged) {
            ProjMat2 pm(c.mat);
            auto [it, inserted] = seen.emplace(MatKey(pm.rep()), out.elements.size());
            if (!inserted) continue;
            std::string word = frontier[c.parent].letters + kLetters[c.letter];
            out.elements.push_back({pm, word});
            next.push_back({std::move(pm), std::move(word), c.letter});
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

bool SearchReport::min_trace_matches_formula() const {
    if (!min_hyperbolic_trace_abs) return false;
    return *min_hyperbolic_trace_abs == mpz_class(n) * n - 2;
}

bool SearchReport::has_twist_product_witness() const {
    const TwistWord ab{{Twist::Alpha, 1}, {Twist::Beta, 1}};
    const TwistWord ba{{Twist::Beta, 1}, {Twist::Alpha, 1}};
    for (const SearchWitness& w : witnesses) {
        if (w.word == ab || w.word == ba) return true;
        TwistWord inv = w.word.inverse();
        if (inv == ab || inv == ba) return true;
    }
    return false;
}

SearchReport make_report(const Enumeration& e, std::size_t witness_cap) {
    SearchReport r;
    r.n = e.n;
    r.max_len = e.max_len;
    r.distinct_elements = e.elements.size();

    for (const EnumeratedElement& el : e.elements) {
        if (classify(el.mat) != MatClass::Hyperbolic) continue;
        mpz_class t = el.mat.abs_trace();
        if (!r.min_hyperbolic_trace_abs || t < *r.min_hyperbolic_trace_abs) {
            r.min_hyperbolic_trace_abs = t;
            r.witnesses.clear();
            r.witnesses_truncated = false;
        }
        if (t == *r.min_hyperbolic_trace_abs) {
            if (r.witnesses.size() < witness_cap) {
                r.witnesses.push_back({el.word(), el.mat.rep()});
            } else {
                r.witnesses_truncated = true;
            }
        }
    }

    if (e.n >= 3) {
        bool ok = true;
        for (const EnumeratedElement& el : e.elements) {
            if (!try_congruence_decompose(el.mat.rep(), e.n)) {
                ok = false;
                break;
            }
        }
        r.congruence_closure_ok = ok;
    }
    return r;
}

SearchReport verify_min_trace(long n, int max_len, const SearchBudget& budget) {
    if (n < 3) throw std::invalid_argument("verify_min_trace: requires n >= 3");
    return make_report(enumerate_subgroup(n, max_len, budget));
}

bool verify_congruence_closure(long n, int max_len, const SearchBudget& budget) {
    if (n < 3) throw std::invalid_argument("verify_congruence_closure: requires n >= 3");
    SearchReport r = make_report(enumerate_subgroup(n, max_len, budget));
    return r.congruence_closure_ok.value();
}

mpz_class free_group_ball_size(int max_len) {
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(max_len));
    return 1 + 4 * (p3 - 1) / 2;
}

std::string trace_histogram_csv(const Enumeration& e) {
    std::map<mpz_class, std::uint64_t> hist;
    for (const EnumeratedElement& el : e.elements) ++hist[el.mat.abs_trace()];
    std::ostringstream os;
    os << "trace_abs,count\n";
    for (const auto& [t, c] : hist) os << t << "," << c << "\n";
    return os.str();
}

std::string report_to_json(const SearchReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["max_len"] = r.max_len;
    j["distinct"] = r.distinct_elements;
    j["min_trace"] = r.min_hyperbolic_trace_abs ? mpz_to_json(*r.min_hyperbolic_trace_abs)
                                                : nlohmann::json();
    j["witnesses"] = nlohmann::json::array();
    for (const SearchWitness& w : r.witnesses) {
        nlohmann::json jw;
        jw["word"] = w.word.str();
        jw["matrix"] = {{mpz_to_json(w.matrix.a), mpz_to_json(w.matrix.b)},
                        {mpz_to_json(w.matrix.c), mpz_to_json(w.matrix.d)}};
        j["witnesses"].push_back(std::move(jw));
    }
    j["witnesses_truncated"] = r.witnesses_truncated;
    j["congruence_ok"] =
        r.congruence_closure_ok ? nlohmann::json(*r.congruence_closure_ok) : nlohmann::json();
    return j.dump(2);
}

}  // namespace mindil
