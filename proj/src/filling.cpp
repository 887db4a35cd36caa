#include "mindil/filling.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mindil {

Perm::Perm(int m, std::vector<int> images) : m_(m), images_(std::move(images)) {
    if (m_ < 1) throw std::invalid_argument("Perm: m must be >= 1");
    const int n = 4 * m_;
    if (images_.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("Perm: expected " + std::to_string(n) + " images, got " +
                                    std::to_string(images_.size()));
    }
    for (int j = 1; j <= n; ++j) {
        if (images_[j - 1] == 0) {
            throw std::invalid_argument("not a permutation: symbol " + std::to_string(j) +
                                        " unassigned");
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        int v = images_[j - 1];
        if (v < 1 || v > n) {
            throw std::invalid_argument("not a permutation: image " + std::to_string(v) +
                                        " of symbol " + std::to_string(j) + " out of range 1.." +
                                        std::to_string(n));
        }
        if (seen[v]) {
            throw std::invalid_argument("not a permutation: symbol " + std::to_string(v) +
                                        " repeated");
        }
        seen[v] = 1;
    }
}

Perm Perm::from_cycles(const std::string& text, int m) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    int max_sym = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("cycle syntax: expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("cycle syntax: expected a symbol at position " + std::to_string(i));
            int sym = std::stoi(text.substr(start, i - start));
            if (sym < 1) throw std::invalid_argument("cycle syntax: symbol must be >= 1");
            cyc.push_back(sym);
            max_sym = std::max(max_sym, sym);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ')') { ++i; break; }
            throw std::invalid_argument("cycle syntax: expected ',' or ')' at position " + std::to_string(i));
        }
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    if (cycles.empty()) throw std::invalid_argument("cycle syntax: no cycles found");
    if (m == 0) {
        if (max_sym % 4 != 0) {
            throw std::invalid_argument("cycle symbols reach " + std::to_string(max_sym) +
                                        ", which is not a multiple of 4; pass m explicitly");
        }
        m = max_sym / 4;
    }
    const int n = 4 * m;
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            if (from > n || to > n) {
                throw std::invalid_argument("cycle symbol " + std::to_string(std::max(from, to)) +
                                            " exceeds 4m = " + std::to_string(n));
            }
            if (images[from - 1] != 0) {
                throw std::invalid_argument("not a permutation: symbol " + std::to_string(from) +
                                            " repeated");
            }
            images[from - 1] = to;
        }
    }
    return Perm(m, std::move(images));
}

std::vector<std::vector<int>> Perm::cycles() const {
    const int n = size();
    std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int j = 1; j <= n; ++j) {
        if (done[j]) continue;
        std::vector<int> cyc;
        int cur = j;
        while (!done[cur]) {
            done[cur] = 1;
            cyc.push_back(cur);
            cur = (*this)(cur);
        }
        out.push_back(std::move(cyc));
    }
    return out;  // each cycle starts at its minimum; cycles ordered by minimum
}

int Perm::cycle_count() const { return static_cast<int>(cycles().size()); }

int Perm::two_cycle_count() const {
    int k = 0;
    for (const auto& c : cycles()) k += (c.size() == 2);
    return k;
}

std::string Perm::cycle_string() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size(), 0);
    for (int j = 1; j <= size(); ++j) inv[static_cast<std::size_t>((*this)(j)) - 1] = j;
    return Perm(m_, std::move(inv));
}

Perm Perm::compose(const Perm& then) const {
    if (then.m_ != m_) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(images_.size());
    for (int j = 1; j <= size(); ++j) img[j - 1] = then((*this)(j));
    return Perm(m_, std::move(img));
}

bool Perm::parity_reversing() const {
    for (int j = 1; j <= size(); ++j) {
        if ((j + (*this)(j)) % 2 == 0) return false;
    }
    return true;
}

bool Perm::parity_respecting() const {
    for (int j = 1; j <= size(); ++j) {
        if ((j + (*this)(j)) % 2 != 0) return false;
    }
    return true;
}

Perm make_Q(int m) {
    if (m < 1) throw std::invalid_argument("make_Q: m must be >= 1");
    const int n = 4 * m;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) img[j - 1] = (j + 2 * m - 1) % n + 1;
    return Perm(m, std::move(img));
}

Perm make_tau(int m) {
    if (m < 1) throw std::invalid_argument("make_tau: m must be >= 1");
    const int n = 4 * m;
    std::vector<int> img(static_cast<std::size_t>(n));
    auto set_cycle = [&img](const std::vector<int>& cyc) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            img[static_cast<std::size_t>(cyc[k]) - 1] = cyc[(k + 1) % cyc.size()];
        }
    };
    std::vector<int> c1, c2, c3, c4;
    for (int v = 1; v <= 2 * m - 1; v += 2) c1.push_back(v);          // alpha arcs
    for (int v = 2; v <= 2 * m; v += 2) c2.push_back(v);              // beta arcs
    for (int v = 4 * m - 1; v >= 2 * m + 1; v -= 2) c3.push_back(v);  // alpha inverses
    for (int v = 4 * m; v >= 2 * m + 2; v -= 2) c4.push_back(v);      // beta inverses
    set_cycle(c1);
    set_cycle(c2);
    set_cycle(c3);
    set_cycle(c4);
    return Perm(m, std::move(img));
}

FillingValidation validate_filling(const Perm& sigma, int g, int n) {
    if (g < 0 || n < 0) throw std::invalid_argument("validate_filling: g and n must be >= 0");
    const int m = sigma.m();
    FillingValidation v;
    v.m = m;
    v.parity_reversing = sigma.parity_reversing();

    Perm Q = make_Q(m);
    Perm tau = make_tau(m);
    v.relation_ok = true;
    for (int j = 1; j <= sigma.size(); ++j) {
        if (sigma(Q(sigma(j))) != tau(j)) {
            v.relation_ok = false;
            break;
        }
    }

    v.cycle_count = sigma.cycle_count();
    v.two_cycle_count = sigma.two_cycle_count();

    if (v.relation_ok) {
        int numer = 2 + m - v.cycle_count;
        if (numer >= 0 && numer % 2 == 0) v.genus = numer / 2;
    }

    bool ok = v.parity_reversing && v.relation_ok && v.cycle_count == m + 2 - 2 * g &&
              v.two_cycle_count <= n;
    if (ok) v.valid_for = std::tuple<int, int, int>(g, n, m);
    return v;
}

std::optional<int> genus_of(const Perm& sigma) {
    const int m = sigma.m();
    Perm Q = make_Q(m);
    Perm tau = make_tau(m);
    for (int j = 1; j <= sigma.size(); ++j) {
        if (sigma(Q(sigma(j))) != tau(j)) {
            throw std::domain_error("not a filling permutation: sigma Q sigma != tau");
        }
    }
    int numer = 2 + m - sigma.cycle_count();
    if (numer < 0 || numer % 2 != 0) return std::nullopt;
    return numer / 2;
}

long torus_intersection(long p, long q, long r, long s) {
    if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1) {
        throw std::invalid_argument("not simple closed curves: classes must be primitive");
    }
    long v = p * s - q * r;
    return v < 0 ? -v : v;
}

long i_min(long g, long n) {
    if (g < 0 || n < 0) throw std::invalid_argument("i_min: g and n must be >= 0");
    if (g == 0) {
        if (n < 4) {
            throw std::domain_error(
                "no intersecting filling pair: a sphere with fewer than 4 punctures has none");
        }
        return (n % 2 == 0) ? n - 2 : n - 1;
    }
    if (g == 2 && n <= 2) return 4;
    if (n == 0) return 2 * g - 1;
    return 2 * g + n - 2;
}

// ---------------------------------------------------------------------------
// Backtracking search

namespace {

struct FillingSearch {
    int m, size, target_cycles, max_two_cycles;
    std::vector<int> Q, tau;      // 1-based in [1..size] at offset-1
    std::vector<int> img, pre;    // 0 = unassigned
    int assigned = 0;
    int completed_cycles = 0;
    int completed_two_cycles = 0;
    std::uint64_t nodes = 0, budget;
    bool budget_hit = false;

    FillingSearch(int g, int n, int m_, std::uint64_t budget_)
        : m(m_), size(4 * m_), target_cycles(m_ + 2 - 2 * g), max_two_cycles(n),
          img(static_cast<std::size_t>(size) + 1, 0), pre(static_cast<std::size_t>(size) + 1, 0),
          budget(budget_) {
        Perm q = make_Q(m), t = make_tau(m);
        Q.resize(static_cast<std::size_t>(size) + 1);
        tau.resize(static_cast<std::size_t>(size) + 1);
        for (int j = 1; j <= size; ++j) {
            Q[j] = q(j);
            tau[j] = t(j);
        }
    }

    struct Undo {
        std::vector<int> set_symbols;
        int cycles_delta = 0, two_cycles_delta = 0;
    };

    // Assign img[j] = k and chase the forced consequences
    // img[Q[k]] = tau[j].  Returns false on conflict; `u` records enough to
    // roll back either way.
    bool assign(int j0, int k0, Undo& u) {
        std::vector<std::pair<int, int>> queue{{j0, k0}};
        while (!queue.empty()) {
            auto [j, k] = queue.back();
            queue.pop_back();
            if (img[j] != 0) {
                if (img[j] == k) continue;
                return false;
            }
            if (pre[k] != 0) return false;
            if ((j + k) % 2 == 0) return false;  // must reverse parity
            img[j] = k;
            pre[k] = j;
            ++assigned;
            u.set_symbols.push_back(j);
            // Did edge j -> k close a cycle?
            int cur = k, steps = 1;
            while (cur != j && img[cur] != 0) {
                cur = img[cur];
                ++steps;
            }
            if (cur == j) {
                ++completed_cycles;
                ++u.cycles_delta;
                if (steps == 2) {
                    ++completed_two_cycles;
                    ++u.two_cycles_delta;
                }
            }
            if (completed_cycles > target_cycles) return false;
            if (completed_two_cycles > max_two_cycles) return false;
            if (completed_cycles == target_cycles && assigned < size) return false;
            queue.emplace_back(Q[k], tau[j]);
        }
        return prune_upper_bound();
    }

    // Remaining structure can add at most one cycle per open path plus one
    // per pair of untouched symbols.
    bool prune_upper_bound() {
        int open_paths = 0, isolated = 0;
        for (int j = 1; j <= size; ++j) {
            if (img[j] != 0 && pre[j] == 0) ++open_paths;
            if (img[j] == 0 && pre[j] == 0) ++isolated;
        }
        return completed_cycles + open_paths + isolated / 2 >= target_cycles;
    }

    void undo(const Undo& u) {
        for (int j : u.set_symbols) {
            pre[img[j]] = 0;
            img[j] = 0;
            --assigned;
        }
        completed_cycles -= u.cycles_delta;
        completed_two_cycles -= u.two_cycles_delta;
    }

    bool solve(std::optional<Perm>& out) {
        if (assigned == size) {
            if (completed_cycles != target_cycles) return false;
            std::vector<int> images(img.begin() + 1, img.end());
            Perm p(m, std::move(images));
            out = p;
            return true;
        }
        int j = 1;
        while (img[j] != 0) ++j;
        for (int k = 1; k <= size; ++k) {
            if (pre[k] != 0 || (j + k) % 2 == 0) continue;
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            Undo u;
            bool ok = assign(j, k, u);
            if (ok && solve(out)) return true;
            undo(u);
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

PermSearchResult search_filling(int g, int n, int m, std::uint64_t budget) {
    if (g < 0 || n < 0) throw std::invalid_argument("search_filling: g and n must be >= 0");
    if (m < 1) throw std::invalid_argument("search_filling: m must be >= 1");
    if (m + 2 - 2 * g < 1) {
        // No permutation of S_4m can have fewer than one cycle.
        return {std::nullopt, true, 0};
    }
    FillingSearch s(g, n, m, budget);
    std::optional<Perm> out;
    bool found = s.solve(out);
    if (found) {
        // Search and validator must agree; a mismatch is a bug, not an input
        // condition.
        FillingValidation v = validate_filling(*out, g, n);
        if (!v.valid()) throw std::logic_error("search_filling: result failed validation");
        return {out, true, s.nodes};
    }
    return {std::nullopt, !s.budget_hit, s.nodes};
}

// ---------------------------------------------------------------------------
// Double bigon surgery

namespace {

// Symbol helpers for the interleaved labeling at a given m.
struct Symbols {
    int m;
    int alpha(int i) const { return 2 * i - 1; }
    int beta(int j) const { return 2 * j; }
    int alpha_inv(int i) const { return 2 * m + 2 * i - 1; }
    int beta_inv(int j) const { return 2 * m + 2 * j; }
    bool is_inverse(int s) const { return s > 2 * m; }
};

// Relabeling that reverses the orientation of the alpha curve (arc i becomes
// the reversal of arc m+1-i).  An involution; conjugating sigma by it
// preserves validity.
int reverse_alpha_symbol(int s, int m) {
    if (s % 2 == 0) return s;  // beta symbols untouched
    if (s <= 2 * m) {
        int i = (s + 1) / 2;
        return 4 * m - 2 * i + 1;  // alpha_i -> alpha_inv(m+1-i)
    }
    int i = (s - 2 * m + 1) / 2;
    return 2 * m - 2 * i + 1;  // alpha_inv(i) -> alpha(m+1-i)
}

int reverse_beta_symbol(int s, int m) {
    if (s % 2 == 1) return s;
    if (s <= 2 * m) {
        int j = s / 2;
        return 4 * m - 2 * j + 2;  // beta_j -> beta_inv(m+1-j)
    }
    int j = (s - 2 * m) / 2;
    return 2 * m - 2 * j + 2;  // beta_inv(j) -> beta(m+1-j)
}

Perm conjugate_by(const Perm& sigma, int (*relabel)(int, int)) {
    const int m = sigma.m();
    std::vector<int> img(static_cast<std::size_t>(sigma.size()), 0);
    for (int j = 1; j <= sigma.size(); ++j) {
        img[static_cast<std::size_t>(relabel(j, m)) - 1] = relabel(sigma(j), m);
    }
    return Perm(m, std::move(img));
}

// Apply the finger-push rewrite at a site sigma(alpha_s) = beta_t (both
// positively oriented).  The head of alpha_s is pushed across the tail of
// beta_t; alpha_s splits into body + tip + return stub, beta_t into two
// stubs + body, and the two stub pairs close up into the punctured bigons.
Perm apply_bigon_pattern(const Perm& sigma, int s, int t) {
    const int m = sigma.m();
    const int m2 = m + 2;
    Symbols old{m}, nw{m2};

    auto new_alpha_index = [&](int i) { return i < s ? i : (i == s ? s : i + 2); };
    auto new_beta_index = [&](int j) { return j < t ? j : (j == t ? t + 2 : j + 2); };

    // Body piece of each old symbol in the new labeling.
    auto translate = [&](int u) -> int {
        bool inv = old.is_inverse(u);
        int base = inv ? u - 2 * m : u;
        if (base % 2 == 1) {
            int i = new_alpha_index((base + 1) / 2);
            return inv ? nw.alpha_inv(i) : nw.alpha(i);
        }
        int j = new_beta_index(base / 2);
        return inv ? nw.beta_inv(j) : nw.beta(j);
    };

    const int a1 = nw.alpha(s), a2 = nw.alpha(s + 1), a3 = nw.alpha(s + 2);
    const int a1i = nw.alpha_inv(s), a2i = nw.alpha_inv(s + 1), a3i = nw.alpha_inv(s + 2);
    const int b1 = nw.beta(t), b2 = nw.beta(t + 1), b3 = nw.beta(t + 2);
    const int b1i = nw.beta_inv(t), b2i = nw.beta_inv(t + 1), b3i = nw.beta_inv(t + 2);

    const int x = old.alpha(s), xi = old.alpha_inv(s);
    const int y = old.beta(t), yi = old.beta_inv(t);

    // First/last piece of each old side when traversed in its own direction.
    auto first = [&](int u) -> int {
        if (u == x) return a1;
        if (u == xi) return a3i;
        if (u == y) return b1;
        if (u == yi) return b3i;
        return translate(u);
    };
    auto last = [&](int u) -> int {
        if (u == x) return a3;
        if (u == xi) return a1i;
        if (u == y) return b3;
        if (u == yi) return b1i;
        return translate(u);
    };

    std::vector<int> img(static_cast<std::size_t>(4 * m2), 0);
    auto put = [&](int from, int to) { img[static_cast<std::size_t>(from) - 1] = to; };

    for (int u = 1; u <= 4 * m; ++u) {
        if (u == x) continue;  // the site corner is rewired below
        put(last(u), first(sigma(u)));
    }
    // Local gluing around the pushed finger.
    put(a1, b3);
    put(a3i, b2);
    put(b2, a1i);
    put(b3i, a2);
    put(a2, b1i);
    // The two punctured bigons.
    put(a3, b1);
    put(b1, a3);
    put(a2i, b2i);
    put(b2i, a2i);

    return Perm(m2, std::move(img));
}

}  // namespace

Perm double_bigon(const Perm& sigma, int g, int n) {
    FillingValidation given = validate_filling(sigma, g, n);
    if (!given.valid()) {
        throw std::domain_error("double bigon requires a permutation valid for the given (g, n)");
    }
    const int m = sigma.m();

    // Candidate transforms normalize any alpha->beta corner to positive
    // orientations; their extensions to m+2 symbols undo the relabeling.
    struct Transform {
        bool rev_a, rev_b;
    };
    const Transform transforms[] = {{false, false}, {false, true}, {true, false}, {true, true}};

    for (const Transform& t : transforms) {
        Perm work = sigma;
        if (t.rev_a) work = conjugate_by(work, reverse_alpha_symbol);
        if (t.rev_b) work = conjugate_by(work, reverse_beta_symbol);
        for (int i = 1; i <= m; ++i) {
            int x = 2 * i - 1;  // alpha_i, positive
            int y = work(x);
            if (y % 2 != 0 || y > 2 * m) continue;  // need positive beta image
            Perm out = apply_bigon_pattern(work, i, y / 2);
            if (t.rev_b) out = conjugate_by(out, reverse_beta_symbol);
            if (t.rev_a) out = conjugate_by(out, reverse_alpha_symbol);
            FillingValidation v = validate_filling(out, g, n + 2);
            if (v.valid() && v.cycle_count == given.cycle_count + 2 &&
                v.two_cycle_count == given.two_cycle_count + 2) {
                return out;
            }
        }
    }
    throw std::domain_error("no bigon site admits the push");
}

}  // namespace mindil
