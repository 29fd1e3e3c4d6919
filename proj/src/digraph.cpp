#include "sspc/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace sspc {

Pattern Pattern::of(const PartialMatrix& p) {
    Pattern g;
    g.n = p.order();
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j) {
            if (!p.specified(i, j)) continue;
            if (i == j)
                g.loops.insert(i);
            else
                g.arcs.insert({i, j});
        }
    return g;
}

Pattern Pattern::all_loops_null(int n) {
    Pattern g;
    g.n = n;
    for (int i = 1; i <= n; ++i) g.loops.insert(i);
    return g;
}

PartialMatrix Pattern::to_partial(const Rational& fill) const {
    PartialMatrix p(n);
    for (int i : loops) p.set(i, i, fill);
    for (const auto& [i, j] : arcs) p.set(i, j, fill);
    return p;
}

std::string Pattern::to_text() const {
    std::string out = std::to_string(n) + " " + std::to_string(q()) + "\n";
    if (all_loops()) {
        out += "loops=all\n";
    } else {
        for (int i : loops) out += std::to_string(i) + " " + std::to_string(i) + "\n";
    }
    for (const auto& [i, j] : arcs) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

Pattern parse_pattern(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("pattern file: missing header");
    std::istringstream head(line);
    int p = 0, q = 0;
    if (!(head >> p >> q)) throw ParseError("pattern file: header must be 'p q'");
    if (p < 1 || p > 8) throw ParseError("pattern file: order must be in 1..8");
    if (q < 0 || q > p * (p - 1)) throw ParseError("pattern file: arc count out of range");

    Pattern g;
    g.n = p;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "loops=all") {
            for (int i = 1; i <= p; ++i) g.loops.insert(i);
            continue;
        }
        int i = 0, j = 0;
        try {
            i = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("pattern file: bad line '" + line + "'");
        }
        if (!(ls >> j)) throw ParseError("pattern file: bad line '" + line + "'");
        if (i < 1 || i > p || j < 1 || j > p) throw ParseError("pattern file: vertex out of range");
        if (i == j)
            g.loops.insert(i);
        else if (!g.arcs.insert({i, j}).second)
            throw ParseError("pattern file: duplicate arc");
    }
    if (g.q() != q)
        throw ParseError("pattern file: header says q=" + std::to_string(q) + " but " +
                         std::to_string(g.q()) + " arcs listed");
    return g;
}

StructuralProps structural_props(const Pattern& g) {
    StructuralProps s;
    s.q = g.q();
    s.is_null = g.arcs.empty();
    s.all_loops = g.all_loops();
    s.loopless = g.loops.empty();
    s.is_complete = s.all_loops && s.q == g.n * (g.n - 1);
    s.is_symmetric = true;
    for (const auto& [i, j] : g.arcs) {
        if (g.has_arc(j, i))
            s.has_two_cycle = true;
        else
            s.is_symmetric = false;
    }
    s.is_asymmetric = !s.has_two_cycle;
    return s;
}

namespace {

// Encoding under a relabeling sigma (sigma[i] = new name of vertex i).
std::string encode(const Pattern& g, const std::vector<int>& sigma) {
    const int n = g.n;
    std::string loopbits(static_cast<std::size_t>(n), '0');
    std::string arcbits(static_cast<std::size_t>(n) * (n - 1), '0');
    for (int i : g.loops) loopbits[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] - 1)] = '1';
    for (const auto& [i, j] : g.arcs) {
        int si = sigma[static_cast<std::size_t>(i)];
        int sj = sigma[static_cast<std::size_t>(j)];
        // row-major position of ordered pair (si,sj) among pairs with si!=sj
        int pos = (si - 1) * (n - 1) + (sj - 1) - (sj > si ? 1 : 0);
        arcbits[static_cast<std::size_t>(pos)] = '1';
    }
    return std::to_string(n) + "|" + loopbits + "|" + arcbits;
}

}  // namespace

CanonicalForm canonical_form(const Pattern& g) {
    std::vector<int> sigma(static_cast<std::size_t>(g.n) + 1);
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::string best;
    do {
        for (int i = 1; i <= g.n; ++i) sigma[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i - 1)];
        std::string code = encode(g, sigma);
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalForm{std::move(best)};
}

Pattern pattern_of_code(const CanonicalForm& form) {
    const std::string& code = form.code;
    auto bar1 = code.find('|');
    auto bar2 = code.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
        throw ParseError("bad canonical code '" + code + "'");
    int n = std::stoi(code.substr(0, bar1));
    if (n < 1 || n > 8) throw ParseError("bad canonical code order");
    std::string loopbits = code.substr(bar1 + 1, bar2 - bar1 - 1);
    std::string arcbits = code.substr(bar2 + 1);
    if (static_cast<int>(loopbits.size()) != n ||
        static_cast<int>(arcbits.size()) != n * (n - 1))
        throw ParseError("bad canonical code length");
    Pattern g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
        if (loopbits[static_cast<std::size_t>(i - 1)] == '1') g.loops.insert(i);
    int pos = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (arcbits[static_cast<std::size_t>(pos)] == '1') g.arcs.insert({i, j});
            ++pos;
        }
    return g;
}

std::vector<Pattern> enumerate_patterns(int p, bool all_loops, Exec exec) {
    if (p < 1 || p > 4) throw std::invalid_argument("full enumeration supports orders 1..4");
    const int pairs = p * (p - 1);
    const int bits = all_loops ? pairs : pairs + p;  // loop bits appended
    const std::size_t total = std::size_t{1} << bits;

    // Ordered (i,j) pairs in the same row-major order encode() uses.
    std::vector<std::pair<int, int>> pair_at;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            if (i != j) pair_at.emplace_back(i, j);

    std::vector<std::string> codes(total);
    auto canonicalize_mask = [&](std::size_t mask) {
        Pattern g;
        if (all_loops) {
            g = Pattern::all_loops_null(p);
        } else {
            g.n = p;
            for (int v = 0; v < p; ++v)
                if (mask >> (pairs + v) & 1) g.loops.insert(v + 1);
        }
        for (int b = 0; b < pairs; ++b)
            if (mask >> b & 1) g.arcs.insert(pair_at[static_cast<std::size_t>(b)]);
        codes[mask] = canonical_form(g).code;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long mask = 0; mask < static_cast<long long>(total); ++mask)
            canonicalize_mask(static_cast<std::size_t>(mask));
    } else {
        for (std::size_t mask = 0; mask < total; ++mask) canonicalize_mask(mask);
    }

    // Dedupe; the merge is order-independent, so serial and parallel runs
    // produce identical lists.
    std::set<std::string> unique(codes.begin(), codes.end());
    std::vector<Pattern> out;
    out.reserve(unique.size());
    std::vector<std::pair<std::pair<int, std::string>, Pattern>> keyed;
    for (const std::string& code : unique) {
        Pattern g = pattern_of_code(CanonicalForm{code});
        keyed.push_back({{g.q(), code}, std::move(g)});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, g] : keyed) out.push_back(std::move(g));
    return out;
}

}  // namespace sspc
