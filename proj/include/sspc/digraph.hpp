#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sspc/partial_matrix.hpp"

namespace sspc {

// The specification pattern of a partial matrix as a digraph: vertex i has a
// loop iff cell (i,i) is specified, arc (i,j) exists iff the off-diagonal
// cell (i,j) is specified. q below always counts off-diagonal arcs; loops
// are tracked separately.
struct Pattern {
    int n = 0;
    std::set<int> loops;                       // 1-based vertices
    std::set<std::pair<int, int>> arcs;        // i != j

    static Pattern of(const PartialMatrix& p);
    // All loops, no arcs.
    static Pattern all_loops_null(int n);

    bool has_loop(int i) const { return loops.count(i) > 0; }
    bool has_arc(int i, int j) const { return arcs.count({i, j}) > 0; }
    bool all_loops() const { return static_cast<int>(loops.size()) == n; }
    int q() const { return static_cast<int>(arcs.size()); }

    // Partial matrix with every cell this pattern specifies set to `fill`.
    PartialMatrix to_partial(const Rational& fill) const;

    std::string to_text() const;
    bool operator==(const Pattern&) const = default;
};

// Text format: first line "p q" (q = off-diagonal arc count), optionally a
// line "loops=all", then one line per loop "i i" and per arc "i j".
Pattern parse_pattern(const std::string& text);

struct StructuralProps {
    int q = 0;
    bool is_null = false;        // no arcs
    bool is_complete = false;    // all loops and all n(n-1) arcs
    bool is_symmetric = false;   // arc set closed under reversal
    bool is_asymmetric = false;  // no 2-cycle among distinct vertices
    bool has_two_cycle = false;
    bool all_loops = false;
    bool loopless = false;
};

StructuralProps structural_props(const Pattern& g);

// Lexicographically minimal encoding of the pattern over all vertex
// relabelings: "n|loopbits|arcbits" with arc positions in row-major order
// over ordered pairs (i,j), i != j. Brute force over n! permutations, which
// is the honest choice at n <= 8; two patterns get the same code exactly
// when they are isomorphic.
struct CanonicalForm {
    std::string code;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Pattern& g);
// The pattern the code denotes (the canonical representative itself).
Pattern pattern_of_code(const CanonicalForm& form);

// Execution mode for the data-parallel kernels. Results are identical by
// construction; serial is kept as the reference the tests compare against.
enum class Exec { serial, parallel };

// Every pattern on p <= 4 vertices up to isomorphism, sorted by
// (q, canonical code). With all_loops (the default) only the off-diagonal
// arc sets vary and every vertex keeps its loop; that is the universe the
// completion catalog speaks about, since a catalog entry has every diagonal
// cell specified. all_loops = false enumerates loop subsets as well.
std::vector<Pattern> enumerate_patterns(int p, bool all_loops = true, Exec exec = Exec::serial);

}  // namespace sspc
