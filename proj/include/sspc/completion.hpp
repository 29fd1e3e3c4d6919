#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sspc/classes.hpp"
#include "sspc/digraph.hpp"
#include "sspc/partial_matrix.hpp"

namespace sspc {

// Tiny deterministic PRNG (splitmix64). The standard distributions are
// implementation-defined, which would break byte-identical reports across
// platforms, so draws go through below()/pick() instead.
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }
};

// Stable seed derivation for nested deterministic processes (per pattern,
// per class, per sample). FNV-1a over the tag, then mixed with the parts.
std::uint64_t derive_seed(std::uint64_t base, const std::string& tag, std::uint64_t a = 0,
                          std::uint64_t b = 0);

struct CompletionConfig {
    std::uint64_t seed = 1;
    std::uint64_t budget = 20000;  // maximum candidate evaluations
    std::vector<Rational> magnitude_grid = default_magnitude_grid();
    int t_max_exponent = 128;  // cap for the 2^m diagonal scale

    static std::vector<Rational> default_magnitude_grid();
    void validate() const;  // budget >= 1; grid nonempty, positive, ascending
};

enum class Strategy { already_complete, zero, loopless, search };
const char* to_string(Strategy s);

struct CompletionResult {
    bool found = false;
    std::optional<ExactMatrix> matrix;  // verified member extending the input
    std::uint64_t evaluations_used = 0;
    Strategy strategy = Strategy::search;
};

// Unspecified off-diagonal cells -> 0, unspecified diagonal cells -> 1,
// then one exact verification. Exhausted when that matrix is not a member.
CompletionResult complete_zero(const PartialMatrix& p, MatrixClass c);

// The scaling construction for loopless patterns: x_ji = sign(a_ij) * 2^-m
// opposite each specified a_ij != 0 (zero opposite a zero), both-unspecified
// twins zero, every diagonal t = 2^m, with m = 0,1,2,... until the matrix
// verifies. Each k x k minor is t^k plus lower-order terms, so this
// terminates for every valid input; the cap only guards runaway inputs.
// Throws std::invalid_argument when the pattern has a loop.
CompletionResult complete_loopless(const PartialMatrix& p, MatrixClass c,
                                   const CompletionConfig& cfg);

// Randomized exact-verified search. Twin pairs are assigned jointly: both
// zero or same-sign magnitudes from the grid (signs couple within a pair but
// stay independent across pairs, so mixed-sign regions are reachable); a
// half-specified twin follows the specified sign; unspecified diagonals draw
// from the grid's upper range. Deterministic pre-candidates (zero
// completion, a near-zero sign-respecting assignment, and the loopless-style
// shrink ladder) run before the random phase; each failed candidate gets a
// bounded greedy repair pass around the most-violated minor. Every candidate
// is verified exactly and only verified matrices are returned, so Exhausted
// never means "no completion exists".
//
// Determinism: the candidate sequence depends on (input, seed, grid) only,
// never on the budget, so a larger budget finds the same completion at the
// same evaluation index (monotone-budget property).
CompletionResult search_completion(const PartialMatrix& p, MatrixClass c,
                                   const CompletionConfig& cfg);

// Adversarial generator: assigns the specified cells of g (diagonal fixed to
// 1) trying to produce a partial member of c whose search exhausts. Tries
// hand-built shapes first (all twin 2-cycles -1 with other arcs 0; all
// ones), then seeded random assignments. A witness whose lifted determinant
// vanishes identically is preferred over one that merely exhausts budget.
std::optional<PartialMatrix> find_hard_partial(const Pattern& g, MatrixClass c,
                                               const CompletionConfig& cfg);

// CLI/audit convenience: fully specified input short-circuits, then zero
// completion, then the loopless construction when it applies, else search.
CompletionResult complete_auto(const PartialMatrix& p, MatrixClass c,
                               const CompletionConfig& cfg);

// Draws a random partial member of c specifying exactly g: diagonals from
// the positive grid (zero occasionally, for classes that allow it), twin
// 2-cycles jointly signed, single arcs free, rejecting draws that violate
// partial membership. nullopt when max_tries rejections run out.
std::optional<PartialMatrix> random_partial_member(const Pattern& g, MatrixClass c, Rng& rng,
                                                   const std::vector<Rational>& grid,
                                                   int max_tries = 400);

// The hand-built witness shape the catalog's 2-cycle argument uses: all
// diagonals 1, both entries of every specified 2-cycle -1, every other
// specified cell 0. The order-3 instance on the pure 2-cycle pattern is the
// witness whose completability the audit must settle by certificate.
PartialMatrix two_cycle_witness(const Pattern& g);

}  // namespace sspc
