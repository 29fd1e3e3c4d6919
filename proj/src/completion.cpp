#include "sspc/completion.hpp"

#include <algorithm>
#include <stdexcept>

#include "sspc/symbolic.hpp"

namespace sspc {

std::uint64_t derive_seed(std::uint64_t base, const std::string& tag, std::uint64_t a,
                          std::uint64_t b) {
    // FNV-1a over the tag and parts, then a splitmix-style avalanche so that
    // consecutive sample indices do not produce correlated streams.
    std::uint64_t h = 1469598103934665603ULL ^ base;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    for (unsigned char ch : tag) mix(ch);
    mix(a);
    mix(b);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
}

std::vector<Rational> CompletionConfig::default_magnitude_grid() {
    return {rat(1, 8), rat(1, 4), rat(1, 2), rat(4, 5), rat(1), rat(2), rat(4)};
}

void CompletionConfig::validate() const {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    if (magnitude_grid.empty()) throw std::invalid_argument("magnitude grid must be nonempty");
    for (std::size_t k = 0; k < magnitude_grid.size(); ++k) {
        if (sign_of(magnitude_grid[k]) <= 0)
            throw std::invalid_argument("magnitude grid entries must be positive");
        if (k > 0 && !(magnitude_grid[k - 1] < magnitude_grid[k]))
            throw std::invalid_argument("magnitude grid must be strictly increasing");
    }
    if (t_max_exponent < 0) throw std::invalid_argument("t_max_exponent must be nonnegative");
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::already_complete: return "already-complete";
        case Strategy::zero: return "zero";
        case Strategy::loopless: return "loopless";
        case Strategy::search: return "search";
    }
    return "?";
}

CompletionResult complete_zero(const PartialMatrix& p, MatrixClass c) {
    PartialMatrix q = p;
    const int n = q.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!q.specified(i, j)) q.set(i, j, i == j ? Rational(1) : Rational(0));
    ExactMatrix m = q.to_exact();
    CompletionResult r;
    r.strategy = Strategy::zero;
    r.evaluations_used = 1;
    if (is_member(m, c).member) {
        r.found = true;
        r.matrix = m;
    }
    return r;
}

CompletionResult complete_loopless(const PartialMatrix& p, MatrixClass c,
                                   const CompletionConfig& cfg) {
    cfg.validate();
    const int n = p.order();
    for (int i = 1; i <= n; ++i)
        if (p.specified(i, i))
            throw std::invalid_argument("loopless construction needs every diagonal unspecified");

    CompletionResult r;
    r.strategy = Strategy::loopless;
    Rational t = 1;    // 2^m, the common diagonal
    Rational inv = 1;  // 2^-m, the shrinking reply to each specified entry
    for (int m = 0; m <= cfg.t_max_exponent; ++m) {
        PartialMatrix q = p;
        for (int i = 1; i <= n; ++i) q.set(i, i, t);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                bool fwd = q.specified(i, j), bwd = q.specified(j, i);
                if (fwd && bwd) continue;
                if (!fwd && !bwd) {
                    q.set(i, j, 0);
                    q.set(j, i, 0);
                } else if (fwd) {
                    q.set(j, i, sign_of(q.value(i, j)) * inv);
                } else {
                    q.set(i, j, sign_of(q.value(j, i)) * inv);
                }
            }
        }
        ExactMatrix cand = q.to_exact();
        ++r.evaluations_used;
        // Each k x k principal minor is t^k plus terms of lower degree in t,
        // so a large enough diagonal always wins; the loop is a search for
        // the first exponent that does, not a hope.
        if (is_member(cand, c).member) {
            r.found = true;
            r.matrix = cand;
            return r;
        }
        t *= 2;
        inv /= 2;
    }
    return r;
}

namespace {

// The unspecified cells of a partial matrix, grouped the way assignments are
// drawn: twin pairs with both cells free, cells whose twin is specified, and
// free diagonal entries.
struct PairSlot {
    int i = 0, j = 0;  // i < j; both (i,j) and (j,i) unspecified
};
struct HalfSlot {
    int i = 0, j = 0;  // (i,j) unspecified, (j,i) specified
    int opp_sign = 0;  // sign of the specified twin
};
struct Slots {
    std::vector<PairSlot> pairs;
    std::vector<HalfSlot> halves;
    std::vector<int> diags;
};

Slots scan_free(const PartialMatrix& p) {
    Slots s;
    const int n = p.order();
    for (int i = 1; i <= n; ++i)
        if (!p.specified(i, i)) s.diags.push_back(i);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            bool fwd = p.specified(i, j), bwd = p.specified(j, i);
            if (fwd && bwd) continue;
            if (!fwd && !bwd)
                s.pairs.push_back({i, j});
            else if (!fwd)
                s.halves.push_back({i, j, sign_of(p.value(j, i))});
            else
                s.halves.push_back({j, i, sign_of(p.value(i, j))});
        }
    }
    return s;
}

// Grid-indexed assignment of the free cells. Keeping indices instead of
// values makes the greedy neighborhood (step one grid notch) trivial.
struct PairVal {
    bool zero = true;
    int sign = 1;
    int mi = 0, mj = 0;
};
struct HalfVal {
    bool zero = true;
    int sign = 1;
    int m = 0;
};
struct Asg {
    std::vector<PairVal> pairs;
    std::vector<HalfVal> halves;
    std::vector<int> diags;  // grid indices
};

ExactMatrix apply_asg(const PartialMatrix& p, const Slots& slots, const Asg& a,
                      const std::vector<Rational>& grid) {
    PartialMatrix q = p;
    for (std::size_t k = 0; k < slots.pairs.size(); ++k) {
        const PairSlot& s = slots.pairs[k];
        const PairVal& v = a.pairs[k];
        if (v.zero) {
            q.set(s.i, s.j, 0);
            q.set(s.j, s.i, 0);
        } else {
            q.set(s.i, s.j, Rational(v.sign) * grid[static_cast<std::size_t>(v.mi)]);
            q.set(s.j, s.i, Rational(v.sign) * grid[static_cast<std::size_t>(v.mj)]);
        }
    }
    for (std::size_t k = 0; k < slots.halves.size(); ++k) {
        const HalfSlot& s = slots.halves[k];
        const HalfVal& v = a.halves[k];
        q.set(s.i, s.j,
              v.zero ? Rational(0) : Rational(v.sign) * grid[static_cast<std::size_t>(v.m)]);
    }
    for (std::size_t k = 0; k < slots.diags.size(); ++k)
        q.set(slots.diags[k], slots.diags[k], grid[static_cast<std::size_t>(a.diags[k])]);
    return q.to_exact();
}

// Outcome of one exact verification, with enough structure for the repair
// step: how many minor conditions fail and which principal minor is the most
// broken one (most negative; the lexicographically first minor of a
// positive-minor-starved order when nothing is negative).
struct Eval {
    bool member = false;
    long violations = 0;
    bool has_worst = false;
    Rational worst;
    IndexSet worst_set;
};

Eval evaluate(const ExactMatrix& m, MatrixClass c) {
    MinorProfile prof = minor_profile(m);
    MembershipVerdict v = is_member(m, c, prof);
    Eval e;
    e.member = v.member;
    if (e.member) return e;
    const bool strict = requires_all_minors_positive(c);
    const bool per_order = requires_positive_minor_per_order(c);
    for (const OrderSummary& os : prof.by_order) {
        for (const MinorEntry& me : os.minors) {
            int s = sign_of(me.value);
            if (s < 0 || (strict && s == 0)) {
                ++e.violations;
                if (!e.has_worst || me.value < e.worst) {
                    e.worst = me.value;
                    e.worst_set = me.set;
                    e.has_worst = true;
                }
            }
        }
        if (per_order && !strict && os.positive == 0) {
            ++e.violations;
            if (!e.has_worst) {
                e.worst = os.minors.front().value;
                e.worst_set = os.minors.front().set;
                e.has_worst = true;
            }
        }
    }
    return e;
}

// Strictly better: fewer broken conditions, then a less negative worst minor.
bool better(const Eval& a, const Eval& b) {
    if (a.violations != b.violations) return a.violations < b.violations;
    if (a.has_worst && b.has_worst) return b.worst < a.worst;
    return false;
}

int upper_grid_start(const std::vector<Rational>& grid) {
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (grid[k] >= 1) return static_cast<int>(k);
    return static_cast<int>(grid.size()) - 1;
}

Asg draw_asg(Rng& rng, const Slots& slots, MatrixClass c, const std::vector<Rational>& grid) {
    const bool ss = requires_sign_symmetry(c);
    const int gsz = static_cast<int>(grid.size());
    const int diag_lo = upper_grid_start(grid);
    Asg a;
    a.pairs.reserve(slots.pairs.size());
    for (std::size_t k = 0; k < slots.pairs.size(); ++k) {
        PairVal v;
        if (rng.chance(1, 4)) {
            v.zero = true;
        } else {
            v.zero = false;
            v.sign = rng.chance(1, 2) ? 1 : -1;
            v.mi = static_cast<int>(rng.below(gsz));
            v.mj = static_cast<int>(rng.below(gsz));
        }
        a.pairs.push_back(v);
    }
    a.halves.reserve(slots.halves.size());
    for (const HalfSlot& s : slots.halves) {
        HalfVal v;
        if (s.opp_sign == 0) {
            // A zero twin pins the cell for sign symmetric targets; for the
            // plain classes a nonzero reply is occasionally worth a try.
            if (ss || rng.chance(1, 2)) {
                v.zero = true;
            } else {
                v.zero = false;
                v.sign = rng.chance(1, 2) ? 1 : -1;
                v.m = static_cast<int>(rng.below(gsz));
            }
        } else if (ss) {
            v.zero = false;
            v.sign = s.opp_sign;
            v.m = static_cast<int>(rng.below(gsz));
        } else {
            if (rng.chance(1, 8)) {
                v.zero = true;
            } else {
                v.zero = false;
                v.sign = rng.chance(3, 4) ? s.opp_sign : -s.opp_sign;
                v.m = static_cast<int>(rng.below(gsz));
            }
        }
        a.halves.push_back(v);
    }
    a.diags.reserve(slots.diags.size());
    for (std::size_t k = 0; k < slots.diags.size(); ++k)
        a.diags.push_back(diag_lo + static_cast<int>(rng.below(gsz - diag_lo)));
    return a;
}

// Neighbor assignments differing in one free cell (or one twin pair) that
// appears inside the broken minor.
std::vector<Asg> neighbors(const Asg& a, const Slots& slots, const IndexSet& target, MatrixClass c,
                           const std::vector<Rational>& grid) {
    const bool ss = requires_sign_symmetry(c);
    const int gmax = static_cast<int>(grid.size()) - 1;
    std::vector<Asg> out;
    auto in_target = [&target](int i, int j) { return target.contains(i) && target.contains(j); };

    for (std::size_t k = 0; k < slots.pairs.size(); ++k) {
        const PairSlot& s = slots.pairs[k];
        if (!in_target(s.i, s.j)) continue;
        const PairVal& v = a.pairs[k];
        if (v.zero) {
            for (int sign : {1, -1}) {
                Asg b = a;
                b.pairs[k] = {false, sign, 0, 0};
                out.push_back(std::move(b));
            }
        } else {
            {
                Asg b = a;
                b.pairs[k] = PairVal{};
                out.push_back(std::move(b));
            }
            {
                Asg b = a;
                b.pairs[k].sign = -v.sign;
                out.push_back(std::move(b));
            }
            for (int d : {-1, 1}) {
                if (v.mi + d >= 0 && v.mi + d <= gmax) {
                    Asg b = a;
                    b.pairs[k].mi += d;
                    out.push_back(std::move(b));
                }
                if (v.mj + d >= 0 && v.mj + d <= gmax) {
                    Asg b = a;
                    b.pairs[k].mj += d;
                    out.push_back(std::move(b));
                }
            }
        }
    }
    for (std::size_t k = 0; k < slots.halves.size(); ++k) {
        const HalfSlot& s = slots.halves[k];
        if (!in_target(s.i, s.j)) continue;
        const HalfVal& v = a.halves[k];
        if (v.zero) {
            if (s.opp_sign != 0) {
                Asg b = a;
                b.halves[k] = {false, s.opp_sign, 0};
                out.push_back(std::move(b));
            } else if (!ss) {
                for (int sign : {1, -1}) {
                    Asg b = a;
                    b.halves[k] = {false, sign, 0};
                    out.push_back(std::move(b));
                }
            }
        } else {
            for (int d : {-1, 1}) {
                if (v.m + d >= 0 && v.m + d <= gmax) {
                    Asg b = a;
                    b.halves[k].m += d;
                    out.push_back(std::move(b));
                }
            }
            if (!ss || s.opp_sign == 0) {
                Asg b = a;
                b.halves[k] = HalfVal{};
                out.push_back(std::move(b));
            }
            if (!ss) {
                Asg b = a;
                b.halves[k].sign = -v.sign;
                out.push_back(std::move(b));
            }
        }
    }
    for (std::size_t k = 0; k < slots.diags.size(); ++k) {
        if (!target.contains(slots.diags[k])) continue;
        for (int d : {-1, 1}) {
            int m = a.diags[k] + d;
            if (m >= 0 && m <= gmax) {
                Asg b = a;
                b.diags[k] = m;
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

}  // namespace

CompletionResult search_completion(const PartialMatrix& p, MatrixClass c,
                                   const CompletionConfig& cfg) {
    cfg.validate();
    CompletionResult r;
    r.strategy = Strategy::search;
    // A partial matrix that already fails on its specified cells has no
    // completion; report exhaustion without spending the budget.
    if (!is_partial_member_for(p, c).member) return r;

    const std::vector<Rational>& grid = cfg.magnitude_grid;
    auto admit = [&](const ExactMatrix& m) -> bool {
        ++r.evaluations_used;
        if (!is_member(m, c).member) return false;
        r.found = true;
        r.matrix = m;
        return true;
    };

    if (p.is_fully_specified()) {
        admit(p.to_exact());
        return r;
    }

    const Slots slots = scan_free(p);
    const int n = p.order();

    // Deterministic openers. The zero completion and its sign-respecting
    // neighborhood settle most instances in one or two evaluations.
    {
        PartialMatrix q = p;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!q.specified(i, j)) q.set(i, j, i == j ? Rational(1) : Rational(0));
        if (admit(q.to_exact())) return r;
    }
    if (!slots.halves.empty()) {
        PartialMatrix q = p;
        for (const PairSlot& s : slots.pairs) {
            q.set(s.i, s.j, 0);
            q.set(s.j, s.i, 0);
        }
        for (const HalfSlot& s : slots.halves) q.set(s.i, s.j, Rational(s.opp_sign) * grid.front());
        for (int i : slots.diags) q.set(i, i, 1);
        if (r.evaluations_used >= cfg.budget) return r;
        if (admit(q.to_exact())) return r;
    }
    if (!slots.halves.empty() || !slots.diags.empty()) {
        // Shrink ladder: answer each specified entry with an ever smaller
        // same-signed value while the free diagonal grows, the same shape
        // the loopless construction uses.
        Rational t = 1, inv = 1;
        const int ladder_max = std::min(cfg.t_max_exponent, 12);
        for (int L = 0; L <= ladder_max; ++L) {
            PartialMatrix q = p;
            for (const PairSlot& s : slots.pairs) {
                q.set(s.i, s.j, 0);
                q.set(s.j, s.i, 0);
            }
            for (const HalfSlot& s : slots.halves) q.set(s.i, s.j, Rational(s.opp_sign) * inv);
            for (int i : slots.diags) q.set(i, i, t);
            if (r.evaluations_used >= cfg.budget) return r;
            if (admit(q.to_exact())) return r;
            t *= 2;
            inv /= 2;
        }
    }

    // Randomized phase with a short greedy repair after every miss. The
    // candidate stream depends on the input, seed and grid only, never on
    // the budget, so enlarging the budget replays the same sequence further
    // instead of a different one.
    Rng rng(derive_seed(cfg.seed, "search-completion"));
    while (r.evaluations_used < cfg.budget) {
        Asg cur = draw_asg(rng, slots, c, grid);
        ExactMatrix m = apply_asg(p, slots, cur, grid);
        ++r.evaluations_used;
        Eval cur_eval = evaluate(m, c);
        if (cur_eval.member) {
            r.found = true;
            r.matrix = m;
            return r;
        }
        for (int round = 0; round < 6 && cur_eval.has_worst; ++round) {
            std::vector<Asg> cands = neighbors(cur, slots, cur_eval.worst_set, c, grid);
            bool improved = false;
            for (const Asg& b : cands) {
                if (r.evaluations_used >= cfg.budget) return r;
                ExactMatrix mb = apply_asg(p, slots, b, grid);
                ++r.evaluations_used;
                Eval eb = evaluate(mb, c);
                if (eb.member) {
                    r.found = true;
                    r.matrix = mb;
                    return r;
                }
                if (better(eb, cur_eval)) {
                    cur = b;
                    cur_eval = eb;
                    improved = true;
                    break;  // first improvement keeps the scan cheap
                }
            }
            if (!improved) break;
        }
    }
    return r;
}

CompletionResult complete_auto(const PartialMatrix& p, MatrixClass c,
                               const CompletionConfig& cfg) {
    cfg.validate();
    if (p.is_fully_specified()) {
        ExactMatrix m = p.to_exact();
        CompletionResult r;
        r.strategy = Strategy::already_complete;
        r.evaluations_used = 1;
        if (is_member(m, c).member) {
            r.found = true;
            r.matrix = m;
        }
        return r;
    }
    CompletionResult z = complete_zero(p, c);
    if (z.found) return z;
    bool loopless = true;
    for (int i = 1; i <= p.order(); ++i)
        if (p.specified(i, i)) loopless = false;
    CompletionResult r = loopless ? complete_loopless(p, c, cfg) : search_completion(p, c, cfg);
    r.evaluations_used += z.evaluations_used;
    return r;
}

PartialMatrix two_cycle_witness(const Pattern& g) {
    PartialMatrix w(g.n);
    for (int i : g.loops) w.set(i, i, 1);
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i + 1; j <= g.n; ++j) {
            bool fwd = g.has_arc(i, j), bwd = g.has_arc(j, i);
            if (fwd && bwd) {
                w.set(i, j, -1);
                w.set(j, i, -1);
            } else if (fwd) {
                w.set(i, j, 0);
            } else if (bwd) {
                w.set(j, i, 0);
            }
        }
    }
    return w;
}

std::optional<PartialMatrix> random_partial_member(const Pattern& g, MatrixClass c, Rng& rng,
                                                   const std::vector<Rational>& grid,
                                                   int max_tries) {
    const bool ss = requires_sign_symmetry(c);
    const bool zero_diag_ok =
        !requires_positive_diagonal(c) && !requires_all_minors_positive(c);
    const std::uint64_t gsz = grid.size();
    for (int t = 0; t < max_tries; ++t) {
        PartialMatrix p(g.n);
        for (int i : g.loops) {
            if (zero_diag_ok && rng.chance(1, 8))
                p.set(i, i, 0);
            else
                p.set(i, i, grid[static_cast<std::size_t>(rng.below(gsz))]);
        }
        for (int i = 1; i <= g.n; ++i) {
            for (int j = i + 1; j <= g.n; ++j) {
                bool fwd = g.has_arc(i, j), bwd = g.has_arc(j, i);
                if (fwd && bwd) {
                    if (rng.chance(1, 4)) {
                        p.set(i, j, 0);
                        p.set(j, i, 0);
                    } else if (ss) {
                        Rational s = rng.chance(1, 2) ? 1 : -1;
                        p.set(i, j, s * grid[static_cast<std::size_t>(rng.below(gsz))]);
                        p.set(j, i, s * grid[static_cast<std::size_t>(rng.below(gsz))]);
                    } else {
                        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                            Rational s = rng.chance(1, 2) ? 1 : -1;
                            p.set(a, b,
                                  rng.chance(1, 8)
                                      ? Rational(0)
                                      : s * grid[static_cast<std::size_t>(rng.below(gsz))]);
                        }
                    }
                } else if (fwd || bwd) {
                    int a = fwd ? i : j, b = fwd ? j : i;
                    if (rng.chance(1, 4)) {
                        p.set(a, b, 0);
                    } else {
                        Rational s = rng.chance(1, 2) ? 1 : -1;
                        p.set(a, b, s * grid[static_cast<std::size_t>(rng.below(gsz))]);
                    }
                }
            }
        }
        if (is_partial_member_for(p, c).member) return p;
    }
    return std::nullopt;
}

std::optional<PartialMatrix> find_hard_partial(const Pattern& g, MatrixClass c,
                                               const CompletionConfig& cfg) {
    cfg.validate();
    std::vector<PartialMatrix> cands;
    cands.push_back(two_cycle_witness(g));
    cands.push_back(g.to_partial(1));
    {
        PartialMatrix z(g.n);
        for (int i : g.loops) z.set(i, i, 1);
        for (const auto& [i, j] : g.arcs) z.set(i, j, 0);
        cands.push_back(z);
    }
    Rng rng(derive_seed(cfg.seed, "hard-partial"));
    const std::uint64_t gsz = cfg.magnitude_grid.size();
    for (int k = 0; k < 13; ++k) {
        PartialMatrix p(g.n);
        for (int i : g.loops) p.set(i, i, 1);
        for (int i = 1; i <= g.n; ++i) {
            for (int j = i + 1; j <= g.n; ++j) {
                bool fwd = g.has_arc(i, j), bwd = g.has_arc(j, i);
                if (fwd && bwd) {
                    if (rng.chance(1, 4)) {
                        p.set(i, j, 0);
                        p.set(j, i, 0);
                    } else {
                        Rational s = rng.chance(1, 2) ? 1 : -1;
                        p.set(i, j, s * cfg.magnitude_grid[static_cast<std::size_t>(rng.below(gsz))]);
                        p.set(j, i, s * cfg.magnitude_grid[static_cast<std::size_t>(rng.below(gsz))]);
                    }
                } else if (fwd || bwd) {
                    int a = fwd ? i : j, b = fwd ? j : i;
                    if (rng.chance(1, 4)) {
                        p.set(a, b, 0);
                    } else {
                        Rational s = rng.chance(1, 2) ? 1 : -1;
                        p.set(a, b, s * cfg.magnitude_grid[static_cast<std::size_t>(rng.below(gsz))]);
                    }
                }
            }
        }
        cands.push_back(p);
    }

    std::vector<PartialMatrix> members;
    for (const PartialMatrix& p : cands)
        if (is_partial_member_for(p, c).member) members.push_back(p);

    // A vanishing symbolic determinant is a proof, so that pass runs first;
    // the search pass only certifies "the engine could not complete this".
    if (requires_positive_minor_per_order(c) && g.n <= 6) {
        for (const PartialMatrix& p : members)
            if (!p.is_fully_specified() && sym_det(lift(p)).is_zero()) return p;
    }
    for (const PartialMatrix& p : members) {
        CompletionResult res = search_completion(p, c, cfg);
        if (!res.found) return p;
    }
    return std::nullopt;
}

}  // namespace sspc
