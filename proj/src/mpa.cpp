#include "mpa.hpp"

#include <algorithm>
#include <future>

namespace macuv {

namespace {

// Mode layout for the transfer state vector. Occupation modes (family <=
// copy) use one slot; traced modes (family > copy) use three: the symbolic
// offset d and the accumulated z- and w-degrees of the trace monomial.
struct Layout {
    std::vector<ModeKey> modes;
    std::vector<ModeRole> roles;
    std::vector<int> slot;
    int total_slots = 0;

    explicit Layout(int rank) {
        for (int f = 1; f <= rank; ++f)
            for (int c = 1; c <= rank; ++c) modes.push_back({f, c});
        std::sort(modes.begin(), modes.end());
        for (const auto& m : modes) {
            roles.push_back(mode_role(m));
            slot.push_back(total_slots);
            total_slots += mode_role(m) == ModeRole::Traced ? 3 : 1;
        }
    }

    int index_of(const ModeKey& m) const {
        auto it = std::lower_bound(modes.begin(), modes.end(), m);
        return static_cast<int>(it - modes.begin());
    }
};

using State = std::vector<int>;
using StateMap = std::map<State, XPoly>;

// One expanded word of an L-matrix entry: a rational prefactor, the power of
// the row's spectral variable, and generator lists per mode index.
struct LWord {
    RatFunc coef;
    int xdeg = 0;
    std::vector<std::pair<int, ModeWord>> gens; // (mode index in layout, word)
};

using EntryWords = std::vector<LWord>;

// words[copy-1][row][col]
std::vector<std::vector<std::vector<EntryWords>>> build_word_tables(int rank, bool simplify,
                                                                    const Layout& layout) {
    std::vector<std::vector<std::vector<EntryWords>>> tables;
    for (int copy = 1; copy <= rank; ++copy) {
        LMatrix L = build_L(rank, copy, 1, 1);
        if (simplify) L = simplify_L(L);
        int w = rank + 1;
        std::vector<std::vector<EntryWords>> grid(w, std::vector<EntryWords>(w));
        for (int i = 0; i < w; ++i) {
            for (int j = 0; j < w; ++j) {
                for (const auto& term : L.entries[i][j].terms()) {
                    std::vector<std::pair<int, ModeWord>> gens;
                    for (const auto& [mode, word] : term.words)
                        gens.emplace_back(layout.index_of(mode), word);
                    for (const auto& [e, c] : term.scalar.terms()) {
                        LWord lw;
                        lw.coef = c;
                        lw.xdeg = e[0];
                        lw.gens = gens;
                        grid[i][j].push_back(std::move(lw));
                    }
                }
            }
        }
        tables.push_back(std::move(grid));
    }
    return tables;
}

class Transfer {
public:
    Transfer(int rank, int n, bool simplify)
        : rank_(rank), n_(n), layout_(rank), words_(build_word_tables(rank, simplify, layout_)) {}

    // Initial state: empty occupations, traced monomials set by the twist
    // S^{(c)} = prod_{f>c} k_f^{(f-c)alpha}, i.e. w-degree f-c per traced mode.
    StateMap initial() const {
        State s(layout_.total_slots, 0);
        for (size_t k = 0; k < layout_.modes.size(); ++k) {
            if (layout_.roles[k] != ModeRole::Traced) continue;
            const ModeKey& m = layout_.modes[k];
            s[layout_.slot[k] + 2] = m.family - m.copy; // w-degree from the twist
        }
        StateMap map;
        map.emplace(std::move(s), XPoly::one(n_));
        return map;
    }

    // Applies one ZF operator A_top(x_var) to every state. top = -1 sums all.
    StateMap step(const StateMap& in, int top, int var, int remaining) const {
        StateMap out;
        XPoly xv = XPoly::variable(n_, var);
        for (const auto& [state, weight] : in) {
            if (top >= 0) {
                walk(state, weight, xv, top, 0, RatFunc(1), 0, remaining, out);
            } else {
                for (int s0 = 0; s0 <= rank_; ++s0)
                    walk(state, weight, xv, s0, 0, RatFunc(1), 0, remaining, out);
            }
        }
        return out;
    }

    // Bra contraction: diagonal modes must hold target multiplicities, vacuum
    // modes must be empty, traced modes close through the geometric series.
    XPoly close(const StateMap& in, const std::vector<int>& diag_target) const {
        XPoly total(n_);
        for (const auto& [state, weight] : in) {
            RatFunc factor(1);
            bool alive = true;
            for (size_t k = 0; k < layout_.modes.size() && alive; ++k) {
                int base = layout_.slot[k];
                switch (layout_.roles[k]) {
                    case ModeRole::Diagonal:
                        alive = state[base] == diag_target[layout_.modes[k].family - 1];
                        break;
                    case ModeRole::Vacuum:
                        alive = state[base] == 0;
                        break;
                    case ModeRole::Traced: {
                        if (state[base] != 0) {
                            alive = false;
                            break;
                        }
                        int zdeg = state[base + 1], wdeg = state[base + 2];
                        if (zdeg == 0 && wdeg == 0)
                            throw Error("eval_f: divergent trace (missing twist weight)");
                        factor = factor / one_minus_monomial(wdeg, zdeg);
                        break;
                    }
                }
            }
            if (alive) total += weight * factor;
        }
        return total;
    }

    // Occupation changes per factor are at most one per mode, which bounds how
    // far a state may still drift; anything out of reach is dropped.
    void prune(StateMap& map, const std::vector<int>& diag_target, int remaining) const {
        for (auto it = map.begin(); it != map.end();) {
            bool alive = true;
            const State& s = it->first;
            for (size_t k = 0; k < layout_.modes.size() && alive; ++k) {
                int base = layout_.slot[k];
                switch (layout_.roles[k]) {
                    case ModeRole::Diagonal:
                        alive = std::abs(s[base] - diag_target[layout_.modes[k].family - 1]) <=
                                remaining;
                        break;
                    case ModeRole::Vacuum:
                        alive = s[base] <= remaining;
                        break;
                    case ModeRole::Traced:
                        alive = std::abs(s[base]) <= remaining;
                        break;
                }
            }
            it = alive ? std::next(it) : map.erase(it);
        }
    }

private:
    // DFS across copies: at copy c the path state transitions s -> s' through
    // entry (s, s') of L^{(c)}.
    void walk(const State& state, const XPoly& weight, const XPoly& xv, int s, int copy,
              RatFunc coef, int xdeg, int remaining, StateMap& out) const {
        if (copy == rank_) {
            if (s != 0) return;
            XPoly contrib = weight * coef;
            for (int d = 0; d < xdeg; ++d) contrib = contrib * xv;
            auto [it, inserted] = out.try_emplace(state, contrib);
            if (!inserted) it->second += contrib;
            return;
        }
        for (int next = 0; next <= rank_; ++next) {
            for (const auto& word : words_[copy][s][next]) {
                apply_word(state, word, [&](const State& st, const RatFunc& c) {
                    walk(st, weight, xv, next, copy + 1, coef * c * word.coef,
                         xdeg + word.xdeg, remaining, out);
                });
            }
        }
    }

    template <typename Emit>
    void apply_word(const State& state, const LWord& word, Emit&& emit) const {
        State st = state;
        RatFunc coef(1);
        apply_gens(st, coef, word.gens, 0, 0, std::forward<Emit>(emit));
    }

    // Generators are applied right-to-left within each mode word; a phi on a
    // traced mode branches over the two monomials of (1 - t^d z).
    template <typename Emit>
    void apply_gens(State& st, RatFunc coef, const std::vector<std::pair<int, ModeWord>>& gens,
                    size_t gi, size_t within, Emit&& emit) const {
        if (gi == gens.size()) {
            emit(st, coef);
            return;
        }
        const auto& [mode_idx, word] = gens[gi];
        if (within == word.size()) {
            apply_gens(st, coef, gens, gi + 1, 0, std::forward<Emit>(emit));
            return;
        }
        const BosonGen& g = word[word.size() - 1 - within];
        int base = layout_.slot[mode_idx];
        if (layout_.roles[mode_idx] != ModeRole::Traced) {
            int occ = st[base];
            int next = 0;
            RatFunc c = fock_step(g, occ, FockNorm::Standard, next);
            if (c.is_zero()) return;
            st[base] = next;
            apply_gens(st, coef * c, gens, gi, within + 1, std::forward<Emit>(emit));
            st[base] = occ;
            return;
        }
        int d = st[base];
        switch (g.kind) {
            case BosonGen::Kind::Phi: {
                // branch (1 - t^d z): unit part, then -t^d with z-degree +1
                st[base] = d - 1;
                apply_gens(st, coef, gens, gi, within + 1, emit);
                st[base + 1] += 1;
                apply_gens(st, coef * -t_power(d), gens, gi, within + 1, emit);
                st[base + 1] -= 1;
                st[base] = d;
                return;
            }
            case BosonGen::Kind::PhiDag:
                st[base] = d + 1;
                apply_gens(st, coef, gens, gi, within + 1, std::forward<Emit>(emit));
                st[base] = d;
                return;
            case BosonGen::Kind::KPow: {
                st[base + 1] += g.tpow;
                st[base + 2] += g.qpow;
                RatFunc c = t_power(g.tpow * d) * q_power(g.qpow * d);
                apply_gens(st, coef * c, gens, gi, within + 1, std::forward<Emit>(emit));
                st[base + 1] -= g.tpow;
                st[base + 2] -= g.qpow;
                return;
            }
        }
    }

    static RatFunc t_power(int e) {
        if (e >= 0) return RatFunc(monomial_qtuv(0, e));
        return RatFunc(1) / RatFunc(monomial_qtuv(0, -e));
    }
    static RatFunc q_power(int e) {
        if (e >= 0) return RatFunc(monomial_qtuv(e, 0));
        return RatFunc(1) / RatFunc(monomial_qtuv(-e, 0));
    }

    int rank_;
    int n_;
    Layout layout_;
    std::vector<std::vector<std::vector<EntryWords>>> words_;
};

std::vector<int> diag_targets(const Composition& mu, int rank) {
    std::vector<int> target(rank, 0);
    for (int i = 1; i <= rank; ++i) target[i - 1] = multiplicity(mu, i);
    return target;
}

} // namespace

XPoly eval_f(const Composition& mu, int n, const EvalOptions& opts) {
    if (static_cast<int>(mu.size()) != n) throw Error("eval_f: composition length != n");
    int rank = mu.empty() ? 0 : *std::max_element(mu.begin(), mu.end());
    if (rank == 0) return XPoly::one(n); // empty monodromy: rho(S) = 1
    Transfer transfer(rank, n, opts.simplify);
    StateMap states = transfer.initial();
    std::vector<int> target = diag_targets(mu, rank);
    // Operators act on the ket right to left: factor for x_n first.
    for (int a = n; a >= 1; --a) {
        int remaining = a - 1;
        states = transfer.step(states, mu[a - 1], a, remaining);
        transfer.prune(states, target, remaining);
    }
    return transfer.close(states, target);
}

XPoly eval_P(const Partition& lambda, int n, const EvalOptions& opts) {
    if (lambda.rank() == 0) return XPoly::one(n);
    if (lambda.nonzero_length() > n) throw Error("eval_P: n too small for lambda");
    auto members = orbit(lambda, n);
    std::vector<XPoly> values(members.size());
    if (opts.jobs > 1) {
        std::vector<std::future<XPoly>> futs;
        for (const auto& mu : members)
            futs.push_back(std::async(std::launch::async,
                                      [&, mu]() { return eval_f(mu, n, opts); }));
        for (size_t k = 0; k < futs.size(); ++k) values[k] = futs[k].get();
    } else {
        for (size_t k = 0; k < members.size(); ++k) values[k] = eval_f(members[k], n, opts);
    }
    XPoly sum(n);
    for (const auto& value : values) sum += value;
    return sum * omega(lambda);
}

XPoly eval_P_product(const Partition& lambda, int n, const EvalOptions& opts) {
    if (lambda.rank() == 0) return XPoly::one(n);
    if (lambda.nonzero_length() > n) throw Error("eval_P_product: n too small for lambda");
    int rank = lambda.rank();
    Transfer transfer(rank, n, opts.simplify);
    StateMap states = transfer.initial();
    Composition as_comp = lambda.parts();
    as_comp.resize(n, 0);
    std::vector<int> target = diag_targets(as_comp, rank);
    for (int a = n; a >= 1; --a) {
        int remaining = a - 1;
        states = transfer.step(states, -1, a, remaining);
        transfer.prune(states, target, remaining);
    }
    return transfer.close(states, target) * omega(lambda);
}

Report check_symmetry(const XPoly& p) {
    Report report;
    for (int i = 1; i < p.nvars(); ++i) {
        report.record(p.symmetric_in(i, i + 1),
                      "invariant under swap of x" + std::to_string(i) + ", x" +
                          std::to_string(i + 1));
    }
    if (p.nvars() <= 1) report.record(true, "trivially symmetric (single variable)");
    return report;
}

} // namespace macuv
