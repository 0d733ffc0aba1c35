#pragma once

// Test-only oracles, kept independent of the production code paths they
// check: a brute-force edge-multiset counter for multigraphs, and an
// ordered-tuple evaluation of the split-off sum (production enumerates
// unordered multisets weighted 1/symmetry; here every ordered tuple is
// visited with weight 1/l!).

#include <severi/severi.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace oracles {

inline severi::Count multigraph_bruteforce(const std::vector<int>& degrees) {
    using severi::Count;
    long long total = 0;
    for (int d : degrees) total += d;
    if (total % 2 != 0) return 0;
    const int edge_count = static_cast<int>(total / 2);
    std::vector<std::pair<int, int>> slots;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t j = i + 1; j < degrees.size(); ++j)
            slots.emplace_back(static_cast<int>(i), static_cast<int>(j));
    std::vector<int> rem = degrees;
    std::function<Count(std::size_t, int)> rec = [&](std::size_t slot, int edges_left) -> Count {
        if (edges_left == 0) {
            for (int r : rem)
                if (r != 0) return 0;
            return 1;
        }
        if (slot == slots.size()) return 0;
        auto [i, j] = slots[slot];
        Count acc = 0;
        const int cap = std::min({rem[static_cast<std::size_t>(i)],
                                  rem[static_cast<std::size_t>(j)], edges_left});
        for (int mult = 0; mult <= cap; ++mult) {
            rem[static_cast<std::size_t>(i)] -= mult;
            rem[static_cast<std::size_t>(j)] -= mult;
            acc += rec(slot + 1, edges_left - mult);
            rem[static_cast<std::size_t>(i)] += mult;
            rem[static_cast<std::size_t>(j)] += mult;
        }
        return acc;
    };
    return rec(0, edge_count);
}

// Every ordered l-tuple (l >= 0) of component profiles satisfying the
// split-off constraints, weighted 1/l!. Agrees with the multiset/1-symmetry
// evaluation because a multiset with symmetry order s corresponds to l!/s
// ordered tuples.
inline severi::Rational type2_sum_ordered(const severi::CurveConfig& parent,
                                          severi::MemoStore& memo) {
    using namespace severi;
    Rational total(0);
    if (upsilon(parent) <= 0 || !is_balanced(parent)) return total;
    const int residual_degree = parent.degree - 2;
    if (residual_degree < 0) return total;
    const int ups_budget = upsilon(parent) - 1;
    if (ups_budget < 0) return total;

    std::vector<ComponentProfile> tuple;

    std::function<void(int, int, const TangencySeq&, const TangencySeq&, const std::vector<int>&)>
        rec = [&](int deg_rem, int ups_rem, const TangencySeq& fixed_rem,
                  const TangencySeq& moving_rem, const std::vector<int>& mult_rem) {
            if (deg_rem == 0) {
                if (ups_rem != 0 || !moving_rem.is_zero()) return;
                for (int m : mult_rem)
                    if (m > 1) return;
                Count prod = 1;
                std::vector<TangencySeq> fixed_parts;
                std::vector<int> ups_parts;
                TangencySeq used;
                for (const ComponentProfile& p : tuple) {
                    prod *= seq_binomial(p.moving, p.inherited);
                    prod *= (p.moving - p.inherited).weight_product();
                    prod *= count_irreducible(p.config(), memo);
                    if (prod == 0) return;
                    fixed_parts.push_back(p.fixed);
                    used = used + p.fixed;
                    ups_parts.push_back(p.upsilon());
                }
                fixed_parts.push_back(parent.fixed - used);
                Count numer = seq_multinomial(parent.fixed, fixed_parts) *
                              multinomial(upsilon(parent) - 1, ups_parts) * prod;
                total += Rational(numer, factorial(static_cast<int>(tuple.size())));
                return;
            }
            for (int d = 1; d <= deg_rem; ++d) {
                for (const TangencySeq& fixed_share : subsequences_of(fixed_rem)) {
                    if (fixed_share.weight() > 2 * d) continue;
                    std::vector<int> share(mult_rem.size(), 0);
                    std::function<void(std::size_t, int)> shares = [&](std::size_t idx, int sum) {
                        if (fixed_share.weight() + sum > 2 * d) return;
                        if (idx == mult_rem.size()) {
                            const int moving_weight = 2 * d - fixed_share.weight() - sum;
                            for (const TangencySeq& moving : seqs_with_weight(moving_weight)) {
                                if (moving.is_zero()) continue;
                                for (const TangencySeq& inherited :
                                     subsequences_of(componentwise_min(moving, moving_rem))) {
                                    if (inherited == moving) continue;
                                    const int ups_floor = d + moving.size() - 1;
                                    for (int u = ups_floor; u <= ups_rem; ++u) {
                                        tuple.push_back(ComponentProfile{
                                            d, u - ups_floor, fixed_share, moving, inherited,
                                            share});
                                        std::vector<int> next_mult = mult_rem;
                                        for (std::size_t i = 0; i < share.size(); ++i)
                                            next_mult[i] -= share[i];
                                        rec(deg_rem - d, ups_rem - u, fixed_rem - fixed_share,
                                            moving_rem - inherited, next_mult);
                                        tuple.pop_back();
                                    }
                                }
                            }
                            return;
                        }
                        for (int v = 0; v <= mult_rem[idx]; ++v) {
                            share[idx] = v;
                            shares(idx + 1, sum + v);
                        }
                        share[idx] = 0;
                    };
                    shares(0, 0);
                }
            }
        };

    rec(residual_degree, ups_budget, parent.fixed, parent.moving, parent.mults.entries());
    return total;
}

}  // namespace oracles
