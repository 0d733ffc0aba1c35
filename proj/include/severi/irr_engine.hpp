#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "severi/config.hpp"
#include "severi/errors.hpp"
#include "severi/memo_store.hpp"
#include "severi/seq_enum.hpp"

namespace severi {

struct CountOptions {
    /// Optional early cutoff g <= (d-1)(d-2)/2. The recursion self-truncates
    /// without it; the flag exists so the pruned and unpruned paths can be
    /// compared, and it must never change a result.
    bool prune_genus_bound = false;

    /// When false, the top-level call evaluates the configuration exactly as
    /// given (labeled multiplicities, zeros and ones intact) instead of its
    /// canonical form, and is not memoized. Recursive children are always
    /// canonicalized. Used to check that normalization is transparent.
    bool normalize_input = true;
};

/// One residual component in a degeneration where the conic splits off the
/// counted curve. The component keeps `inherited` of the parent's moving
/// contacts and meets the conic at the remaining `moving - inherited` points
/// (there is at least one, which is what keeps the glued curve connected).
/// `mults` is the component's share of the parent's multiple points, labeled
/// by point so symmetry detection can compare like with like.
struct ComponentProfile {
    int degree = 0;
    int genus = 0;
    TangencySeq fixed;
    TangencySeq moving;
    TangencySeq inherited;
    std::vector<int> mults;

    int upsilon() const { return degree + moving.size() + genus - 1; }

    CurveConfig config() const {
        return CurveConfig{degree, genus, fixed, moving, MultiplicityProfile(mults)};
    }

    friend auto operator<=>(const ComponentProfile&, const ComponentProfile&) = default;
};

/// One term of the split-off sum: an unordered multiset of component
/// profiles with the order of its symmetry group and the full scalar weight
/// (1/symmetry times both multinomial distribution factors).
struct TypeIITerm {
    std::vector<ComponentProfile> components;  // sorted non-decreasing
    Count symmetry = 1;
    Rational coefficient;
};

/// Order of the permutation group of the multiset: the product over distinct
/// profiles of (multiplicity)!. Profiles compare on all six fields, with the
/// multiplicity shares compared as labeled vectors.
inline Count symmetry_factor(std::span<const ComponentProfile> components) {
    std::vector<ComponentProfile> sorted(components.begin(), components.end());
    std::sort(sorted.begin(), sorted.end());
    Count sigma = 1;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        sigma *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return sigma;
}

namespace detail {

inline std::vector<int> vec_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

// All labeled vectors 0 <= v <= cap with sum(v) <= max_sum, lexicographic.
inline void for_each_labeled_share(const std::vector<int>& cap, int max_sum,
                                   std::vector<int>& cur, std::size_t idx, int sum,
                                   const std::function<void(const std::vector<int>&)>& emit) {
    if (idx == cap.size()) {
        emit(cur);
        return;
    }
    for (int v = 0; v <= cap[idx] && sum + v <= max_sum; ++v) {
        cur[idx] = v;
        for_each_labeled_share(cap, max_sum, cur, idx + 1, sum + v, emit);
    }
    cur[idx] = 0;
}

}  // namespace detail

/// Enumerates every admissible multiset of component profiles for the
/// degeneration where the conic splits off: total residual degree d - 2,
/// inherited contacts covering the parent's moving contacts exactly, each
/// point's multiplicity distributed up to a deficit of at most one (the
/// conic itself absorbs one), per-component intersection balance, and point
/// conditions summing to upsilon - 1. Each multiset is visited once, as its
/// non-decreasing arrangement, in a fixed deterministic order.
///
/// Requires upsilon(parent) > 0 and is_balanced(parent).
inline void for_each_type2_multiset(
    const CurveConfig& parent,
    const std::function<void(std::span<const ComponentProfile>)>& visit) {
    const int residual_degree = parent.degree - 2;
    if (residual_degree < 0) return;
    const int ups_budget = upsilon(parent) - 1;
    if (ups_budget < 0) return;

    std::vector<ComponentProfile> chain;

    std::function<void(int, int, const TangencySeq&, const TangencySeq&, const std::vector<int>&)>
        rec = [&](int deg_rem, int ups_rem, const TangencySeq& fixed_rem,
                  const TangencySeq& moving_rem, const std::vector<int>& mult_rem) {
            if (deg_rem == 0) {
                if (ups_rem != 0 || !moving_rem.is_zero()) return;
                for (int m : mult_rem)
                    if (m > 1) return;  // each point may leave at most one unit to the conic
                visit(chain);
                return;
            }
            // every remaining component needs at least one new conic contact,
            // so its point-condition share is at least its degree
            if (ups_rem < deg_rem) return;
            int mult_deficit = 0;
            for (int m : mult_rem) mult_deficit += std::max(0, m - 1);
            if (moving_rem.weight() + mult_deficit > 2 * deg_rem) return;

            const std::optional<ComponentProfile> prev =
                chain.empty() ? std::nullopt : std::optional<ComponentProfile>(chain.back());
            const std::vector<TangencySeq> fixed_shares = subsequences_of(fixed_rem);

            for (int d = 1; d <= deg_rem; ++d) {
                if (prev && d < prev->degree) continue;  // chain kept non-decreasing
                for (const TangencySeq& fixed_share : fixed_shares) {
                    const int after_fixed = 2 * d - fixed_share.weight();
                    if (after_fixed < 0) continue;
                    std::vector<int> share(mult_rem.size(), 0);
                    detail::for_each_labeled_share(
                        mult_rem, after_fixed, share, 0, 0, [&](const std::vector<int>& mult_share) {
                            int share_sum = 0;
                            for (int m : mult_share) share_sum += m;
                            const int moving_weight = after_fixed - share_sum;
                            for (const TangencySeq& moving : seqs_with_weight(moving_weight)) {
                                if (moving.is_zero()) continue;  // must splice onto the conic
                                const TangencySeq inheritable = componentwise_min(moving, moving_rem);
                                for (const TangencySeq& inherited : subsequences_of(inheritable)) {
                                    if (inherited == moving) continue;
                                    const int ups_floor = d + moving.size() - 1;  // genus 0
                                    for (int u = ups_floor; u <= ups_rem; ++u) {
                                        ComponentProfile cand{d,     u - ups_floor, fixed_share,
                                                              moving, inherited,    mult_share};
                                        if (prev && cand < *prev) continue;
                                        chain.push_back(cand);
                                        rec(deg_rem - d, ups_rem - u, fixed_rem - fixed_share,
                                            moving_rem - inherited,
                                            detail::vec_minus(mult_rem, mult_share));
                                        chain.pop_back();
                                    }
                                }
                            }
                        });
                }
            }
        };

    rec(residual_degree, ups_budget, parent.fixed, parent.moving, parent.mults.entries());
}

/// The scalar weight of one multiset: 1/symmetry, times the distribution of
/// the parent's fixed contacts over the components (with the remainder going
/// to the conic), times the distribution of the remaining upsilon - 1 point
/// conditions over the components.
inline Rational type2_coefficient(const CurveConfig& parent,
                                  std::span<const ComponentProfile> components) {
    std::vector<TangencySeq> fixed_parts;
    std::vector<int> ups_parts;
    fixed_parts.reserve(components.size() + 1);
    ups_parts.reserve(components.size());
    TangencySeq used;
    for (const ComponentProfile& p : components) {
        fixed_parts.push_back(p.fixed);
        used = used + p.fixed;
        ups_parts.push_back(p.upsilon());
    }
    fixed_parts.push_back(parent.fixed - used);
    Count numer = seq_multinomial(parent.fixed, fixed_parts) *
                  multinomial(upsilon(parent) - 1, ups_parts);
    return Rational(numer, symmetry_factor(components));
}

/// Materialized term list; mainly for inspection and tests. Empty unless
/// upsilon(c) > 0 and the configuration is balanced.
inline std::vector<TypeIITerm> type2_terms(const CurveConfig& c) {
    std::vector<TypeIITerm> out;
    if (upsilon(c) <= 0 || !is_balanced(c)) return out;
    for_each_type2_multiset(c, [&](std::span<const ComponentProfile> comps) {
        TypeIITerm term;
        term.components.assign(comps.begin(), comps.end());
        term.symmetry = symmetry_factor(comps);
        term.coefficient = type2_coefficient(c, comps);
        out.push_back(std::move(term));
    });
    return out;
}

namespace detail {

using Measure = std::pair<int, int>;

inline Count irr_count_canonical(const CurveConfig& canon, MemoStore& memo,
                                 const CountOptions& opts, const std::optional<Measure>& caller);

inline Rational irr_type2_sum(const CurveConfig& c, MemoStore& memo, const CountOptions& opts,
                              const Measure& measure) {
    Rational acc(0);
    for_each_type2_multiset(c, [&](std::span<const ComponentProfile> comps) {
        Count prod = 1;
        for (const ComponentProfile& p : comps) {
            prod *= seq_binomial(p.moving, p.inherited);
            prod *= (p.moving - p.inherited).weight_product();
            prod *= irr_count_canonical(normalized(p.config()), memo, opts, measure);
            if (prod == 0) return;
        }
        acc += type2_coefficient(c, comps) * Rational(prod);
    });
    return acc;
}

// Runs the recursion body (or the seed check) on c as given; callers have
// already handled balance, negative upsilon, and negative genus.
inline Count irr_evaluate(const CurveConfig& c, MemoStore& memo, const CountOptions& opts) {
    if (upsilon(c) == 0) {
        // the only zero-dimensional families with a point: a line through two
        // fixed points of the conic, or a line tangent at a fixed point
        CurveConfig n = normalized(c);
        bool seed = n.degree == 1 && n.genus == 0 && n.moving.is_zero() && n.mults.empty() &&
                    (n.fixed == TangencySeq{2} || n.fixed == TangencySeq{0, 1});
        return seed ? 1 : 0;
    }

    const Measure measure = recursion_measure(c);
    Count total = 0;
    // a moving contact of order k specializes to the fixed point, with
    // multiplicity k
    for (int k = 1; k <= c.moving.max_order(); ++k) {
        if (c.moving.at(k) == 0) continue;
        CurveConfig child{c.degree, c.genus, c.fixed.plus_unit(k), c.moving.minus_unit(k), c.mults};
        total += k * irr_count_canonical(normalized(child), memo, opts, measure);
    }
    Rational split = irr_type2_sum(c, memo, opts, measure);
    if (denominator(split) != 1)
        throw InvariantError("irreducible count: non-integral split-off sum for " +
                             format_config(c));
    total += numerator(split);
    if (total < 0)
        throw InvariantError("irreducible count: negative total for " + format_config(c));
    return total;
}

inline Count irr_count_canonical(const CurveConfig& canon, MemoStore& memo,
                                 const CountOptions& opts, const std::optional<Measure>& caller) {
    if (caller && !(recursion_measure(canon) < *caller))
        throw InvariantError("irreducible count: recursion measure did not decrease at " +
                             format_config(canon));
    if (canon.genus < 0) return 0;
    if (!is_balanced(canon)) return 0;
    if (upsilon(canon) < 0) return 0;
    if (opts.prune_genus_bound &&
        canon.genus > (canon.degree - 1) * (canon.degree - 2) / 2)
        return 0;
    const MemoKey key{Engine::irreducible, canon};
    if (auto hit = memo.lookup(key)) return *hit;
    Count value = irr_evaluate(canon, memo, opts);
    memo.insert(key, value);
    return value;
}

}  // namespace detail

/// Number of irreducible degree-d geometric-genus-g plane curves with the
/// prescribed conic contacts, through upsilon(c) general points. Zero for
/// negative genus, unbalanced configurations, and negative upsilon.
inline Count count_irreducible(const CurveConfig& c, MemoStore& memo,
                               const CountOptions& opts = {}) {
    if (c.degree <= 0) throw std::invalid_argument("count_irreducible: degree must be >= 1");
    if (c.genus < 0) return 0;
    if (!opts.normalize_input) {
        if (!is_balanced(c)) return 0;
        if (upsilon(c) < 0) return 0;
        if (opts.prune_genus_bound && c.genus > (c.degree - 1) * (c.degree - 2) / 2) return 0;
        return detail::irr_evaluate(c, memo, opts);
    }
    return detail::irr_count_canonical(normalized(c), memo, opts, std::nullopt);
}

/// The split-off part of the count on its own, as the exact rational it is
/// accumulated as. Integral for every valid input; exposed so the multiset
/// route can be compared against an ordered-tuple evaluation.
inline Rational type2_sum_multiset(const CurveConfig& c, MemoStore& memo,
                                   const CountOptions& opts = {}) {
    if (c.degree <= 0) throw std::invalid_argument("type2_sum_multiset: degree must be >= 1");
    if (upsilon(c) <= 0 || !is_balanced(c)) return Rational(0);
    return detail::irr_type2_sum(c, memo, opts, recursion_measure(c));
}

}  // namespace severi
