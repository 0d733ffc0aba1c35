#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "severi/config.hpp"
#include "severi/errors.hpp"
#include "severi/irr_engine.hpp"
#include "severi/memo_store.hpp"
#include "severi/seq_enum.hpp"

namespace severi {

namespace detail {

inline Count multigraph_count_rec(std::vector<int> degrees,
                                  std::map<std::vector<int>, Count>& memo) {
    // degrees: sorted non-increasing, all positive
    if (degrees.empty()) return 1;
    if (auto it = memo.find(degrees); it != memo.end()) return it->second;

    const int target = degrees.front();
    const std::vector<int> rest(degrees.begin() + 1, degrees.end());
    Count total = 0;

    // distribute the first vertex's edges over the others, capped by their
    // remaining valences
    std::vector<int> share(rest.size(), 0);
    std::function<void(std::size_t, int)> distribute = [&](std::size_t idx, int remaining) {
        if (remaining == 0) {
            std::vector<int> reduced;
            reduced.reserve(rest.size());
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (rest[i] - share[i] > 0) reduced.push_back(rest[i] - share[i]);
            std::sort(reduced.begin(), reduced.end(), std::greater<int>());
            total += multigraph_count_rec(std::move(reduced), memo);
            return;
        }
        if (idx == rest.size()) return;
        int capacity_left = 0;
        for (std::size_t i = idx; i < rest.size(); ++i) capacity_left += rest[i];
        if (capacity_left < remaining) return;
        for (int v = std::min(rest[idx], remaining); v >= 0; --v) {
            share[idx] = v;
            distribute(idx + 1, remaining - v);
        }
        share[idx] = 0;
    };
    distribute(0, target);

    memo.emplace(std::move(degrees), total);
    return total;
}

}  // namespace detail

/// Number of multigraphs on labeled vertices realizing the given valences:
/// multisets of edges, loops forbidden, parallel edges allowed. Zero when
/// the valence sum is odd; one for the empty sequence. This is the seed
/// value of the reducible recursion (each graph is a way to lay out lines
/// through the fixed points of the conic).
inline Count count_loopless_multigraphs(const std::vector<int>& degrees) {
    long long sum = 0;
    std::vector<int> positive;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("count_loopless_multigraphs: negative valence");
        if (d > 0) positive.push_back(d);
        sum += d;
    }
    if (sum % 2 != 0) return 0;
    std::sort(positive.begin(), positive.end(), std::greater<int>());
    std::map<std::vector<int>, Count> memo;
    return detail::multigraph_count_rec(std::move(positive), memo);
}

namespace detail {

inline Count red_count_canonical(const CurveConfig& canon, MemoStore& memo,
                                 const CountOptions& opts, const std::optional<Measure>& caller);

// Recursion body for upsilon >= 0; callers have handled d = 0, balance, and
// negative upsilon.
inline Count red_evaluate(const CurveConfig& c, MemoStore& memo, const CountOptions& opts) {
    if (upsilon(c) == 0) {
        // zero-dimensional families are unions of lines: order-1 fixed
        // contacts and multiple points become graph vertices, each order-2
        // fixed contact is the uniquely determined tangent line (factor 1),
        // and nothing else survives
        CurveConfig n = normalized(c);
        if (!n.moving.is_zero()) return 0;
        if (n.fixed.max_order() > 2) return 0;
        std::vector<int> valences = n.mults.entries();
        valences.insert(valences.end(), static_cast<std::size_t>(n.fixed.at(1)), 1);
        return count_loopless_multigraphs(valences);
    }

    const Measure measure = recursion_measure(c);
    Count total = 0;
    // a moving contact of order k specializes to the fixed point
    for (int k = 1; k <= c.moving.max_order(); ++k) {
        if (c.moving.at(k) == 0) continue;
        CurveConfig child{c.degree, c.genus, c.fixed.plus_unit(k), c.moving.minus_unit(k), c.mults};
        total += k * red_count_canonical(normalized(child), memo, opts, measure);
    }

    // the conic splits off: the residual curve has degree d - 2, keeps a
    // subset of the fixed contacts, gains extra moving contacts delta where
    // it met the conic, and each multiple point drops by at most one
    const int residual_degree = c.degree - 2;
    if (residual_degree >= 0) {
        const int budget = 2 * residual_degree;
        const std::vector<int>& mults = c.mults.entries();
        for (const TangencySeq& fixed_share : subsequences_of(c.fixed)) {
            if (fixed_share.weight() > budget) continue;
            std::vector<int> share(mults.size(), 0);
            std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int share_sum) {
                if (fixed_share.weight() + share_sum > budget) return;
                if (idx == mults.size()) {
                    const int extra_weight =
                        budget - fixed_share.weight() - share_sum - c.moving.weight();
                    if (extra_weight < 0) return;
                    const Count fixed_choices = seq_binomial(c.fixed, fixed_share);
                    for (const TangencySeq& delta : seqs_with_weight(extra_weight)) {
                        TangencySeq moving = c.moving + delta;
                        CurveConfig child{residual_degree, c.genus - delta.size() + 1,
                                          fixed_share, moving, MultiplicityProfile(share)};
                        Count coeff = delta.weight_product() * fixed_choices *
                                      seq_binomial(moving, c.moving);
                        total += coeff * red_count_canonical(normalized(child), memo, opts, measure);
                    }
                    return;
                }
                share[idx] = mults[idx];
                choose(idx + 1, share_sum + mults[idx]);
                if (mults[idx] >= 1) {
                    share[idx] = mults[idx] - 1;
                    choose(idx + 1, share_sum + mults[idx] - 1);
                }
                share[idx] = 0;
            };
            choose(0, 0);
        }
    }
    return total;
}

inline Count red_count_canonical(const CurveConfig& canon, MemoStore& memo,
                                 const CountOptions& opts, const std::optional<Measure>& caller) {
    if (caller && !(recursion_measure(canon) < *caller))
        throw InvariantError("reducible count: recursion measure did not decrease at " +
                             format_config(canon));
    if (canon.degree == 0) {
        // empty-curve convention: exactly one map from nothing
        return (canon.genus == 1 && canon.fixed.is_zero() && canon.moving.is_zero() &&
                canon.mults.empty())
                   ? 1
                   : 0;
    }
    if (!is_balanced(canon)) return 0;
    if (upsilon(canon) < 0) return 0;
    if (opts.prune_genus_bound &&
        canon.genus > (canon.degree - 1) * (canon.degree - 2) / 2)
        return 0;
    const MemoKey key{Engine::reducible, canon};
    if (auto hit = memo.lookup(key)) return *hit;
    Count value = red_evaluate(canon, memo, opts);
    memo.insert(key, value);
    return value;
}

}  // namespace detail

/// Number of possibly-disconnected degree-d arithmetic-genus-g curve maps
/// with the prescribed conic contacts, through upsilon(c) general points.
/// The genus may be negative. Degree 0 is the empty curve, which counts 1
/// exactly when everything else is empty and g = 1.
inline Count count_reducible(const CurveConfig& c, MemoStore& memo, const CountOptions& opts = {}) {
    if (c.degree < 0) throw std::invalid_argument("count_reducible: degree must be >= 0");
    if (!opts.normalize_input) {
        CurveConfig n = normalized(c);
        if (c.degree == 0)
            return (n.genus == 1 && n.fixed.is_zero() && n.moving.is_zero() && n.mults.empty())
                       ? 1
                       : 0;
        if (!is_balanced(c)) return 0;
        if (upsilon(c) < 0) return 0;
        if (opts.prune_genus_bound && c.genus > (c.degree - 1) * (c.degree - 2) / 2) return 0;
        return detail::red_evaluate(c, memo, opts);
    }
    return detail::red_count_canonical(normalized(c), memo, opts, std::nullopt);
}

}  // namespace severi
