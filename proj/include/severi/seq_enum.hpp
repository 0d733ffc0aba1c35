#pragma once

#include <functional>
#include <vector>

#include "severi/tangency_seq.hpp"

namespace severi {

/// All b with b <= a componentwise, in lexicographic order of the entry
/// vectors. Yields exactly prod_k (a_k + 1) sequences.
inline std::vector<TangencySeq> subsequences_of(const TangencySeq& a) {
    std::vector<TangencySeq> out;
    std::vector<int> cur(a.entries().size(), 0);
    while (true) {
        out.emplace_back(std::vector<int>(cur));
        // odometer: last coordinate least significant => lex ascending
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == a.entries()[static_cast<std::size_t>(i)]) {
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

namespace detail {

// Assigns entries order by order, ascending, so sequences come out in
// lexicographic order of their entry vectors. A sequence is emitted at the
// first order its remaining budget cannot fill.
inline void seqs_with_weight_rec(int order, int budget, bool exact, std::vector<int>& cur,
                                 const std::function<void(const std::vector<int>&)>& emit) {
    if (budget < order) {
        if (!exact || budget == 0) emit(cur);
        return;
    }
    const std::size_t base = cur.size();
    for (int count = 0; count * order <= budget; ++count) {
        if (count > 0) {
            cur.resize(static_cast<std::size_t>(order), 0);
            cur[static_cast<std::size_t>(order - 1)] = count;
        }
        seqs_with_weight_rec(order + 1, budget - count * order, exact, cur, emit);
        cur.resize(base);
    }
}

}  // namespace detail

/// All sequences with I b == w, in lexicographic order of entry vectors.
/// There are p(w) of them (one per partition of w).
inline std::vector<TangencySeq> seqs_with_weight(int w) {
    std::vector<TangencySeq> out;
    if (w < 0) return out;
    std::vector<int> cur;
    detail::seqs_with_weight_rec(1, w, /*exact=*/true, cur,
                                 [&](const std::vector<int>& v) { out.emplace_back(std::vector<int>(v)); });
    return out;
}

/// All sequences with I b <= w, in lexicographic order of entry vectors.
/// The count is sum_{m <= w} p(m).
inline std::vector<TangencySeq> seqs_with_weight_at_most(int w) {
    std::vector<TangencySeq> out;
    if (w < 0) return out;
    std::vector<int> cur;
    detail::seqs_with_weight_rec(1, w, /*exact=*/false, cur,
                                 [&](const std::vector<int>& v) { out.emplace_back(std::vector<int>(v)); });
    return out;
}

/// All ordered `parts`-tuples of sequences summing to a, in lexicographic
/// order. Tuple count is prod_k C(a_k + parts - 1, parts - 1); for parts = 0
/// the empty tuple is yielded iff a = 0.
inline std::vector<std::vector<TangencySeq>> compositions_into(const TangencySeq& a, int parts) {
    std::vector<std::vector<TangencySeq>> out;
    if (parts < 0) return out;
    std::vector<TangencySeq> cur;
    std::function<void(const TangencySeq&, int)> rec = [&](const TangencySeq& rem, int left) {
        if (left == 0) {
            if (rem.is_zero()) out.push_back(cur);
            return;
        }
        if (left == 1) {
            cur.push_back(rem);
            rec(TangencySeq{}, 0);
            cur.pop_back();
            return;
        }
        for (const TangencySeq& piece : subsequences_of(rem)) {
            cur.push_back(piece);
            rec(rem - piece, left - 1);
            cur.pop_back();
        }
    };
    rec(a, parts);
    return out;
}

}  // namespace severi
