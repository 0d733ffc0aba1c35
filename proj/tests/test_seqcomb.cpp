#include <catch2/catch_amalgamated.hpp>

#include <severi/arith.hpp>
#include <severi/seq_enum.hpp>
#include <severi/tangency_seq.hpp>

#include <random>
#include <set>

using namespace severi;

TEST_CASE("size, weight, weight product") {
    CHECK(TangencySeq{}.size() == 0);
    CHECK(TangencySeq{2, 0, 1}.size() == 3);
    CHECK(TangencySeq{0, 0, 5}.size() == 5);

    CHECK(TangencySeq{}.weight() == 0);
    CHECK(TangencySeq{2, 0, 1}.weight() == 5);
    CHECK(TangencySeq{0, 3}.weight() == 6);

    CHECK(TangencySeq{}.weight_product() == 1);
    CHECK(TangencySeq{2, 0, 1}.weight_product() == 3);
    CHECK(TangencySeq{0, 2, 1}.weight_product() == 12);
}

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(TangencySeq::parse("2,0,1,0,0") == TangencySeq::parse("2,0,1"));
    CHECK(TangencySeq::parse("") == TangencySeq{});
    CHECK(TangencySeq::parse("0,0") == TangencySeq{});
    CHECK(TangencySeq{2, 0, 1}.str() == "2,0,1");
    CHECK(TangencySeq{}.str() == "");
    CHECK_THROWS_AS(TangencySeq::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(TangencySeq::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(TangencySeq::parse("1,,2"), std::invalid_argument);
}

TEST_CASE("sequence binomial") {
    CHECK(seq_binomial(TangencySeq{2, 1}, TangencySeq{1, 1}) == 2);
    CHECK(seq_binomial(TangencySeq{3}, TangencySeq{4}) == 0);
    CHECK(seq_binomial(TangencySeq{4, 2}, TangencySeq{2, 1}) == 12);
    CHECK(seq_binomial(TangencySeq{}, TangencySeq{}) == 1);
}

TEST_CASE("sequence multinomial") {
    CHECK(seq_multinomial(TangencySeq{2}, {TangencySeq{1}, TangencySeq{1}}) == 2);
    CHECK(seq_multinomial(TangencySeq{6}, {TangencySeq{1}, TangencySeq{5}}) == 6);
    CHECK(seq_multinomial(TangencySeq{}, std::vector<TangencySeq>{}) == 1);
    // part-sum mismatch is a caller bug, not a zero
    CHECK_THROWS_AS(seq_multinomial(TangencySeq{2}, {TangencySeq{1}}), std::logic_error);
}

TEST_CASE("scalar multinomial is zero on part-sum mismatch") {
    CHECK(multinomial(5, {2, 3}) == 10);
    CHECK(multinomial(4, {2, 3}) == 0);
    CHECK(multinomial(0, std::vector<int>{}) == 1);
    CHECK(multinomial(3, std::vector<int>{}) == 0);
    CHECK(multinomial(6, {2, 2, 2}) == 90);
}

TEST_CASE("subsequence enumeration") {
    auto subs = subsequences_of(TangencySeq{1, 1});
    REQUIRE(subs.size() == 4);
    CHECK(subs[0] == TangencySeq{});
    CHECK(subs[1] == TangencySeq{0, 1});
    CHECK(subs[2] == TangencySeq{1});
    CHECK(subs[3] == TangencySeq{1, 1});

    CHECK(subsequences_of(TangencySeq{}).size() == 1);
    CHECK(subsequences_of(TangencySeq{2}).size() == 3);
}

TEST_CASE("weight-bounded enumeration") {
    auto w0 = seqs_with_weight_at_most(0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0] == TangencySeq{});

    auto w2 = seqs_with_weight_at_most(2);
    CHECK(w2.size() == 4);  // partitions of 0, 1, 2

    auto w3 = seqs_with_weight_at_most(3);
    CHECK(w3.size() == 7);

    auto exact3 = seqs_with_weight(3);
    REQUIRE(exact3.size() == 3);
    for (const auto& b : exact3) CHECK(b.weight() == 3);

    // each sequence exactly once
    std::set<TangencySeq> seen(w3.begin(), w3.end());
    CHECK(seen.size() == w3.size());
}

TEST_CASE("composition enumeration") {
    auto t = compositions_into(TangencySeq{1, 1}, 2);
    CHECK(t.size() == 4);
    for (const auto& parts : t) {
        TangencySeq sum;
        for (const auto& p : parts) sum = sum + p;
        CHECK(sum == TangencySeq{1, 1});
    }

    auto single = compositions_into(TangencySeq{2}, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0][0] == TangencySeq{2});

    CHECK(compositions_into(TangencySeq{1}, 0).empty());
    CHECK(compositions_into(TangencySeq{}, 0).size() == 1);
}

TEST_CASE("additivity and composition-count properties") {
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> entry(0, 3);
    std::uniform_int_distribution<int> len(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> ea(static_cast<std::size_t>(len(rng)));
        std::vector<int> eb(static_cast<std::size_t>(len(rng)));
        for (int& e : ea) e = entry(rng);
        for (int& e : eb) e = entry(rng);
        TangencySeq a{ea}, b{eb};
        TangencySeq sum = a + b;
        CHECK(sum.weight() == a.weight() + b.weight());
        CHECK(sum.size() == a.size() + b.size());
        CHECK(sum.weight_product() == a.weight_product() * b.weight_product());
        CHECK(componentwise_leq(a, sum));
        CHECK(sum - b == a);

        // multinomial with explicit remainder agrees with a binomial
        for (const TangencySeq& c : subsequences_of(a)) {
            CHECK(seq_multinomial(a, {c, a - c}) == seq_binomial(a, c));
        }
    }

    std::uniform_int_distribution<int> parts_dist(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> ea(static_cast<std::size_t>(len(rng)));
        for (int& e : ea) e = entry(rng);
        TangencySeq a{ea};
        int parts = parts_dist(rng);
        auto tuples = compositions_into(a, parts);
        Count expected = 1;
        for (int k = 1; k <= a.max_order(); ++k)
            expected *= binomial(a.at(k) + parts - 1, parts - 1);
        if (parts == 0) expected = a.is_zero() ? 1 : 0;
        CHECK(Count(tuples.size()) == expected);
        for (const auto& tuple : tuples) {
            TangencySeq sum;
            for (const auto& p : tuple) sum = sum + p;
            CHECK(sum == a);
        }
    }
}

TEST_CASE("weight enumeration counts partitions") {
    // p(0..8) = 1 1 2 3 5 7 11 15 22
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    std::size_t cumulative = 0;
    for (int w = 0; w <= 8; ++w) {
        CHECK(seqs_with_weight(w).size() == static_cast<std::size_t>(p[w]));
        cumulative += static_cast<std::size_t>(p[w]);
        CHECK(seqs_with_weight_at_most(w).size() == cumulative);
    }
}
