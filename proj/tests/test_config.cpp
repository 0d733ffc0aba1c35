#include <catch2/catch_amalgamated.hpp>

#include <severi/config.hpp>

#include <random>

using namespace severi;

TEST_CASE("upsilon") {
    CHECK(upsilon({1, 0, {}, {}, {}}) == 0);
    CHECK(upsilon({5, 1, {}, TangencySeq::multiple(1, 10), {}}) == 15);
    CHECK(upsilon({2, -1, {}, {}, {}}) == 0);
}

TEST_CASE("balance") {
    CHECK(is_balanced({3, 0, {}, {6}, {}}));
    CHECK_FALSE(is_balanced({3, 0, {1}, {6}, {}}));
    CHECK(is_balanced({6, 0, {}, {}, {2, 2, 2, 2, 2, 2}}));
}

TEST_CASE("normalization folds zeros and ones") {
    CurveConfig c{4, 0, {}, {2}, {2, 1, 2, 0}};
    CurveConfig n = normalized(c);
    CHECK(n.fixed == TangencySeq{1});
    CHECK(n.moving == TangencySeq{2});
    CHECK(n.mults.entries() == std::vector<int>{2, 2});

    CurveConfig already{3, 0, {6}, {}, {}};
    CHECK(normalized(already) == already);

    CurveConfig ones{1, 0, {}, {}, {1, 1}};
    CurveConfig nones = normalized(ones);
    CHECK(nones.fixed == TangencySeq{2});
    CHECK(nones.mults.empty());
}

TEST_CASE("normalization preserves the numerics and is idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(1, 6), gen(-2, 3), entry(0, 3), len(0, 3), mult(0, 4),
        pts(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> ea(static_cast<std::size_t>(len(rng)));
        std::vector<int> eb(static_cast<std::size_t>(len(rng)));
        std::vector<int> ms(static_cast<std::size_t>(pts(rng)));
        for (int& e : ea) e = entry(rng);
        for (int& e : eb) e = entry(rng);
        for (int& m : ms) m = mult(rng);
        CurveConfig c{deg(rng), gen(rng), TangencySeq{ea}, TangencySeq{eb},
                      MultiplicityProfile{ms}};
        CurveConfig n = normalized(c);
        CHECK(normalized(n) == n);
        CHECK(upsilon(n) == upsilon(c));
        CHECK(is_balanced(n) == is_balanced(c));
        CHECK(is_canonical(n));
    }
}

TEST_CASE("config text form") {
    CurveConfig c{3, 0, {}, {6}, {}};
    CHECK(format_config(c) == "d=3 g=0 alpha= beta=6 s=");
    CHECK(parse_config("d=3 g=0 beta=6") == c);
    CHECK(parse_config("d=3 g=0 alpha= beta=6 s=") == c);
    CHECK(parse_config(format_config(c)) == c);

    CurveConfig full{5, 2, {1, 1}, {3}, {2, 2}};
    CHECK(parse_config(format_config(full)) == full);

    CHECK_THROWS_AS(parse_config("g=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("d=3 bogus=1"), std::invalid_argument);
}

TEST_CASE("multiplicity profile rejects negatives") {
    CHECK_THROWS_AS(MultiplicityProfile{{2, -1}}, std::invalid_argument);
    CHECK(MultiplicityProfile{{2, 3}}.sum() == 5);
    CHECK(MultiplicityProfile{}.empty());
}
