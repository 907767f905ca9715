#include <gtest/gtest.h>

#include <aztec/partition.hpp>

#include <functional>

using namespace aztec;

namespace {

// all partitions with at most `len` parts, each at most `top`, padded to `len`
std::vector<Partition> box(int len, int top) {
    std::vector<Partition> out;
    std::vector<int> cur(len, 0);
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, top);
    return out;
}

// one box per column, by direct cell inspection
bool horizontal_by_cells(const Partition& outer, const Partition& inner) {
    if (!inner.contained_in(outer)) return false;
    for (int c = 0; c < outer.first(); ++c) {
        int boxes = 0;
        for (std::size_t r = 0; r < outer.length(); ++r) boxes += c < outer[r] && c >= inner[r];
        if (boxes > 1) return false;
    }
    return true;
}

}  // namespace

TEST(Partition, RejectsNonPartitions) {
    EXPECT_THROW(Partition({1, 2}), DomainError);
    EXPECT_THROW(Partition({2, -1}), DomainError);
}

TEST(Partition, EqualityIgnoresTrailingZeros) {
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_EQ(Partition({2, 1, 0}).length(), 3u);
    EXPECT_NE(Partition({2, 1}), Partition({2, 1, 1}));
    EXPECT_LT(Partition({2, 1}), Partition({2, 2}));
}

TEST(Partition, ParseAndFormat) {
    EXPECT_EQ(parse_partition("3,2,1").parts(), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(parse_partition("1,0").length(), 2u);
    EXPECT_EQ(parse_partition("").length(), 0u);
    EXPECT_EQ(format_partition(Partition({4, 0})), "4,0");
    EXPECT_THROW(parse_partition("1,2"), UsageError);
    EXPECT_THROW(parse_partition("3,,1"), UsageError);
    EXPECT_THROW(parse_partition("a"), UsageError);
    EXPECT_THROW(parse_partition("-1"), UsageError);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(Partition({4, 3, 1, 1})), Partition({4, 2, 2, 1}));
    EXPECT_EQ(conjugate(Partition()), Partition());
    EXPECT_EQ(conjugate(Partition({1, 1, 1})), Partition({3}));
    EXPECT_EQ(conjugate(Partition({1, 1, 1})).length(), 1u);
}

TEST(Conjugate, IsAnInvolution) {
    for (const auto& p : box(6, 6)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Strips, FigureExamples) {
    EXPECT_TRUE(is_horizontal_strip(Partition({5, 3, 3, 2}), Partition({3, 3, 2, 1})));
    EXPECT_FALSE(is_horizontal_strip(Partition({5, 3, 3, 2}), Partition({2, 2, 1, 0})));
    EXPECT_TRUE(is_vertical_strip(Partition({5, 3, 3, 2}), Partition({4, 2, 2, 1})));
    EXPECT_FALSE(is_vertical_strip(Partition({5, 3, 3, 2}), Partition({3, 3, 2, 1})));
    Partition lam({3, 1});
    EXPECT_TRUE(is_horizontal_strip(lam, lam));
    EXPECT_TRUE(is_vertical_strip(lam, lam));
    EXPECT_FALSE(is_horizontal_strip(Partition({2}), Partition({3})));
}

TEST(Strips, VerticalIsConjugateOfHorizontal) {
    auto all = box(4, 4);
    for (const auto& outer : all)
        for (const auto& inner : all)
            EXPECT_EQ(is_vertical_strip(outer, inner), is_horizontal_strip(conjugate(outer), conjugate(inner)));
}

TEST(Strips, HorizontalMatchesCellDefinition) {
    auto all = box(4, 4);
    for (const auto& outer : all)
        for (const auto& inner : all) EXPECT_EQ(is_horizontal_strip(outer, inner), horizontal_by_cells(outer, inner));
}

TEST(Maya, BoundaryFigure) {
    MayaWord w = to_maya(Partition({6, 3, 3, 1}), 16);
    EXPECT_EQ(w.str(), "PPPHPHHPPHHHPHHH");
    EXPECT_EQ(from_maya(w), Partition({6, 3, 3, 1}));
}

TEST(Maya, EmptyPartition) {
    EXPECT_EQ(to_maya(Partition(), 4).str(), "PHHH");
    EXPECT_EQ(from_maya(to_maya(Partition(), 4)), Partition());
}

TEST(Maya, PartsCountHolesBeforeParticles) {
    auto marks = anchored_marks(Partition({3, 2, 2, 1}), 4, 3);
    std::string s;
    for (Mark m : marks) s += static_cast<char>(m);
    EXPECT_EQ(s, "HPHPPHP");
    EXPECT_EQ(decode_marks(marks), Partition({3, 2, 2, 1}));
}

TEST(Maya, RoundTripForEveryLongEnoughWindow) {
    for (const auto& p : box(4, 5)) {
        long need = 2 * std::max<long>(p.nonzero(), p.first()) + 1;
        for (long L = need; L <= need + 3; ++L) EXPECT_EQ(from_maya(to_maya(p, L)), p);
    }
}

TEST(Maya, ShortWindowIsAnEncodingError) {
    EXPECT_THROW(to_maya(Partition({6, 3, 3, 1}), 8), EncodingError);
    EXPECT_THROW(anchored_marks(Partition({3, 1}), 1, 3), EncodingError);
}
