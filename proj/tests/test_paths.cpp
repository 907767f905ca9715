#include <gtest/gtest.h>

#include <aztec/paths.hpp>

#include <set>

#include "fixtures.hpp"

using namespace aztec;

namespace {

Tableau figure_tableau() { return sequence_to_tableau(fixtures::tableau_figure_chain()); }

std::vector<std::string> words(const PathFamily& f) {
    std::vector<std::string> w;
    for (const auto& p : f.paths) w.push_back(p.steps);
    return w;
}

}  // namespace

TEST(TableauToPaths, FigureFamily) {
    PathFamily f = tableau_to_paths(figure_tableau());
    EXPECT_EQ(words(f), (std::vector<std::string>{"EEDNED", "EDEN", "EEN", "E"}));
    std::vector<Point> ends{{4, 4}, {1, 4}, {-1, 4}, {-3, 4}};
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(f.paths[j].start, (Point{-static_cast<long>(j) - 1, static_cast<long>(j) + 1}));
        EXPECT_EQ(f.paths[j].end(), ends[j]);
    }
    EXPECT_TRUE(validate_family(f));
    EXPECT_EQ(paths_to_tableau(f), figure_tableau());
}

TEST(TableauToPaths, EmptyFamily) {
    Tableau t{Case::one, Partition(), {}};
    PathFamily f = tableau_to_paths(t);
    EXPECT_TRUE(f.paths.empty());
    EXPECT_EQ(paths_to_tableau(f), t);
}

TEST(TableauToPaths, RoundTripOnShapeTwoOne) {
    auto tableaux = enumerate_tableaux(Partition({2, 1}), Case::one);
    ASSERT_EQ(tableaux.size(), 4u);
    for (const auto& t : tableaux) EXPECT_EQ(paths_to_tableau(tableau_to_paths(t)), t);
}

TEST(PathsToTableau, RejectsBadFamilies) {
    PathFamily f = tableau_to_paths(figure_tableau());
    PathFamily misended = f;
    misended.paths[1].steps = "ENDEN";
    EXPECT_THROW(paths_to_tableau(misended), ContractViolation);
    PathFamily crossing{Case::one, Partition({1, 1}), {{{-1, 1}, "NE"}, {{-2, 2}, "E"}}};
    // both paths pass through (-1,2)
    EXPECT_FALSE(validate_family(crossing));
    EXPECT_THROW(paths_to_tableau(crossing), ContractViolation);
    PathFamily final_east{Case::two, Partition({1}), {{{-1, 1}, "NE"}}};
    EXPECT_FALSE(validate_family(final_east));
}

TEST(EnumeratePathFamilies, Examples) {
    auto one = enumerate_path_families(Partition({1}), Case::one);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(words(one[0]), std::vector<std::string>{"E"});
    EXPECT_EQ(enumerate_path_families(Partition({2, 1}), Case::one).size(), 4u);
    EXPECT_EQ(Int(enumerate_path_families(Partition({2, 1}), Case::two).size()),
              determinant(lgv_matrix(Partition({2, 1}), Case::two)));
}

TEST(EnumeratePathFamilies, LgvAgreementAndBijection) {
    for (const auto& mu : fixtures::small_shapes()) {
        for (Case c : {Case::one, Case::two}) {
            auto fams = enumerate_path_families(mu, c);
            EXPECT_EQ(Int(fams.size()), determinant(lgv_matrix(mu, c))) << format_partition(mu);
            std::set<std::vector<std::string>> from_paths, from_tableaux;
            for (const auto& f : fams) {
                EXPECT_TRUE(validate_family(f));
                for (const auto& p : f.paths)
                    if (c == Case::two && !p.steps.empty()) EXPECT_NE(p.steps.back(), 'E');
                EXPECT_EQ(tableau_to_paths(paths_to_tableau(f)), f);
                from_paths.insert(words(f));
            }
            for (const auto& t : enumerate_tableaux(mu, c)) from_tableaux.insert(words(tableau_to_paths(t)));
            EXPECT_EQ(from_paths, from_tableaux);
        }
    }
}

TEST(LgvMatrix, Examples) {
    Matrix one = lgv_matrix(Partition({1}), Case::one);
    EXPECT_EQ(one, (Matrix{{1}}));
    EXPECT_EQ(determinant(lgv_matrix(Partition({2, 1}), Case::one)), 4);
    Matrix none = lgv_matrix(Partition(), Case::one);
    EXPECT_EQ(none.rows(), 0u);
    EXPECT_EQ(determinant(none), 1);
}

TEST(DSubmatrix, Examples) {
    for (int t = -6; t <= 12; ++t) {
        Rat n = rat(t, 2);
        EXPECT_EQ(d_submatrix(1, n, Case::one), (Matrix{{2 * n - 1}}));
        if (t % 2 == 0) EXPECT_EQ(d_submatrix(1, n, Case::two), (Matrix{{2 * n}}));
    }
    EXPECT_EQ(d_submatrix(2, 1, Case::one), (Matrix{{1, -1}, {1, -1}}));
    EXPECT_EQ(determinant(d_submatrix(2, 1, Case::one)), 0);
    EXPECT_EQ(d_submatrix(2, -1, Case::one), (Matrix{{5, -25}, {1, -5}}));
    EXPECT_EQ(d_submatrix(0, 3, Case::two).rows(), 0u);
    EXPECT_THROW(d_submatrix(2, rat(1, 2), Case::two), DomainError);
    EXPECT_THROW(d_submatrix(-1, 1, Case::one), DomainError);
}

TEST(DSubmatrix, FirstIndexingViewEntriesAndDeterminant) {
    for (long k = 0; k <= 5; ++k) {
        for (int t = -4; t <= 10; ++t) {
            Rat n = rat(t, 2);
            Matrix m = d_submatrix(k, n, Case::one);
            Matrix v = first_indexing_view(m);
            for (long i = 1; i <= k; ++i)
                for (long j = 1; j <= k; ++j) EXPECT_EQ(v(i - 1, j - 1), delannoy_D(2 * j - i, n + i - k - 1));
            EXPECT_EQ(determinant(v), determinant(m));
        }
    }
}

TEST(DSubmatrix, BorderedLgvMatrixReducesToBlock) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            Partition mu = fixtures::staircase(k, n);
            EXPECT_EQ(determinant(lgv_matrix(mu, Case::one)), determinant(d_submatrix(k, n, Case::one))) << k << " " << n;
            EXPECT_EQ(determinant(lgv_matrix(mu, Case::two)), determinant(d_submatrix(k, n, Case::two))) << k << " " << n;
        }
}
