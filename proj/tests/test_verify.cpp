#include <gtest/gtest.h>

#include <aztec/serialize.hpp>
#include <aztec/verify.hpp>

using namespace aztec;

namespace {

bool zero(const KernelReport& r) {
    for (const Rat& x : r.residual)
        if (x != 0) return false;
    return r.pass;
}

}  // namespace

TEST(Step1, Examples) {
    KernelReport r = check_step1(2, 0, 0);
    EXPECT_TRUE(zero(r));
    EXPECT_EQ(r.residual.size(), 2u);
    EXPECT_TRUE(zero(check_step1(4, 1, 0)));
    EXPECT_TRUE(zero(check_step1(3, 1, 1)));
    EXPECT_THROW(check_step1(3, 1, 0), UsageError);
    EXPECT_THROW(check_step1(2, 1, 0), UsageError);
}

TEST(Step2, Examples) {
    EXPECT_TRUE(zero(check_step2(1, 0, 0)));
    EXPECT_TRUE(zero(check_step2(3, 1, 0)));
    EXPECT_TRUE(zero(check_step2(2, 1, 1)));
    EXPECT_THROW(check_step2(2, 0, 0), UsageError);
}

TEST(Step3, Examples) {
    // row0 - 5 row1 of [[5,-25],[1,-5]]
    Matrix m = d_submatrix(2, -1, Case::one);
    EXPECT_EQ(m.row(0)[0] - 5 * m.row(1)[0], 0);
    EXPECT_TRUE(zero(check_step3(2, 0, 0)));
    EXPECT_TRUE(zero(check_step3(4, 1, 0)));
    EXPECT_TRUE(zero(check_step3(4, 2, 1)));
    EXPECT_THROW(check_step3(2, 1, 0), UsageError);
}

TEST(Step3, AlternatingSignIsNeeded) {
    // the same combination without the (-1)^{i-a} sign leaves a nonzero residual
    Matrix m = d_submatrix(4, -2, Case::one);
    std::vector<Rat> res(4, 0);
    for (long i = 0; i <= 2; ++i)
        for (long c = 0; c < 4; ++c) res[c] += binomial(2, i) * m(i, c);
    for (long i = 2; i <= 3; ++i)
        for (long c = 0; c < 4; ++c) res[c] -= Rat(pow2(4)) * binomial(i - 1, 1) * m(i, c);
    bool all_zero = true;
    for (const Rat& x : res) all_zero = all_zero && x == 0;
    EXPECT_FALSE(all_zero);
    EXPECT_TRUE(zero(check_step3(4, 1, 0)));
}

TEST(Step4, Examples) {
    EXPECT_TRUE(zero(check_step4(3, 1, 0, Step4::odd)));
    EXPECT_TRUE(zero(check_step4(5, 1, 0, Step4::even)));
    EXPECT_TRUE(zero(check_step4(7, 2, 1, Step4::odd)));
    EXPECT_THROW(check_step4(4, 1, 0, Step4::even), UsageError);
    EXPECT_THROW(check_step4(3, 1, 1, Step4::odd), UsageError);
    KernelReport r = check_step4(5, 1, 0, Step4::even);
    EXPECT_EQ(r.params.back(), (std::pair<std::string, std::string>{"variant", "even"}));
}

TEST(DoubleSums, Examples) {
    EXPECT_EQ(check_id1(3, 1), 0);
    EXPECT_EQ(check_id1(8, 2), 0);
    EXPECT_EQ(check_id2(5, 1), 0);
    for (long s = 1; s <= 3; ++s) {
        for (long k = 4 * s - 1; k <= 4 * s + 6; ++k) EXPECT_EQ(check_id1(k, s), 0) << k << " " << s;
        for (long k = 4 * s + 1; k <= 4 * s + 6; ++k) EXPECT_EQ(check_id2(k, s), 0) << k << " " << s;
    }
    EXPECT_THROW(check_id1(2, 1), UsageError);
    EXPECT_THROW(check_id2(4, 1), UsageError);
}

TEST(Gamma6, NonzeroWithOddFactor) {
    EXPECT_TRUE(check_gamma6(3, 1));
    EXPECT_TRUE(check_gamma6(10, 2));
    for (long s = 1; s <= 4; ++s)
        for (long k = 4 * s - 1; k <= 20; ++k) {
            EXPECT_NE(gamma6(k, s), 0);
            EXPECT_TRUE(mpz_odd_p(gamma6_factor(k, s).get_mpz_t()));
        }
    EXPECT_THROW(check_gamma6(2, 1), UsageError);
}

TEST(DetProp, Instances) {
    EXPECT_TRUE(check_detprop(0, 3));
    for (long n = -3; n <= 6; ++n) EXPECT_TRUE(check_detprop(1, n));
    EXPECT_TRUE(check_detprop(2, 3));
    for (long k = 0; k <= 6; ++k)
        for (long n = -3; n <= 6; ++n) EXPECT_TRUE(check_detprop(k, n)) << k << " " << n;
}

TEST(DetProp, NeedsPolynomialH) {
    // with the combinatorial H (zero below j = -1) the identity breaks at negative n
    auto combinatorial = [](long k, long n) {
        Matrix m(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) m(i, j) = Rat(delannoy_H(k - 2 * i + j, n - j - 1));
        return determinant(m);
    };
    bool differs = false;
    for (long n = -3; n <= -1; ++n)
        differs = differs || combinatorial(2, n) != determinant(d_submatrix(2, Rat(n) + rat(1, 2), Case::one));
    EXPECT_TRUE(differs);
}

TEST(Main, Instances) {
    EXPECT_TRUE(check_main(1, rat(7, 2)));
    EXPECT_TRUE(check_main(2, 2));
    EXPECT_TRUE(check_main(0, rat(-5, 3)));
    EXPECT_THROW(check_main(-1, 2), UsageError);
    EXPECT_THROW(check_detprop(-1, 2), UsageError);
}

TEST(Degree, LeadingCoefficients) {
    EXPECT_EQ(expected_leading(1), 2);
    EXPECT_EQ(expected_leading(2), rat(8, 3));
    EXPECT_EQ(expected_leading(3), ratio(Int(512), Int(1 * 6 * 60)));
    auto p1 = det_polynomial(1);
    EXPECT_EQ(p1, (std::vector<Rat>{-1, 2, 0}));
    for (long k = 1; k <= 4; ++k) EXPECT_TRUE(check_degree_and_leading(k)) << k;
    EXPECT_THROW(check_degree_and_leading(0), UsageError);
}

TEST(Interpolation, RecoversPolynomial) {
    std::vector<Rat> xs{0, 1, 2, 3}, ys;
    for (const Rat& x : xs) ys.push_back(rat(1, 2) * x * x * x - 3 * x + 7);
    EXPECT_EQ(lagrange_coefficients(xs, ys), (std::vector<Rat>{7, -3, 0, rat(1, 2)}));
    EXPECT_THROW(lagrange_coefficients({1, 1}, {0, 0}), IdentityViolation);
}

TEST(Suites, EachPasses) {
    for (const std::string& name : suite_names()) {
        auto reports = run_suite(name);
        EXPECT_FALSE(reports.empty()) << name;
        EXPECT_TRUE(all_pass(reports)) << name;
    }
}

TEST(Suites, KmaxAndErrors) {
    EXPECT_TRUE(all_pass(run_suite("detprop", 4)));
    EXPECT_EQ(run_suite("detprop", 4).size(), 50u);
    EXPECT_EQ(run_suite("degree", 2).size(), 2u);
    EXPECT_THROW(run_suite("nope"), UsageError);
    EXPECT_THROW(run_suite("main", -1), UsageError);
}

TEST(Suites, ReportJson) {
    CheckReport ok{"detprop", {{"k", "2"}, {"n", "-1"}}, true, {}};
    json j = to_json(ok);
    EXPECT_EQ(j.dump(), R"({"suite":"detprop","params":{"k":2,"n":-1},"pass":true})");
    CheckReport bad{"main", {{"k", "1"}, {"n", "7/2"}}, false, {rat(1, 3)}};
    EXPECT_EQ(to_json(bad).dump(), R"({"suite":"main","params":{"k":1,"n":"7/2"},"pass":false,"residual":["1/3"]})");
}
