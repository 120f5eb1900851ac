#include <gtest/gtest.h>

#include <cmath>

#include "mixwidth/errors.hpp"
#include "mixwidth/widths.hpp"
#include "oracles.hpp"

using namespace mixwidth;

namespace {

ExponentTuple tuple(const char* p1, const char* p2, const char* q1, const char* q2)
{
    return {Exponent::parse(p1), Exponent::parse(p2), Exponent::parse(q1), Exponent::parse(q2)};
}

Exponent from_double(double p)
{
    if (std::isinf(p))
        return Exponent::infinity();
    for (std::int64_t den = 1; den <= 6; ++den) {
        const double num = p * static_cast<double>(den);
        if (std::abs(num - std::round(num)) < 1e-12)
            return Exponent::from_ratio(static_cast<std::int64_t>(std::round(num)), den);
    }
    throw std::logic_error("grid value is not a small rational");
}

struct Anchor {
    const char* p1;
    const char* p2;
    const char* q1;
    const char* q2;
    Verdict verdict;
    RegimeCase label;
};

}  // namespace

TEST(Classify, Anchors)
{
    const std::vector<Anchor> anchors{
        {"inf", "inf", "2", "2", Verdict::Rigid, RegimeCase::A},
        {"1", "1", "2", "2", Verdict::Rigid, RegimeCase::B},
        {"1", "inf", "2", "1", Verdict::Rigid, RegimeCase::C},
        {"inf", "1", "2", "2", Verdict::Rigid, RegimeCase::D1},
        {"3/2", "1", "3/2", "2", Verdict::Rigid, RegimeCase::D2},
        {"inf", "1", "1", "2", Verdict::NonRigid, RegimeCase::Exceptional},
        {"1", "1", "3", "1", Verdict::NonRigid, RegimeCase::InnerFail},
        {"inf", "1", "1", "3", Verdict::NonRigid, RegimeCase::OuterFail},
        {"inf", "inf", "1", "3", Verdict::Rigid, RegimeCase::A},
        {"2", "2", "2", "2", Verdict::Rigid, RegimeCase::A},
        {"1", "2", "2", "2", Verdict::Rigid, RegimeCase::C},
        {"2", "1", "2", "2", Verdict::Rigid, RegimeCase::D1},
        {"inf", "2", "1", "2", Verdict::Rigid, RegimeCase::A},
    };
    for (const auto& a : anchors) {
        const auto r = classify(tuple(a.p1, a.p2, a.q1, a.q2));
        EXPECT_EQ(r.verdict, a.verdict) << r.tuple.str();
        EXPECT_EQ(to_string(r.label), to_string(a.label)) << r.tuple.str();
    }
}

TEST(Classify, D0Exponents)
{
    const auto r = classify(tuple("inf", "1", "1", "2"));
    EXPECT_EQ(r.d0.inner, Rational(1));
    EXPECT_EQ(r.d0.outer, Rational(0));
}

TEST(Classify, FullGridAgainstPredicates)
{
    const auto& grid = oracle::exponent_grid();
    std::size_t count = 0, rigid = 0;
    for (double p1 : grid)
        for (double p2 : grid)
            for (double q1 : grid)
                for (double q2 : grid) {
                    const ExponentTuple t{from_double(p1), from_double(p2), from_double(q1), from_double(q2)};
                    const auto r = classify(t);
                    const bool expect = oracle::rigid_by_predicates(p1, p2, q1, q2);
                    ASSERT_EQ(r.verdict == Verdict::Rigid, expect) << t.str();
                    const bool rigid_label = r.label == RegimeCase::A || r.label == RegimeCase::B ||
                                             r.label == RegimeCase::C || r.label == RegimeCase::D1 ||
                                             r.label == RegimeCase::D2;
                    ASSERT_EQ(rigid_label, expect) << t.str();
                    if (r.label == RegimeCase::Exceptional)
                        ASSERT_NO_THROW(choose_params(t, 8, 8)) << t.str();
                    ++count;
                    rigid += expect;
                }
    EXPECT_EQ(count, 6561u);
    EXPECT_GT(rigid, 0u);
    EXPECT_LT(rigid, count);
}

TEST(PietschStesin, Values)
{
    const auto one = Exponent::from_int(1), two = Exponent::from_int(2), inf = Exponent::infinity();
    EXPECT_EQ(pietsch_stesin(16, 8, inf, one), 8.0);
    EXPECT_EQ(pietsch_stesin(16, 16, inf, one), 0.0);
    EXPECT_EQ(pietsch_stesin(16, 0, inf, two), 4.0);
    EXPECT_EQ(pietsch_stesin(4, 2, two, two), 1.0);
    EXPECT_EQ(pietsch_stesin(16, 0, inf, one),
              d0_mixed(BlockShape(16, 1), inf, one, one, one));
    EXPECT_THROW(pietsch_stesin(4, 1, one, two), std::invalid_argument);
    EXPECT_THROW(pietsch_stesin(4, 5, two, one), std::invalid_argument);
}

TEST(B1L2Width, Values)
{
    EXPECT_EQ(b1_l2_width(4, 0), 1.0);
    EXPECT_EQ(b1_l2_width(4, 4), 0.0);
    EXPECT_DOUBLE_EQ(b1_l2_width(4, 2), std::sqrt(0.5));
    EXPECT_DOUBLE_EQ(b1_l2_width(16, 12), 0.5);
    EXPECT_THROW(b1_l2_width(4, 5), std::invalid_argument);
}

TEST(RigidityCertificate, CaseA)
{
    const auto cert = rigidity_certificate(classify(tuple("inf", "inf", "1", "2")), 4, 4, 8, 0.5);
    EXPECT_EQ(cert.label, RegimeCase::A);
    EXPECT_DOUBLE_EQ(cert.numeric_factor, 4.0);
    EXPECT_FALSE(cert.chain.empty());
    EXPECT_DOUBLE_EQ(cert.d0, 8.0);
}

TEST(RigidityCertificate, CaseB)
{
    const auto cert = rigidity_certificate(classify(tuple("1", "1", "2", "2")), 8, 8, 10, 0.25);
    EXPECT_EQ(cert.label, RegimeCase::B);
    EXPECT_DOUBLE_EQ(cert.numeric_factor, 0.5);
}

TEST(RigidityCertificate, SymbolicConstantsAndGuards)
{
    const auto c = rigidity_certificate(classify(tuple("1", "inf", "2", "1")), 4, 9, 10, 0.5);
    EXPECT_EQ(c.symbolic_constant, "c(eps)");
    EXPECT_DOUBLE_EQ(c.numeric_factor, 9.0);
    const auto d1 = rigidity_certificate(classify(tuple("inf", "1", "2", "2")), 16, 4, 10, 0.5);
    EXPECT_EQ(d1.symbolic_constant, "c(q2,eps)");
    EXPECT_DOUBLE_EQ(d1.numeric_factor, 4.0);

    EXPECT_THROW(rigidity_certificate(classify(tuple("inf", "1", "1", "2")), 4, 4, 4, 0.5),
                 PreconditionError);
    const auto rigid = classify(tuple("2", "2", "2", "2"));
    EXPECT_THROW(rigidity_certificate(rigid, 4, 4, 9, 0.5), std::invalid_argument);
    EXPECT_THROW(rigidity_certificate(rigid, 4, 4, 1, 0.0), std::invalid_argument);
}

TEST(NonRigidityWitness, ExceptionalIsComputed)
{
    EvaluationOptions options;
    options.kind = PartitionKind::Transposition;
    options.samples = 4;
    const auto w = nonrigidity_witness(tuple("inf", "1", "1", "2"), 16, 16, options);
    EXPECT_FALSE(w.analytic);
    EXPECT_EQ(w.n, 136u);
    EXPECT_EQ(w.d0, 16.0);
    EXPECT_LE(w.error_ratio, 0.25);
    EXPECT_DOUBLE_EQ(w.error_ratio, w.sup_error / w.d0);
}

TEST(NonRigidityWitness, AnalyticAndGuards)
{
    const auto w = nonrigidity_witness(tuple("1", "1", "3", "1"), 4, 4);
    EXPECT_TRUE(w.analytic);
    EXPECT_EQ(w.label, RegimeCase::InnerFail);
    EXPECT_FALSE(w.description.empty());
    EXPECT_TRUE(nonrigidity_witness(tuple("inf", "1", "1", "3"), 4, 4).analytic);
    EXPECT_THROW(nonrigidity_witness(tuple("2", "2", "2", "2"), 4, 4), PreconditionError);
}
