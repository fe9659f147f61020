#include <gtest/gtest.h>

#include "lsing/invariants.hpp"
#include "lsing/oracle.hpp"
#include "test_util.hpp"

namespace lsing {
namespace {

using testing_util::kXY;
using testing_util::kXYZ;
using testing_util::P;
using testing_util::P3;

GermPair G(const std::string& phi, const std::string& f) { return GermPair(kXY, P(phi), P(f)); }

TEST(MilnorNumber, Examples) {
  EXPECT_EQ(milnor_number(P("x^2+y^2")), Colength::finite(1));
  EXPECT_EQ(milnor_number(P("x^3+y^2")), Colength::finite(2));
  EXPECT_EQ(milnor_number(P("x^5+y^5+x^2*y^2")), Colength::finite(11));
  EXPECT_EQ(milnor_number(P("x^2")), Colength::infinite());
  EXPECT_THROW(milnor_number(P("1+x")), PreconditionError);
}

TEST(TjurinaNumber, Examples) {
  EXPECT_EQ(tjurina_number(P("x^3+y^2")), Colength::finite(2));
  EXPECT_EQ(tjurina_number(P("x*y")), Colength::finite(1));
  EXPECT_EQ(tjurina_number(P("x^5+y^5+x^2*y^2")), Colength::finite(10));
  EXPECT_THROW(tjurina_number(P("2+x")), PreconditionError);
}

TEST(IcisMilnor, Examples) {
  EXPECT_EQ(icis_milnor(P("x^3+y^2"), P("y")), 2);
  EXPECT_EQ(icis_milnor(P("x*y"), P("x+y")), 1);
  EXPECT_EQ(icis_milnor(P("x^2+y^2"), P("x")), 1);
  EXPECT_THROW(icis_milnor(P("x^3+y^2"), P("x^3+y^2")), PreconditionError);
  EXPECT_THROW(icis_milnor(P("x^2"), P("y")), PreconditionError);
}

TEST(BruceRoberts, CuspWithY) {
  auto g = G("x^3+y^2", "y");
  EXPECT_EQ(br_direct(g), Colength::finite(2));
  EXPECT_EQ(br_via_trivial(g), 2);
  EXPECT_EQ(br_via_formula(g), 2);
  EXPECT_EQ(br_via_section(g), 2);
}

TEST(BruceRoberts, NormalCrossing) {
  auto g = G("x*y", "x+y");
  EXPECT_EQ(br_direct(g), Colength::finite(1));
  EXPECT_EQ(br_via_trivial(g), 1);
  EXPECT_EQ(br_via_formula(g), 1);
  EXPECT_EQ(br_via_section(g), 1);
  EXPECT_EQ(br_direct(G("x^3+y^2", "x")), Colength::finite(1));
}

TEST(BruceRoberts, NotFinitelyDetermined) {
  auto g = G("x*y", "x");
  EXPECT_FALSE(is_finitely_determined(g));
  EXPECT_EQ(br_direct(g), Colength::infinite());
  EXPECT_THROW(br_via_trivial(g), NotFinitelyDetermined);
  EXPECT_FALSE(is_finitely_determined(G("x^3+y^2", "x^3+y^2")));
  EXPECT_TRUE(is_finitely_determined(G("x^3+y^2", "y")));
}

TEST(BruceRoberts, MuNotTauRoutesAgree) {
  for (const char* f : {"x+2*y", "x-y", "y+x^2"}) {
    auto g = G("x^5+y^5+x^2*y^2", f);
    auto d = br_direct(g);
    ASSERT_TRUE(d.is_finite()) << f;
    EXPECT_EQ(br_via_trivial(g), d.as_signed()) << f;
    EXPECT_EQ(br_via_formula(g), d.as_signed()) << f;
    EXPECT_EQ(br_via_section(g), d.as_signed()) << f;
  }
}

TEST(TjurinaRoutes, Examples) {
  EXPECT_EQ(theta_quotient_dim(P("x^3+y^2")), Colength::finite(2));
  EXPECT_EQ(theta_quotient_dim(P("x*y")), Colength::finite(1));
  EXPECT_EQ(theta_quotient_dim(P("x^5+y^5+x^2*y^2")), Colength::finite(10));
  EXPECT_EQ(tjurina_via_linear(P("x^3+y^2"), P("x")), Colength::finite(2));
  EXPECT_EQ(tjurina_via_linear(P("x^3+y^2"), P("y")), Colength::finite(2));
  EXPECT_EQ(tjurina_via_linear(P("x*y"), P("x+y")), Colength::finite(1));
  // p = x vanishes on a branch: dp(Theta_X) = dp(Theta_X^T) = <x>, so the
  // quotient is 0 and not tau = 1.
  EXPECT_EQ(tjurina_via_linear(P("x*y"), P("x")), Colength::finite(0));
  EXPECT_THROW(tjurina_via_linear(P("x*y"), P("x^2")), std::invalid_argument);
  EXPECT_THROW(tjurina_via_linear(P("x*y"), Polynomial(2)), std::invalid_argument);
}

TEST(Polar, Examples) {
  EXPECT_EQ(polar_multiplicity(P("x^3+y^2")).value, Colength::finite(3));
  EXPECT_EQ(polar_multiplicity(P("x*y")).value, Colength::finite(2));
  EXPECT_EQ(polar_multiplicity(P("x^2+y^2")).value, Colength::finite(2));
  EXPECT_THROW(polar_multiplicity(P("x^3+y^2"), {1, kDefaultSeed}), std::invalid_argument);
  EXPECT_THROW(polar_multiplicity(P("x^2")), PreconditionError);
}

TEST(Polar, DeterministicUnderSeed) {
  auto a = polar_multiplicity(P("x^5+y^5+x^2*y^2"), {8, 99});
  auto b = polar_multiplicity(P("x^5+y^5+x^2*y^2"), {8, 99});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.p, b.p);
}

TEST(EulerObstruction, Examples) {
  EXPECT_EQ(euler_obstruction(P("x^3+y^2")), 2);
  EXPECT_EQ(euler_obstruction(P("x*y")), 2);
  EXPECT_EQ(euler_obstruction(P3("x^2+y^2+z^2")), 0);
}

TEST(Morsification, Examples) {
  EXPECT_EQ(morsification_count(G("x^3+y^2", "y")), 1);
  EXPECT_EQ(morsification_count(G("x*y", "x+y")), 0);
  auto p = polar_multiplicity(P("x^3+y^2")).p;
  EXPECT_EQ(morsification_count(GermPair(kXY, P("x^3+y^2"), p)), 0);
  EXPECT_THROW(morsification_count(G("x*y", "x")), NotFinitelyDetermined);
}

TEST(GermPairValidation, Errors) {
  EXPECT_THROW(G("1+x", "y"), PreconditionError);
  EXPECT_THROW(G("x", "1+y"), PreconditionError);
  EXPECT_THROW(GermPair(kXYZ, P("x"), P("y")), DimensionMismatch);
}

TEST(FullReport, Cusp) {
  auto r = full_report(G("x^3+y^2", "y"));
  EXPECT_EQ(r.mu_f, ReportValue::finite(0));
  EXPECT_EQ(r.mu_X, ReportValue::finite(2));
  EXPECT_EQ(r.tau_X, ReportValue::finite(2));
  EXPECT_EQ(r.mu_icis, ReportValue::finite(2));
  for (const auto& v : {r.br_direct, r.br_trivial, r.br_formula, r.br_section}) EXPECT_EQ(v, ReportValue::finite(2));
  EXPECT_EQ(r.theta_quotient, ReportValue::finite(2));
  EXPECT_EQ(r.polar_mult, ReportValue::finite(3));
  EXPECT_EQ(r.euler_obstruction, ReportValue::finite(2));
  EXPECT_EQ(r.morsification_N, ReportValue::finite(1));
  EXPECT_TRUE(r.finitely_determined);
  EXPECT_TRUE(r.routes_agree);
  EXPECT_TRUE(r.weighted_homogeneous_hint);
  EXPECT_TRUE(r.inconsistencies.empty());
}

TEST(FullReport, NotFinitelyDetermined) {
  auto r = full_report(G("x*y", "x"));
  EXPECT_FALSE(r.finitely_determined);
  EXPECT_FALSE(r.routes_agree);
  EXPECT_EQ(r.br_direct, ReportValue::infinite());
  EXPECT_EQ(r.br_trivial, ReportValue::undefined());
  EXPECT_EQ(r.morsification_N, ReportValue::undefined());
  EXPECT_TRUE(r.inconsistencies.empty());
}

TEST(FullReport, MuNotTau) {
  auto r = full_report(G("x^5+y^5+x^2*y^2", "x+2*y"));
  EXPECT_EQ(r.mu_X, ReportValue::finite(11));
  EXPECT_EQ(r.tau_X, ReportValue::finite(10));
  EXPECT_EQ(r.theta_quotient, ReportValue::finite(10));
  EXPECT_TRUE(r.routes_agree);
  EXPECT_FALSE(r.weighted_homogeneous_hint);
}

TEST(FullReport, NonIsolatedGermIsUndefinedNotThrown) {
  GermPair g(kXYZ, P3("x^2*y-z^2"), P3("x+y+z"));
  auto r = full_report(g);
  EXPECT_EQ(r.mu_X, ReportValue::infinite());
  EXPECT_EQ(r.br_direct, ReportValue::undefined());
  EXPECT_EQ(r.polar_mult, ReportValue::undefined());
  EXPECT_FALSE(r.routes_agree);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(FullReport, WitnessesReplayThroughOracle) {
  auto r = full_report(G("x^5+y^5+x^2*y^2", "y+x^2"));
  std::size_t checked = 0;
  for (const auto& w : r.witnesses) {
    if (w.value.is_infinite()) continue;
    SCOPED_TRACE(w.label);
    auto o = oracle::jet_module_colength(w.gens, 2, w.rank);
    ASSERT_TRUE(o);
    EXPECT_EQ(o->colength, w.value.value());
    EXPECT_TRUE(oracle::replay_certificate(w.gens, 2, w.rank, o->certificate));
    ++checked;
  }
  EXPECT_GE(checked, 8u);
}

TEST(Symmetry, SwappedRolesSatisfyTjurinaDifference) {
  auto f = P("x^3+y^2"), phi = P("x^2+y^3");
  GermPair a(kXY, phi, f), b(kXY, f, phi);
  ASSERT_TRUE(is_finitely_determined(a));
  ASSERT_TRUE(is_finitely_determined(b));
  EXPECT_EQ(br_direct(a).as_signed() - br_direct(b).as_signed(),
            tjurina_number(f).as_signed() - tjurina_number(phi).as_signed());
}

}  // namespace
}  // namespace lsing
