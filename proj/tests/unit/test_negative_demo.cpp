#include <gtest/gtest.h>

#include "amalgam/errors.hpp"
#include "amalgam/witness.hpp"

namespace amalgam {
namespace {

const Alphabet F2(2);

TEST(NegativeDemo, DefaultQuotientIsA5) {
  const FiniteQuotientMap q = default_perfect_quotient();
  const PermGroup g = PermGroup::generate(q.images, q.degree);
  EXPECT_EQ(g.order(), 60u);
  EXPECT_TRUE(is_perfect(g));
  const DoubleGroup d = build_perfect_quotient_double(q, F2);
  EXPECT_EQ(d.subgroup().index(), 60u);
  EXPECT_EQ(d.subgroup().free_basis().size(), 61u);
}

TEST(NegativeDemo, RejectsNonPerfectQuotients) {
  const FiniteQuotientMap parity{2, {Perm::from_one_based(std::vector<int>{2, 1}), Perm::identity(2)}};
  EXPECT_THROW(build_perfect_quotient_double(parity, F2), DomainError);
  const FiniteQuotientMap intransitive{3, {Perm::from_one_based(std::vector<int>{2, 1, 3}), Perm::identity(3)}};
  EXPECT_THROW(build_perfect_quotient_double(intransitive, F2), DomainError);
  NegativeDemoOptions options;
  options.quotient = parity;
  EXPECT_THROW(negative_demo(options), DomainError);
}

TEST(NegativeDemo, ReportAtOrderSix) {
  NegativeDemoOptions options;
  options.order_bound = 6;
  const NegativeDemoReport r = negative_demo(options);
  EXPECT_EQ(r.quotient_order, 60u);
  EXPECT_TRUE(r.quotient_perfect);
  EXPECT_TRUE(r.d_nontrivial);
  EXPECT_TRUE(r.d_in_kernel);
  EXPECT_TRUE(r.ab_image_zero);
  EXPECT_TRUE(r.ck_commutation.all_pass());
  EXPECT_TRUE(std::holds_alternative<ExhaustedReport>(r.witness));
  EXPECT_GT(r.homs_checked, 0u);
  EXPECT_FALSE(r.hom_search_truncated);
  EXPECT_TRUE(r.d_killed_by_all);
  EXPECT_TRUE(r.mechanism_holds);
  EXPECT_EQ(r.catalog.size(), 7u);
}

TEST(NegativeDemo, SeedOnlyChangesSampledGenerators) {
  NegativeDemoOptions a, b;
  a.order_bound = b.order_bound = 4;
  a.seed = 1;
  b.seed = 2;
  const auto ra = negative_demo(a);
  const auto rb = negative_demo(b);
  EXPECT_EQ(ra.d, rb.d);
  EXPECT_EQ(ra.homs_checked, rb.homs_checked);
  EXPECT_EQ(negative_demo(a).kernel_samples, ra.kernel_samples);
}

TEST(NegativeDemo, OtherPerfectQuotient) {
  // A5 again, through different generators: a -> (1 2)(3 4), b -> (1 3 5).
  NegativeDemoOptions options;
  options.quotient = FiniteQuotientMap{5, {Perm::from_one_based(std::vector<int>{2, 1, 4, 3, 5}),
                                          Perm::from_one_based(std::vector<int>{3, 2, 5, 4, 1})}};
  options.order_bound = 6;
  const auto r = negative_demo(options);
  EXPECT_EQ(r.quotient_order, 60u);
  EXPECT_TRUE(r.d_killed_by_all);
  EXPECT_TRUE(r.mechanism_holds);
}

}  // namespace
}  // namespace amalgam
