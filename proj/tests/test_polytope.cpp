#include <gtest/gtest.h>

#include <set>

#include "ehb/errors.hpp"
#include "ehb/polytope.hpp"
#include "test_util.hpp"

using namespace ehb;

namespace {

const Q h(1, 2);

ExponentVector ev(const char* s) { return parse_exponent_vector(s); }

Alpha alpha(std::initializer_list<Q> xs) {
  Alpha a{};
  std::copy(xs.begin(), xs.end(), a.begin());
  return a;
}

Alpha permuted(const Alpha& a, const std::array<int, 6>& p) {
  Alpha b{};
  for (int i = 0; i < 6; ++i) b[i] = a[p[i]];
  return b;
}

}  // namespace

TEST(Membership, Examples) {
  EXPECT_TRUE(in_P(ev("0,0,0,0;1/2,1/2;0")));
  EXPECT_FALSE(in_P(ev("0,0,0,0;1/2,1/2;1")));
  EXPECT_FALSE(in_P(ev("2,-1,0,0,0,0;0")));
  EXPECT_TRUE(in_P0(alpha({0, 0, 0, 0, h, h})));
  EXPECT_FALSE(in_P0(alpha({-1, 0, 0, 0, 1, 1})));
}

TEST(Reduction, IdentityInsideP) {
  ExponentVector v = ev("0,0,0,0;1/2,1/2;0");
  Reduction r = reduce_to_P(v);
  EXPECT_TRUE(r.word.empty());
  EXPECT_EQ(r.result, v);
}

TEST(Reduction, SingleTranslationStep) {
  ExponentVector v = ev("2,-1,0,0,0,0;0");
  Reduction r = reduce_to_P(v);
  ASSERT_EQ(r.word.size(), 1u);
  EXPECT_EQ(r.word[0].kind, SymmetryElement::Kind::TRANSLATION);
  EXPECT_EQ(r.result, ev("1,0,0,0,0,0;0"));
  EXPECT_TRUE(in_P(r.result));
}

TEST(Reduction, RandomRoundTrip) {
  std::mt19937_64 g(7);
  for (int i = 0; i < 1000; ++i) {
    ExponentVector v = sample::random_balanced(g);
    Reduction r = reduce_to_P(v);
    ASSERT_TRUE(in_P(r.result)) << v.str();
    EXPECT_EQ(ehb::apply(r.word, v), r.result) << v.str();
    for (const auto& e : r.word) {
      EXPECT_NE(e.kind, SymmetryElement::Kind::PERMUTATION);
      if (e.kind == SymmetryElement::Kind::TRANSLATION) EXPECT_TRUE(in_lattice(e.shift));
    }
  }
}

TEST(Reduction, TranslatedInputsStayInP) {
  std::mt19937_64 g(8);
  LatticeVector zshift{};
  zshift[6] = Q(1);
  LatticeVector move{};
  move[0] = Q(1);
  move[3] = Q(-1);
  for (int i = 0; i < 200; ++i) {
    ExponentVector v = sample::random_balanced(g);
    ExponentVector w = ehb::apply(SymmetryElement::translation(move), ehb::apply(SymmetryElement::translation(zshift), v));
    EXPECT_TRUE(in_P(reduce_to_P(w).result));
    // both land in P, so they agree up to the flip and translations fixing P's orbit data
    EXPECT_EQ(reduce_to_P(w).result.sum(), Q(1));
  }
}

TEST(Lattice, Generators) {
  LatticeVector a{};
  a[0] = Q(1);
  a[1] = Q(-1);
  EXPECT_TRUE(in_lattice(a));
  LatticeVector z{};
  z[6] = Q(1);
  EXPECT_TRUE(in_lattice(z));
  LatticeVector bad{};
  bad[0] = Q(1);
  EXPECT_FALSE(in_lattice(bad));
  EXPECT_THROW(SymmetryElement::translation(bad), DomainError);
}

TEST(Flip, Involution) {
  std::mt19937_64 g(9);
  for (int i = 0; i < 300; ++i) {
    ExponentVector v = sample::random_balanced(g);
    ExponentVector f = flip(v);
    EXPECT_EQ(flip(f), v);
    EXPECT_EQ(f.zeta, v.zeta);
    EXPECT_EQ(f.a[0], -v.a[0]);
    EXPECT_EQ(f.a[1], -v.a[1]);
    EXPECT_EQ(f.a[2], 1 - v.a[2]);
    EXPECT_EQ(f.a[3], 1 - v.a[3]);
    EXPECT_EQ(f.a[4], -v.a[4]);
    EXPECT_EQ(f.a[5], -v.a[5]);
    EXPECT_TRUE(f.balanced());
  }
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta_for(alpha({0, 0, 0, 0, h, h})), Q(0));
  EXPECT_EQ(zeta_for(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h})), Q(-1, 4));
  EXPECT_EQ(zeta_for(alpha({Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4), 0, 0})), Q(0));
  EXPECT_THROW(zeta_for(alpha({-1, 0, 0, 0, 1, 1})), DomainError);
}

TEST(Zeta, PairedVectorInP) {
  std::mt19937_64 g(10);
  for (int i = 0; i < 500; ++i) {
    ExponentVector v = sample::random_in_P(g);
    Q z = zeta_for(v.a);
    EXPECT_TRUE(-h <= z && z <= 0);
    EXPECT_TRUE(in_P(ExponentVector(v.a, z))) << v.str();
  }
}

TEST(ZDependence, Examples) {
  EXPECT_TRUE(is_z_dependent(ExponentVector(
      alpha({Q(-2, 9), Q(2, 9), Q(2, 9), Q(2, 9), Q(3, 9), Q(2, 9)}), Q(-1, 4))));
  EXPECT_TRUE(is_z_dependent(ev("0,0,0,0;1/2,1/2;0")));
  // relative interior of the facet alpha_4 + 1/2 = |zeta + 1/2|
  EXPECT_FALSE(is_z_dependent(ExponentVector(
      alpha({Q(1, 4), Q(1, 4), Q(3, 10), Q(3, 10), Q(-1, 10), 0}), Q(-1, 10))));
  EXPECT_THROW(is_z_dependent(ev("0,0,0,0;1/2,1/2;1")), DomainError);
}

TEST(Systems, Examples) {
  EXPECT_TRUE(is_system(alpha({0, 0, 0, 0, h, h})));
  EXPECT_FALSE(is_system(alpha({Q(-1, 4), Q(1, 8), Q(1, 8), Q(1, 8), Q(3, 8), h})));
  EXPECT_FALSE(is_system(alpha({-1, 0, 0, 0, 1, 1})));
}

TEST(Tiles, CanonicalOrder) {
  const auto& t = all_tiles();
  ASSERT_EQ(t.size(), 1u + 6u + 20u);
  EXPECT_EQ(t[0].str(), "I");
  EXPECT_EQ(t[1].str(), "II0");
  EXPECT_EQ(t[7].str(), "III012");
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
}

TEST(Tiles, CoverAndDisjointInteriors) {
  std::mt19937_64 g(11);
  for (int i = 0; i < 1000; ++i) {
    Alpha a = sample::random_in_P(g).a;
    int containing = 0, interior = 0;
    for (const TileId& t : all_tiles()) {
      containing += in_tile(t, a);
      interior += in_tile_interior(t, a);
    }
    EXPECT_GE(containing, 1);
    EXPECT_LE(interior, 1);
    EXPECT_FALSE(face_of(a).empty());
  }
}

TEST(FaceOf, Examples) {
  auto v = face_of(alpha({1, 0, 0, 0, 0, 0}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].tile.str(), "I");
  EXPECT_EQ(v[0].dim, 0);

  auto w = face_of(alpha({Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4), 0, 0}));
  ASSERT_FALSE(w.empty());
  EXPECT_EQ(w[0].tile.str(), "I");
  EXPECT_EQ(w[0].tight.size(), 2u);
  EXPECT_EQ(w[0].dim, 3);

  Alpha m{Q(-1, 12), Q(-1, 12), Q(5, 12), Q(5, 12), Q(-1, 12), Q(5, 12)};
  auto f = face_of(m);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].tile.str(), "III014");
  EXPECT_TRUE(f[0].tight.empty());
  EXPECT_EQ(f[0].dim, 5);

  EXPECT_THROW(face_of(alpha({-1, 0, 0, 0, 1, 1})), DomainError);
}

TEST(FaceName, Examples) {
  EXPECT_EQ(face_name(alpha({0, 0, 0, 0, h, h})), "40as");
  EXPECT_EQ(face_name(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h})), "1111pp");
  EXPECT_EQ(face_name(alpha({0, 0, 0, Q(1, 3), Q(1, 3), Q(1, 3)})), "31as");
  EXPECT_EQ(face_name(alpha({Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4), 0, 0})), "04v2");
  EXPECT_THROW(face_name(alpha({Q(-1, 4), Q(1, 8), Q(1, 8), Q(1, 8), Q(3, 8), h})), DomainError);
}

TEST(FaceName, PermutationInvariant) {
  const std::vector<Alpha> pts = {
      alpha({0, 0, 0, 0, h, h}),
      alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h}),
      alpha({0, 0, 0, Q(1, 3), Q(1, 3), Q(1, 3)}),
      alpha({Q(-1, 12), Q(-1, 12), Q(5, 12), Q(5, 12), Q(-1, 12), Q(5, 12)}),
  };
  EXPECT_EQ(s4xs2().size(), 48u);
  for (const Alpha& a : pts) {
    std::string n = face_name(a);
    for (const auto& p : s4xs2()) EXPECT_EQ(face_name(permuted(a, p)), n);
  }
}

TEST(Rank, Basic) {
  EXPECT_EQ(rational_rank({{Q(1), Q(0)}, {Q(2), Q(0)}}), 1);
  EXPECT_EQ(rational_rank({{Q(1), Q(1, 2)}, {Q(0), Q(1)}}), 2);
  EXPECT_EQ(rational_rank({}), 0);
}
