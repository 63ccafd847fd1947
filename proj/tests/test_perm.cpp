#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "braidmono/perm.hpp"

using namespace braidmono;

namespace {

std::vector<Perm> symmetric_group(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Test-side multiply, written independently of compose(): apply p, then q.
Perm naive_mul(const Perm& p, const Perm& q) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q.images()[p.images()[i]];
  return Perm::from_images(img);
}

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img);
}

// Closure oracle: repeated multiplication until fixpoint.
std::set<std::vector<int>> naive_closure(const std::vector<Perm>& gens) {
  std::set<std::vector<int>> elements{Perm::identity(gens.front().degree()).images()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> next = elements;
    for (const auto& e : elements)
      for (const Perm& g : gens) {
        Perm prod = compose(Perm::from_images(e), g);
        if (next.insert(prod.images()).second) grew = true;
      }
    elements.swap(next);
  }
  return elements;
}

}  // namespace

TEST_CASE("identity and basic accessors") {
  Perm id = Perm::identity(4);
  CHECK(id.degree() == 4);
  CHECK(id.is_identity());
  CHECK(id.to_one_line() == "[1,2,3,4]");
  CHECK(id.cycle_notation() == "()");
  CHECK_THROWS_AS(Perm::identity(0), std::invalid_argument);
}

TEST_CASE("one-line parsing accepts bijections and rejects everything else") {
  Perm t = Perm::from_one_line("[2,1,3]");
  CHECK(t == Perm::transposition(3, 0, 1));
  CHECK(Perm::from_one_line(" [ 2 , 1 ] ") == Perm::transposition(2, 0, 1));
  CHECK(t.to_one_line() == "[2,1,3]");

  CHECK_THROWS_AS(Perm::from_one_line("[1,1]"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("[0,1]"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("[3,1]"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("[]"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("2,1"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("[2,1"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("[2,1]x"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line("[2,-1]"), std::invalid_argument);
}

TEST_CASE("one-line round trip on random permutations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Perm p = random_perm(1 + trial % 12, rng);
    CHECK(Perm::from_one_line(p.to_one_line()) == p);
  }
}

TEST_CASE("compose follows the apply-p-then-q convention") {
  Perm id = Perm::identity(3);
  Perm t12 = Perm::transposition(3, 0, 1);
  CHECK(compose(id, t12) == t12);
  CHECK(compose(t12, id) == t12);
  CHECK(compose(t12, t12).is_identity());
  CHECK(compose(Perm::transposition(2, 0, 1), Perm::transposition(2, 0, 1)) ==
        Perm::identity(2));
  CHECK_THROWS_AS(compose(Perm::identity(2), Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("every S3 product matches the independent multiply; 3-cycle times transposition is a transposition") {
  const auto s3 = symmetric_group(3);
  for (const Perm& p : s3)
    for (const Perm& q : s3) {
      Perm expected = naive_mul(p, q);
      CHECK(compose(p, q) == expected);
      if (cycle_type(p) == CycleType{3} && cycle_type(q) == CycleType{2, 1})
        CHECK(cycle_type(expected) == CycleType{2, 1});
    }
}

TEST_CASE("inverse examples and two-sided identity law") {
  CHECK(inverse(Perm::identity(5)).is_identity());
  Perm t = Perm::transposition(4, 0, 1);
  CHECK(inverse(t) == t);
  Perm c = Perm::from_one_line("[2,3,1]");   // (1 2 3)
  CHECK(inverse(c) == Perm::from_one_line("[3,1,2]"));  // (1 3 2)

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(2 + trial % 7, rng);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
  }
}

TEST_CASE("compose is associative") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(5, rng), q = random_perm(5, rng), r = random_perm(5, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("conjugate is g^-1 p g") {
  Perm p = Perm::transposition(3, 0, 1);   // (1 2)
  Perm g = Perm::transposition(3, 0, 2);   // (1 3)
  CHECK(conjugate(p, Perm::identity(3)) == p);
  // verify by composing the three permutations explicitly
  CHECK(conjugate(p, g) == compose(compose(inverse(g), p), g));
  CHECK(conjugate(p, g) == Perm::transposition(3, 1, 2));  // (2 3)
  CHECK_THROWS_AS(conjugate(Perm::identity(2), Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("conjugation action property and cycle type invariance over all of S4") {
  const auto s4 = symmetric_group(4);
  for (const Perm& p : s4)
    for (const Perm& g : s4) {
      CHECK(cycle_type(conjugate(p, g)) == cycle_type(p));
      for (const Perm& h : {s4[5], s4[17]}) {
        CHECK(conjugate(conjugate(p, g), h) == conjugate(p, compose(g, h)));
      }
    }
}

TEST_CASE("power matches repeated multiplication") {
  Perm c = Perm::from_one_line("[2,3,4,1]");  // 4-cycle
  CHECK(power(c, 0).is_identity());
  CHECK(power(c, 1) == c);
  CHECK(power(c, 2) == compose(c, c));
  CHECK(power(c, 4).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, -3) == c);
}

TEST_CASE("cycle type examples") {
  CHECK(cycle_type(Perm::identity(4)) == CycleType{1, 1, 1, 1});
  CHECK(cycle_type(Perm::transposition(4, 0, 1)) == CycleType{2, 1, 1});
  Perm p = Perm::from_one_line("[2,3,1,5,4]");  // (1 2 3)(4 5)
  CHECK(cycle_type(p) == CycleType{3, 2});
  CHECK(p.cycle_notation() == "(1 2 3)(4 5)");
}

TEST_CASE("is_transposition") {
  CHECK(is_transposition(Perm::transposition(6, 0, 1)));
  CHECK(is_transposition(Perm::transposition(2, 0, 1)));
  CHECK_FALSE(is_transposition(Perm::identity(3)));
  CHECK_FALSE(is_transposition(Perm::from_one_line("[2,1,4,3]")));  // (1 2)(3 4)
  CHECK_FALSE(is_transposition(Perm::from_one_line("[2,3,1]")));
}

TEST_CASE("commutator convention [x,y] = x y x^-1 y^-1") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Perm x = random_perm(5, rng), y = random_perm(5, rng);
    CHECK(commutator(x, y) == compose(compose(compose(x, y), inverse(x)), inverse(y)));
  }
  CHECK(commutator(Perm::identity(3), Perm::from_one_line("[2,3,1]")).is_identity());
}

TEST_CASE("generated group summary: spec examples") {
  {
    auto s = summarize_generated_group({Perm::transposition(2, 0, 1)});
    CHECK(s.order == 2);
    CHECK(s.transitive);
    CHECK(s.point_stabilizer_order == 1);
  }
  {
    auto s = summarize_generated_group(
        {Perm::transposition(3, 0, 1), Perm::from_one_line("[2,3,1]")});
    CHECK(s.order == 6);
    CHECK(s.transitive);
    CHECK(s.point_stabilizer_order == 2);
  }
  {
    auto s = summarize_generated_group({Perm::transposition(3, 0, 1)});
    CHECK(s.order == 2);
    CHECK_FALSE(s.transitive);  // point 3 is fixed
  }
  CHECK_THROWS_AS(summarize_generated_group({}), std::invalid_argument);
  CHECK_THROWS_AS(summarize_generated_group({Perm::identity(2), Perm::identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("group order matches the naive closure oracle on random S5 subgroups") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + trial % 3;
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_perm(5, rng));
    auto s = summarize_generated_group(gens);
    auto closure = naive_closure(gens);
    CHECK(s.order == closure.size());
    CHECK(s.order % s.point_stabilizer_order == 0);
    CHECK(s.order / s.point_stabilizer_order ==
          orbit_of_point(gens, 0).size());  // orbit-stabilizer
  }
}

TEST_CASE("full symmetric and alternating-scale groups up to degree 9") {
  // whole S_n generated by (1 2) and the n-cycle
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    auto s = summarize_generated_group({Perm::transposition(n, 0, 1),
                                        Perm::from_images(cyc)});
    CHECK(s.order == factorial(n));
    CHECK(s.transitive);
    CHECK(s.point_stabilizer_order == factorial(n - 1));
  }
}

TEST_CASE("galois criterion restated: transitive + order n iff transitive + trivial stabilizer") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 6;
    std::vector<Perm> gens{random_perm(n, rng), random_perm(n, rng)};
    auto s = summarize_generated_group(gens);
    bool galois_by_order = s.transitive && s.order == static_cast<std::uint64_t>(n);
    bool galois_by_stab = s.transitive && s.point_stabilizer_order == 1;
    CHECK(galois_by_order == galois_by_stab);
  }
}

TEST_CASE("orbit of a point") {
  auto orbit = orbit_of_point({Perm::transposition(4, 0, 1)}, 0);
  CHECK(orbit == std::vector<int>{0, 1});
  auto orbit2 = orbit_of_point({Perm::transposition(4, 0, 1), Perm::transposition(4, 1, 3)}, 0);
  CHECK(orbit2 == std::vector<int>{0, 1, 3});
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(9) == 362880);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), std::invalid_argument);
}
