#include <random>
#include <set>

#include "doctest.h"
#include "maxab/errors.hpp"
#include "maxab/f2msms.hpp"

using namespace maxab;

namespace {

// Independent evaluation of mu on x through repeated use of the compatibility rule.
int mu_by_rule(const F2SymplecticSpace& v, const QuadraticRefinement& mu, F2Vec x) {
  int acc = 0;
  F2Vec partial = 0;
  for (int j = 0; j < v.dim(); ++j)
    if ((x >> j) & 1) {
      const F2Vec e = F2Vec(1) << j;
      acc = (acc + ((mu.bits >> j) & 1) + v.form(partial, e)) & 1;
      partial |= e;
    }
  return acc;
}

std::pair<int, int> sign_counts(int k) {
  const auto v = F2SymplecticSpace::standard(k);
  int pos = 0, neg = 0;
  for (F2Vec b = 0; b < (F2Vec(1) << (2 * k)); ++b) (defect(v, {b}) > 0 ? pos : neg)++;
  return {pos, neg};
}

Msms random_msms(std::mt19937& rng, int dim, int s) {
  std::vector<F2Vec> g(dim, 0);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (rng() & 1) {
        g[i] |= F2Vec(1) << j;
        g[j] |= F2Vec(1) << i;
      }
  Msms m{F2SymplecticSpace(g), {}};
  for (int t = 0; t < s; ++t) m.mus.push_back({static_cast<F2Vec>(rng() & ((F2Vec(1) << dim) - 1))});
  return m;
}

Msms apply_random_change(std::mt19937& rng, const Msms& m) {
  // transport the structure along a random invertible map h: new(x) = old(h x)
  const int d = m.space.dim();
  F2Map h;
  do {
    h = F2Map{d, std::vector<F2Vec>(d)};
    for (auto& c : h.cols) c = static_cast<F2Vec>(rng() & ((F2Vec(1) << d) - 1));
  } while (!h.inverse());
  std::vector<F2Vec> g(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m.space.form(h.cols[i], h.cols[j])) g[i] |= F2Vec(1) << j;
  Msms out{F2SymplecticSpace(g), {}};
  for (const auto& mu : m.mus) {
    QuadraticRefinement n;
    for (int j = 0; j < d; ++j)
      if (mu.value(m.space, h.cols[j])) n.bits |= F2Vec(1) << j;
    out.mus.push_back(n);
  }
  std::shuffle(out.mus.begin(), out.mus.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("defect values") {
  const auto v = F2SymplecticSpace::standard(1);
  CHECK(defect(v, QuadraticRefinement::from_signs({1, 1})) == 2);
  CHECK(defect(v, QuadraticRefinement::from_signs({-1, -1})) == -2);
  CHECK(defect(F2SymplecticSpace(), {}) == 1);
  for (int k = 0; k <= 3; ++k) {
    CHECK(defect(standard_model(ModelTag::Plus, k).space, standard_refinement(ModelTag::Plus, k)) == (1 << k));
    if (k > 0)
      CHECK(defect(standard_model(ModelTag::Minus, k).space, standard_refinement(ModelTag::Minus, k)) == -(1 << k));
  }
}

TEST_CASE("quadratic evaluation matches the compatibility rule") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Msms m = random_msms(rng, 5, 1);
    for (F2Vec x = 0; x < 32; ++x) {
      CHECK(m.mus[0].value(m.space, x) == mu_by_rule(m.space, m.mus[0], x));
      for (F2Vec y = 0; y < 32; y += 7)
        CHECK(((m.mus[0].value(m.space, x) + m.mus[0].value(m.space, y) + m.space.form(x, y)) & 1) ==
              m.mus[0].value(m.space, x ^ y));
    }
  }
}

TEST_CASE("sign counts of refinements") {
  CHECK(sign_counts(1) == std::pair(3, 1));
  CHECK(sign_counts(2) == std::pair(10, 6));
  for (int k = 1; k <= 3; ++k) {
    const auto [p, n] = sign_counts(k);
    CHECK(p == (1 << (2 * k - 1)) + (1 << (k - 1)));
    CHECK(n == (1 << (2 * k - 1)) - (1 << (k - 1)));
  }
}

TEST_CASE("defect is multiplicative under orthogonal sums") {
  const auto a = F2SymplecticSpace::standard(1), b = F2SymplecticSpace::standard(2);
  const auto sum = F2SymplecticSpace::standard(3);
  for (F2Vec x = 0; x < 4; ++x)
    for (F2Vec y = 0; y < 16; ++y) CHECK(defect(sum, {x | (y << 2)}) == defect(a, {x}) * defect(b, {y}));
}

TEST_CASE("standard models") {
  const Msms t = standard_model("twisted(1)");
  CHECK(t.space.dim() == 3);
  CHECK(t.space.radical_rank() == 1);
  CHECK(t.mus[0].value(t.space, t.space.radical_basis()[0]) == 1);
  const Msms r = standard_model("radical1_plus(2)");
  CHECK(r.space.radical_rank() == 1);
  CHECK(r.mus[0].value(r.space, r.space.radical_basis()[0]) == 0);
  CHECK(standard_model("plus(0)").space.dim() == 0);
  CHECK_THROWS_AS(standard_model("minus(0)"), ValidationError);
  CHECK_THROWS_AS(standard_model("bogus(1)"), ValidationError);
}

TEST_CASE("isometry groups") {
  for (int k = 0; k <= 2; ++k)
    for (int r = 0; r <= 1; ++r) {
      const auto v = F2SymplecticSpace::standard(k, r);
      std::uint64_t count = 0;
      v.for_each_isometry([&](const F2Map& g) {
        CHECK(v.is_isometry(g));
        ++count;
        return true;
      });
      CHECK(count == v.isometry_group_order());
    }
  CHECK(F2SymplecticSpace::standard(2).isometry_group_order() == 720);
  CHECK(F2SymplecticSpace::standard(4).isometry_group_order() == 47377612800ULL);
}

TEST_CASE("symplectic basis of a random space") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Msms m = random_msms(rng, 6, 0);
    const F2Map p = m.space.symplectic_basis();
    REQUIRE(p.inverse());
    const int r = m.space.radical_rank();
    const auto std_space = F2SymplecticSpace::standard((6 - r) / 2, r);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(m.space.form(p.cols[i], p.cols[j]) == std_space.form(F2Vec(1) << i, F2Vec(1) << j));
  }
}

TEST_CASE("isomorphism testing agrees with brute force") {
  std::mt19937 rng(9);
  CHECK(is_isomorphic(standard_model("plus(1)"), standard_model("plus(1)")).isomorphic);
  CHECK_FALSE(is_isomorphic(standard_model("plus(1)"), standard_model("minus(1)")).isomorphic);
  Msms twice = standard_model("plus(1)");
  twice.mus.push_back(twice.mus[0]);
  CHECK(is_isomorphic(twice, twice).isomorphic);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 2 + trial % 3;
    const int s = 1 + trial % 3;
    const Msms a = random_msms(rng, dim, s);
    const Msms b = (trial % 2) ? apply_random_change(rng, a) : random_msms(rng, dim, s);
    const auto fast = is_isomorphic(a, b);
    const auto slow = is_isomorphic_brute_force(a, b);
    CHECK(fast.isomorphic == slow.isomorphic);
    if (trial % 2) CHECK(fast.isomorphic);
    if (fast.isomorphic) {
      // witness w: V_a -> V_b is an isometry carrying {mu_b o w} onto {mu_a}
      const F2Map& w = *fast.witness;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          CHECK(b.space.form(w.cols[i], w.cols[j]) == a.space.form(F2Vec(1) << i, F2Vec(1) << j));
      std::multiset<F2Vec> lhs, rhs;
      for (const auto& mu : b.mus) lhs.insert(mu.pullback(b.space, w).bits);
      for (const auto& mu : a.mus) rhs.insert(mu.bits);
      CHECK(lhs == rhs);
      for (const auto& mu : a.mus) CHECK(defect(a.space, mu) == defect(a.space, mu));
    }
  }
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(standard_model("plus(1)")) == 2);
  CHECK(aut_order(Msms{F2SymplecticSpace::standard(1), {}}) == 6);
  CHECK(aut_order(Msms{}) == 1);
  // brute-force stabilizer count for a few two-refinement examples
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Msms m{F2SymplecticSpace::standard(2), {{static_cast<F2Vec>(rng() & 15)}, {static_cast<F2Vec>(rng() & 15)}}};
    std::multiset<F2Vec> target{m.mus[0].bits, m.mus[1].bits};
    std::uint64_t count = 0;
    m.space.for_each_isometry([&](const F2Map& g) {
      std::multiset<F2Vec> got{m.mus[0].pullback(m.space, g).bits, m.mus[1].pullback(m.space, g).bits};
      count += got == target;
      return true;
    });
    CHECK(aut_order(m) == count);
  }
}

TEST_CASE("class counts for tuples of positive refinements") {
  auto total = [](const std::vector<MsmsClass>& cs) {
    std::uint64_t t = 0;
    for (const auto& c : cs) t += c.tuple_count;
    return t;
  };
  CHECK(enumerate_classes(1, 1).size() == 1);
  CHECK(enumerate_classes(1, 2).size() == 2);
  CHECK(enumerate_classes(2, 2).size() == 2);
  CHECK(enumerate_classes(3, 2).size() == 2);
  const auto c23 = enumerate_classes(2, 3);
  CHECK(c23.size() == 4);
  CHECK(total(c23) == 1000);
  CHECK(total(enumerate_classes(1, 3)) == 27);
  CHECK(enumerate_classes(3, 3).size() == 4);
  // classes are pairwise non-isomorphic
  for (std::size_t i = 0; i < c23.size(); ++i)
    for (std::size_t j = i + 1; j < c23.size(); ++j)
      CHECK_FALSE(is_isomorphic_brute_force(c23[i].representative, c23[j].representative).isomorphic);
}

TEST_CASE("the three-refinement witness tuple with distinct refinements") {
  // basis x1, y1, x2, y2; mu2(y2) = -1 and mu3(y1) = -1
  const auto v = F2SymplecticSpace::standard(2);
  const Msms w{v, {QuadraticRefinement::from_signs({1, 1, 1, 1}), QuadraticRefinement::from_signs({1, 1, 1, -1}),
                   QuadraticRefinement::from_signs({1, -1, 1, 1})}};
  for (const auto& mu : w.mus) CHECK(defect(v, mu) > 0);
  int matches = 0;
  for (const auto& c : enumerate_classes(2, 3)) matches += is_isomorphic(c.representative, w).isomorphic;
  CHECK(matches == 1);
}

TEST_CASE("defect identity on the kernel of the difference") {
  for (int k = 1; k <= 2; ++k) {
    const auto v = F2SymplecticSpace::standard(k);
    const F2Vec n = F2Vec(1) << (2 * k);
    for (F2Vec a = 0; a < n; ++a)
      for (F2Vec b = 0; b < n; ++b) {
        if (a == b) continue;
        const QuadraticRefinement m1{a}, m2{b};
        long long sub = 0;
        for (F2Vec x = 0; x < n; ++x)
          if (m1.value(v, x) == m2.value(v, x)) sub += m1.sign(v, x);
        CHECK(2 * sub == defect(v, m1) + defect(v, m2));
      }
  }
}
