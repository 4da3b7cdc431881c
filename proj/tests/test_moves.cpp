#include <doctest.h>

#include "stringex/error.hpp"
#include "stringex/moves.hpp"
#include "support.hpp"

using namespace stringex;
using namespace stringex::test;

namespace {

ShuffleWord letters_word(std::vector<Letter> letters, const CartanMatrix& a) {
  return ShuffleWord::from_letters(std::move(letters), std::make_shared<const CartanMatrix>(a));
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("flip of unequal values is the identity") {
    const auto a = cartan_a2();
    const auto w = letters_word({{1, Origin::Bottom}, {1, Origin::Bottom}, {2, Origin::Top},
                                 {1, Origin::Top}},
                                a);
    const auto r = flip(w, 2);
    CHECK(r.effect.is_identity());
    CHECK(r.word.values() == LabelSequence{1, 2, 1, 1});
    CHECK(exchange_matrix(r.word) == exchange_matrix(w));
  }

  TEST_CASE("flip of equal values mutates the string between them") {
    const auto a = cartan_a2();
    const auto w = letters_word({{1, Origin::Bottom}, {2, Origin::Bottom}, {1, Origin::Bottom},
                                 {1, Origin::Top}, {2, Origin::Top}},
                                a);
    const auto r = flip(w, 3);
    CHECK(r.effect == FlipEffect::mutate_at(id(1, 2)));
    CHECK(exchange_matrix(r.word) == mutate(exchange_matrix(w), id(1, 2)));
  }

  TEST_CASE("flip errors") {
    const auto w = bfz_word();
    CHECK_THROWS_AS(flip(w, 1), Error);
    CHECK_THROWS_AS(flip(w, 0), Error);
    CHECK_THROWS_AS(flip(w, 6), Error);
    try {
      flip(w, 4);
      FAIL("expected NotAQuadrilateral");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAQuadrilateral);
    }
  }

  TEST_CASE("flip is an involution") {
    std::mt19937_64 rng(seed());
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = random_instance(rng, 4, 10);
      for (int p = 1; p < w.length(); ++p) {
        if (w.at(p).origin == w.at(p + 1).origin) continue;
        const auto once = flip(w, p);
        const auto twice = flip(once.word, p);
        CHECK(twice.word == w);
        CHECK(twice.effect == once.effect);
      }
    }
  }

  TEST_CASE("flip effect on random words") {
    std::mt19937_64 rng(seed() + 1);
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = random_instance(rng, 4, 10);
      for (int p = 1; p < w.length(); ++p) {
        if (w.at(p).origin == w.at(p + 1).origin) continue;
        const auto r = flip(w, p);
        const auto before = exchange_matrix(w);
        const auto after = exchange_matrix(r.word);
        if (r.effect.is_identity())
          CHECK(after == before);
        else
          CHECK(after == mutate(before, *r.effect.mutated));
      }
    }
  }

  TEST_CASE("flip path between shuffles") {
    const auto w = tri_word(cartan_tri_a1());
    CHECK(flip_path(w, w).empty());
    const auto left = make_word(w.top(), w.bottom(), "TTTBBBBB", w.cartan());
    const auto path = flip_path(w, left);
    // Each Top letter passes the three Bottom letters ahead of it.
    CHECK(path.size() == 9);
    CHECK(apply_seq(exchange_matrix(w), path_mutations(path)) == exchange_matrix(left));
    CHECK_THROWS_AS(flip_path(w, bfz_word()), Error);
    CHECK_THROWS_AS(flip_path(w, make_word({1, 2, 3}, {3, 1, 1, 3, 2}, "BBBTTTBB", cartan_tri_a2())),
                    Error);
  }

  TEST_CASE("flip path on random pairs") {
    std::mt19937_64 rng(seed() + 2);
    for (int trial = 0; trial < 200; ++trial) {
      const auto w = random_instance(rng, 4, 10);
      auto origins = w.origin_string();
      std::shuffle(origins.begin(), origins.end(), rng);
      const auto to = make_word(w.top(), w.bottom(), origins, w.cartan());
      const auto path = flip_path(w, to);
      CHECK(apply_seq(exchange_matrix(w), path_mutations(path)) == exchange_matrix(to));
    }
  }

  TEST_CASE("d1..d9 flip pattern after Ld") {
    auto w = reduce(gls_word(), ReductionKind::Ld);
    CHECK(w.origin_string() == "TBBBBBBBBB");
    std::vector<FlipEffect> effects;
    for (int p = 1; p <= 9; ++p) {
      const auto r = flip(w, p);
      effects.push_back(r.effect);
      w = r.word;
    }
    const auto I = FlipEffect::identity();
    CHECK(effects == std::vector<FlipEffect>{I, FlipEffect::mutate_at(id(1, 1)), I,
                                             FlipEffect::mutate_at(id(1, 2)), I,
                                             FlipEffect::mutate_at(id(1, 3)), I, I, I});
  }

  TEST_CASE("reductions toggle the end letter") {
    const auto w = tri_word(cartan_tri_a1());
    const auto ld = reduce(w, ReductionKind::Ld);
    CHECK(ld.top() == LabelSequence{3, 1, 2, 3});
    CHECK(ld.bottom() == LabelSequence{1, 1, 3, 2});
    CHECK(ld.origin_string() == "TBBTTTBB");
    CHECK(exchange_matrix(ld) == exchange_matrix(w));
    CHECK(reduce(ld, ReductionKind::Lu) == w);
    const auto rd = reduce(w, ReductionKind::Rd);
    CHECK(rd.top() == LabelSequence{1, 2, 3, 2});
    CHECK(exchange_matrix(rd) == exchange_matrix(w));
    CHECK(reduce(rd, ReductionKind::Ru) == w);
  }

  TEST_CASE("inapplicable reductions") {
    const auto w = tri_word(cartan_tri_a1());
    for (const auto kind : {ReductionKind::Lu, ReductionKind::Ru}) {
      try {
        reduce(w, kind);
        FAIL("expected ReductionNotApplicable");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReductionNotApplicable);
      }
    }
    CHECK_THROWS_AS(reduce(bottom_word({}, cartan_a2()), ReductionKind::Ld), Error);
    CHECK(parse_reduction_kind("Ru") == ReductionKind::Ru);
    CHECK(to_string(ReductionKind::Ld) == "Ld");
    CHECK_THROWS_AS(parse_reduction_kind("Lx"), Error);
  }

  TEST_CASE("reduce_to_bottom on worked words") {
    const auto w = tri_word(cartan_tri_a1());
    const auto r = reduce_to_bottom(w);
    CHECK(r.bottom.values() == LabelSequence{3, 2, 1, 3, 1, 1, 3, 2});
    CHECK(r.bottom.is_all_bottom());
    CHECK(relabeled(apply_seq(exchange_matrix(r.bottom), r.mutations), r.label_map) ==
          exchange_matrix(w));

    const auto bfz = reduce_to_bottom(bfz_word());
    CHECK(bfz.bottom.values() == LabelSequence{1, 2, 1, 1, 2, 1});
    CHECK(relabeled(apply_seq(exchange_matrix(bfz.bottom), bfz.mutations), bfz.label_map) ==
          exchange_matrix(bfz_word()));

    const auto trivial = reduce_to_bottom(gls_word());
    CHECK(trivial.bottom == gls_word());
    CHECK(trivial.mutations.empty());
    for (const auto& [from, to] : trivial.label_map) CHECK(from == to);
  }

  TEST_CASE("reduce_to_bottom on random words") {
    std::mt19937_64 rng(seed() + 3);
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = random_instance(rng, 4, 10);
      const auto r = reduce_to_bottom(w);
      const LabelSequence top = w.top();
      LabelSequence expected(top.rbegin(), top.rend());
      for (const int v : w.bottom()) expected.push_back(v);
      CHECK(r.bottom.values() == expected);
      CHECK(relabeled(apply_seq(exchange_matrix(r.bottom), r.mutations), r.label_map) ==
            exchange_matrix(w));
    }
  }
}
