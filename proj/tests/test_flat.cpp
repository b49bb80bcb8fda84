#include <catch_amalgamated.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "vknot/flat.hpp"

using namespace vknot;
using vknot::testing::expect_error;
using vknot::testing::make_rng;
using vknot::testing::random_diagram;

namespace {

FlatCode flat_two_one() { return flatten(Diagram(parse("O1+O2+U1+U2+"))); }

/// Seeded scan for a flat word whose bounded search exhausts its whole cone
/// without reaching the unknot: a word the dwrithes cannot certify but the
/// search proves irreducible within its move closure.
const std::optional<FlatCode>& exhaustion_witness() {
  static const std::optional<FlatCode> witness = [] {
    auto rng = make_rng(103);
    std::optional<FlatCode> found;
    for (int i = 0; i < 300 && !found; ++i) {
      FlatCode f = flatten(random_diagram(rng, 5));
      FlatSearchOutcome o = flat_search(f, 3000);
      if (o.verdict.status == FlatStatus::Unknown &&
          o.verdict.budget_used < 3000)
        found = f;
    }
    return found;
  }();
  return witness;
}

} // namespace

TEST_CASE("handedness of a pass depends on role and sign together") {
  CHECK(handedness_of(Role::Over, +1) == Handedness::RightToLeft);
  CHECK(handedness_of(Role::Under, +1) == Handedness::LeftToRight);
  CHECK(handedness_of(Role::Over, -1) == Handedness::LeftToRight);
  CHECK(handedness_of(Role::Under, -1) == Handedness::RightToLeft);
}

TEST_CASE("flattening forgets exactly the over/under data") {
  CHECK(serialize_flat(flat_two_one()) == "1R2R1L2L");
  CHECK(serialize_flat(flatten(Diagram(parse("O1+U1+")))) == "1R1L");
  CHECK(serialize_flat(flatten(Diagram(parse("O2-U2-")))) == "2L2R");
  CHECK(flatten(Diagram{RawCode{}}).empty());

  SECTION("mirror images flatten identically") {
    auto rng = make_rng(107);
    for (int i = 0; i < 60; ++i) {
      Diagram d = random_diagram(rng, 8, true);
      CHECK(flatten(Diagram(mirrored(d.code()))) == flatten(d));
    }
  }
  SECTION("the two encounters of a crossing have opposite handedness") {
    auto rng = make_rng(109);
    for (int i = 0; i < 60; ++i)
      REQUIRE_NOTHROW(validate_flat(flatten(random_diagram(rng, 8, true))));
  }
}

TEST_CASE("flat words parse, serialize, and reject malformed input") {
  FlatCode f = parse_flat("1R2R1L2L");
  CHECK(f == flat_two_one());
  CHECK(parse_flat("1R 2R\t1L 2L") == f);
  CHECK(parse_flat("").empty());
  CHECK(serialize_flat(parse_flat("7L7R")) == "7L7R");

  CHECK(expect_error([] { parse_flat("1R1R"); }).kind() == errc::sign_mismatch);
  CHECK(expect_error([] { parse_flat("1R"); }).kind() == errc::unpaired_pass);
  CHECK(expect_error([] { parse_flat("1R2L1L"); }).kind() == errc::unpaired_pass);
  CHECK(expect_error([] { parse_flat("1R1L1R"); }).kind() == errc::duplicate_pass);
  CHECK(expect_error([] { parse_flat("0R0L"); }).kind() == errc::malformed_token);
  CHECK(expect_error([] { parse_flat("1X"); }).kind() == errc::malformed_token);
  CHECK(expect_error([] { parse_flat("R"); }).kind() == errc::malformed_token);
}

TEST_CASE("flat canonical form quotients rotation and naming") {
  CHECK(serialize_flat(canonicalize_flat(parse_flat("2R1R2L1L"))) == "1R2R1L2L");
  auto rng = make_rng(113);
  for (int i = 0; i < 60; ++i) {
    FlatCode f = flatten(random_diagram(rng, 7));
    FlatCode canon = canonicalize_flat(f);
    CHECK(canonicalize_flat(canon) == canon);
    CHECK(canonicalize_flat(rotated_flat(f, rng() % f.size())) == canon);
    FlatCode renamed = f;
    for (FlatPass& p : renamed.word) p.crossing_id = p.crossing_id * 7 + 3;
    CHECK(canonicalize_flat(renamed) == canon);
  }
}

TEST_CASE("lifts realize the flat word and agree on the dwrithes") {
  FlatCode f = flat_two_one();
  CHECK(serialize(lift_flat(f, 0)) == "O1+O2+U1+U2+");
  CHECK(serialize(lift_flat(f, 1)) == "U1-O2+O1-U2+");

  auto rng = make_rng(127);
  for (int i = 0; i < 30; ++i) {
    Diagram d = random_diagram(rng, 6);
    FlatCode f2 = flatten(d);
    const std::uint64_t lifts = 1ull << d.crossing_count();
    for (std::uint64_t bits = 0; bits < lifts; ++bits) {
      Diagram lifted(lift_flat(f2, bits));
      CHECK(flatten(lifted) == f2);
      for (long long n = 1; n <= 3; ++n)
        CHECK(n_dwrithe(lifted, n) == flat_cheng_dwrithe(f2, n));
    }
    // The original diagram is itself one of the lifts.
    for (long long n = 1; n <= 3; ++n)
      CHECK(n_dwrithe(d, n) == flat_cheng_dwrithe(f2, n));
  }

  CHECK(flat_index_bound(flat_two_one()) == 1);
}

TEST_CASE("flat kink and bigon sites") {
  FlatCode kink = parse_flat("1R1L");
  CHECK(flat_r1_applicable(kink, FlatR1Site{0, 1}));
  CHECK(flat_r1_applicable(kink, FlatR1Site{1, 1}));
  CHECK(apply_flat_move(kink, FlatMove{FlatR1Site{0, 1}}).empty());

  FlatCode f = flat_two_one(); // 1R2R1L2L
  SECTION("only the opposite-handed pairing is removable") {
    CHECK(flat_r2_applicable(f, FlatR2Site{1, 3, 2, 1}));
    CHECK_FALSE(flat_r2_applicable(f, FlatR2Site{0, 2, 1, 2}));
    CHECK(apply_flat_move(f, FlatMove{FlatR2Site{1, 3, 2, 1}}).empty());
  }
  SECTION("enumeration finds exactly that one move") {
    std::vector<FlatMove> moves = enumerate_flat_moves(f);
    REQUIRE(moves.size() == 1);
    const auto* s = std::get_if<FlatR2Site>(&moves[0]);
    REQUIRE(s != nullptr);
    CHECK(s->pos_a == 1);
    CHECK(s->pos_b == 3);
  }
}

TEST_CASE("flat triangle slide checks all eight lifts") {
  FlatCode f = flatten(Diagram(parse("O1+O2+U1+O3+U2+U3+")));
  CHECK(serialize_flat(f) == "1R2R1L3R2L3L");
  FlatR3Site s{{0, 2, 4}};
  REQUIRE(flat_r3_applicable(f, s));

  SECTION("the flat slide matches the classical slide after flattening") {
    FlatCode moved = apply_flat_move(f, FlatMove{s});
    Diagram classical(parse("O1+O2+U1+O3+U2+U3+"));
    Diagram slid = apply_move(classical, MoveSite{R3Site{{0, 2, 4}}});
    CHECK(moved == flatten(slid));
  }
  SECTION("the slide is an involution and preserves the dwrithe") {
    FlatCode moved = apply_flat_move(f, FlatMove{s});
    CHECK(apply_flat_move(moved, FlatMove{s}) == f);
    for (long long n = 1; n <= 2; ++n)
      CHECK(flat_cheng_dwrithe(moved, n) == flat_cheng_dwrithe(f, n));
  }
  SECTION("a word with no admissible lift is rejected") {
    // All eight over/under completions of this word fail the planar
    // triangle criterion at these sides.
    FlatCode g = parse_flat("1R2R3R1L2L3L");
    CHECK_FALSE(flat_r3_applicable(g, FlatR3Site{{0, 2, 4}}));
  }
  SECTION("degenerate sides are rejected") {
    CHECK_FALSE(flat_r3_applicable(f, FlatR3Site{{0, 1, 3}}));
    CHECK_FALSE(flat_r3_applicable(f, FlatR3Site{{0, 0, 4}}));
    CHECK_FALSE(flat_r3_applicable(f, FlatR3Site{{0, 2, 11}}));
  }
}

TEST_CASE("flat moves preserve the dwrithes") {
  auto rng = make_rng(131);
  for (int i = 0; i < 40; ++i) {
    FlatCode f = flatten(random_diagram(rng, 6));
    for (const FlatMove& m : enumerate_flat_moves(f)) {
      FlatCode moved = apply_flat_move(f, m);
      for (long long n = 1; n <= 3; ++n) {
        long long lhs = moved.empty() ? 0 : flat_cheng_dwrithe(moved, n);
        CHECK(lhs == flat_cheng_dwrithe(f, n));
      }
    }
  }
}

TEST_CASE("flat insertion helpers build removable sites") {
  FlatCode empty;
  FlatCode kink = flat_r1_insert(empty, 0, Handedness::RightToLeft);
  CHECK(serialize_flat(kink) == "1R1L");
  CHECK(apply_flat_move(kink, FlatMove{FlatR1Site{0, 1}}).empty());

  FlatCode bigon = flat_r2_insert(empty, 0, 0, true, Handedness::RightToLeft);
  CHECK(serialize_flat(bigon) == "1R2L1L2R");
  CHECK(apply_flat_move(bigon, FlatMove{FlatR2Site{0, 2, 1, 2}}).empty());

  auto rng = make_rng(137);
  for (int i = 0; i < 40; ++i) {
    FlatCode f = flatten(random_diagram(rng, 5, true));
    const std::size_t gaps = f.empty() ? 1 : f.size();
    Handedness h = (rng() & 1) ? Handedness::RightToLeft : Handedness::LeftToRight;
    FlatCode grown = flat_r2_insert(f, rng() % gaps, rng() % gaps,
                                    (rng() & 1) != 0, h, (rng() & 1) != 0);
    REQUIRE_NOTHROW(validate_flat(grown));
    bool undone = false;
    for (const FlatMove& m : enumerate_flat_moves(grown)) {
      const auto* rem = std::get_if<FlatR2Site>(&m);
      if (!rem) continue;
      if (apply_flat_move(grown, m) == f) {
        undone = true;
        break;
      }
    }
    CHECK(undone);
  }
}

TEST_CASE("stale flat sites are rejected") {
  FlatCode kink = parse_flat("1R1L");
  CHECK(expect_error([&] {
          apply_flat_move(kink, FlatMove{FlatR1Site{0, 2}});
        }).kind() == errc::stale_site);
  CHECK(expect_error([&] {
          apply_flat_move(kink, FlatMove{FlatR2Site{0, 1, 1, 2}});
        }).kind() == errc::stale_site);
  CHECK(expect_error([&] {
          apply_flat_move(kink, FlatMove{FlatR3Site{{0, 1, 2}}});
        }).kind() == errc::stale_site);
}

TEST_CASE("the search resolves the flat two-crossing word in one step") {
  FlatVerdict v = is_flat_trivial(flat_two_one());
  CHECK(v.status == FlatStatus::Trivial);
  REQUIRE(v.trace.size() == 1);
  CHECK(v.budget_used == 1);
  CHECK_FALSE(v.certificate.has_value());
  CHECK(replay_flat_trace(flat_two_one(), v.trace));
}

TEST_CASE("search results on pinned words") {
  SECTION("the empty word is trivially trivial") {
    FlatVerdict v = is_flat_trivial(FlatCode{});
    CHECK(v.status == FlatStatus::Trivial);
    CHECK(v.trace.empty());
    CHECK(v.budget_used == 0);
    CHECK(replay_flat_trace(FlatCode{}, v.trace));
  }
  SECTION("same-sense kink chain collapses through its wrap-around bigon") {
    // 1R1L2R2L: besides the two monogons, the cyclic pairs (1L,2R) and
    // (2L,1R) form a bigon, so a single removal reaches the empty word.
    FlatCode f = flatten(Diagram(parse("O1+U1+O2+U2+")));
    FlatVerdict v = is_flat_trivial(f);
    CHECK(v.status == FlatStatus::Trivial);
    CHECK(v.trace.size() == 1);
    CHECK(replay_flat_trace(f, v.trace));
  }
  SECTION("opposite-sense kink chain needs two removals") {
    // 1R1L2L2R has no bigon: the cross-crossing adjacent pairs agree in
    // handedness, so only the two monogons are removable.
    FlatCode f = flatten(Diagram(parse("O1+U1+U2+O2+")));
    FlatVerdict v = is_flat_trivial(f);
    CHECK(v.status == FlatStatus::Trivial);
    CHECK(v.trace.size() == 2);
    CHECK(replay_flat_trace(f, v.trace));
  }
  SECTION("a removable pairing hidden behind a bigon") {
    FlatCode f = parse_flat("1R2R3R1L2L3L");
    FlatVerdict v = is_flat_trivial(f);
    CHECK(v.status == FlatStatus::Trivial);
    CHECK(replay_flat_trace(f, v.trace));
  }
  SECTION("zero budget without a certificate is unknown") {
    FlatVerdict v = is_flat_trivial(flat_two_one(), 0);
    CHECK(v.status == FlatStatus::Unknown);
    CHECK(v.budget_used == 0);
    CHECK(v.trace.empty());
  }
}

TEST_CASE("a nonzero dwrithe certifies nontriviality before any search") {
  auto rng = make_rng(101);
  bool found = false;
  for (int i = 0; i < 500 && !found; ++i) {
    Diagram d = random_diagram(rng, 6);
    FlatCode f = flatten(d);
    long long witness_n = 0;
    long long witness_v = 0;
    const int bound = flat_index_bound(f);
    for (long long n = 1; n <= bound && witness_n == 0; ++n) {
      long long v = flat_cheng_dwrithe(f, n);
      if (v != 0) {
        witness_n = n;
        witness_v = v;
      }
    }
    if (witness_n == 0) continue;
    found = true;
    INFO("word " << serialize_flat(f));
    FlatVerdict v = is_flat_trivial(f, 0); // certificate needs no budget
    CHECK(v.status == FlatStatus::NontrivialCertified);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->n == witness_n);
    CHECK(v.certificate->dwrithe == witness_v);
    CHECK(v.budget_used == 0);
    CHECK(v.trace.empty());
  }
  REQUIRE(found);
}

TEST_CASE("exhausting the move cone is reported distinctly from the budget") {
  REQUIRE(exhaustion_witness().has_value());
  const FlatCode& f = *exhaustion_witness();
  FlatSearchOutcome o = flat_search(f, 3000);
  CHECK(o.verdict.status == FlatStatus::Unknown);
  CHECK(o.verdict.budget_used < 3000); // every reachable word was expanded
  CHECK_FALSE(o.verdict.certificate.has_value());
  CHECK(o.visited.count(serialize_flat(canonicalize_flat(f))) == 1);
  CHECK(o.visited.count(std::string{}) == 0);

  FlatVerdict tight = is_flat_trivial(f, 1);
  CHECK(tight.status == FlatStatus::Unknown);
  CHECK(tight.budget_used == 1); // cut off by the budget instead
}

TEST_CASE("search visits are sound equivalence witnesses") {
  FlatSearchOutcome o = flat_search(flat_two_one());
  CHECK(o.verdict.status == FlatStatus::Trivial);
  CHECK(o.visited.count(serialize_flat(canonicalize_flat(flat_two_one()))) == 1);
  CHECK(o.visited.count(std::string{}) == 1);
}

TEST_CASE("total flat triviality of the two-crossing virtual knot") {
  Diagram d(parse("O1+O2+U1+U2+"));
  TftReport r = is_totally_flat_trivial(d);
  CHECK(r.status == TftStatus::Trivial);
  CHECK(r.base.status == FlatStatus::Trivial);
  REQUIRE(r.smoothings.size() == 2);
  for (const auto& [id, v] : r.smoothings) {
    CHECK(v.status == FlatStatus::Trivial);
    FlatCode start = flatten(smooth_against_orientation(d, id).result);
    CHECK(replay_flat_trace(start, v.trace));
  }
  CHECK(replay_flat_trace(flatten(d), r.base.trace));
}

TEST_CASE("total flat triviality propagates certificates and unknowns") {
  SECTION("a certified base makes the whole report nontrivial") {
    auto rng = make_rng(101);
    for (int i = 0; i < 500; ++i) {
      Diagram d = random_diagram(rng, 6);
      FlatCode f = flatten(d);
      bool certified = false;
      for (long long n = 1; n <= flat_index_bound(f) && !certified; ++n)
        certified = flat_cheng_dwrithe(f, n) != 0;
      if (!certified) continue;
      TftReport r = is_totally_flat_trivial(d);
      CHECK(r.status == TftStatus::Nontrivial);
      return;
    }
    FAIL("no certified diagram found in the seeded stream");
  }
  SECTION("an unresolved base without certificates yields unknown") {
    REQUIRE(exhaustion_witness().has_value());
    Diagram d(lift_flat(*exhaustion_witness()));
    TftReport r = is_totally_flat_trivial(d, 3000);
    CHECK(r.base.status == FlatStatus::Unknown);
    CHECK(r.status != TftStatus::Trivial);
  }
}

TEST_CASE("verdict and report JSON shapes") {
  FlatVerdict v = is_flat_trivial(flat_two_one());
  nlohmann::ordered_json j = flat_verdict_json(v);
  CHECK(j["status"] == "trivial");
  CHECK(j["certificate"].is_null());
  REQUIRE(j["trace"].size() == 1);
  CHECK(j["trace"][0]["move"]["kind"] == "r2_remove");
  CHECK(j["trace"][0]["before"].is_string());
  CHECK(j["trace"][0]["after"] == "");

  TftReport r = is_totally_flat_trivial(Diagram(parse("O1+O2+U1+U2+")));
  nlohmann::ordered_json tj = tft_json(r);
  CHECK(tj["status"] == "trivial");
  CHECK(tj["base"]["status"] == "trivial");
  REQUIRE(tj["smoothings"].size() == 2);
  CHECK(tj["smoothings"][0]["crossing"] == 1);
  CHECK(tj["smoothings"][0]["verdict"]["status"] == "trivial");
}
