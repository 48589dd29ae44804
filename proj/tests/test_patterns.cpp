#include <doctest.h>

#include <fstream>

#include "pancake/classify.hpp"
#include "pancake/patterns.hpp"
#include "pancake/potential.hpp"
#include "test_util.hpp"

using namespace pancake;
using pancake::test::P;
using pancake::test::S;

namespace {

std::vector<std::string> listings() {
  std::ifstream in(std::string(PANCAKE_TEST_DATA) + "/pattern_listings.txt");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

bool fortuitous(const Certificate& c) {
  return c.has(SeqClass::GeneralizedOddFortuitous) || c.has(SeqClass::EvenFortuitous);
}

}  // namespace

TEST_CASE("families and domains") {
  CHECK(family_of(15) == PatternFamily::Odd3Mod4);
  CHECK(family_of(23) == PatternFamily::Odd3Mod4);
  CHECK(family_of(25) == PatternFamily::Odd1Mod4);
  CHECK(family_of(26) == PatternFamily::Even);
  for (int n : {1, 2, 3, 11, 13, 14, 17, 21, 24})
    CHECK_FALSE(family_of(n).has_value());
  for (int n : {13, 17, 21, 24}) {
    try {
      pattern_stack(n);
      FAIL("expected UnsupportedN");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedN);
    }
  }
}

TEST_CASE("checkpoint templates") {
  CHECK(pattern_stack(25) ==
        P("[-8 -9 22 23 18 19 -12 -13 -2 -3 17 16 5 4 -24 -25 15 14 -20 -21 7 6 -10 -11 1]"));
  CHECK(pattern_stack(15) == P("[-8 -9 -12 -13 -2 -3 -14 -15 5 4 7 6 -10 -11 1]"));
  CHECK(pattern_checkpoint(15).kind == CheckpointKind::TwoClanStack);
  const SignedPerm s28 = pattern_stack(28);
  CHECK(s28 == P("[-28 11 10 -21 -20 -23 -22 -2 -3 -18 -19 13 12 -15 -14 8 9 5 4 -25 -24 26 27 7 6 "
                 "-17 -16 1]"));
  const SignedPerm s26 = pattern_stack(26);
  CHECK(s26 == P("[-26 11 10 -21 -20 -23 -22 -2 -3 -18 -19 13 12 -15 -14 8 9 5 4 24 25 7 6 -17 -16 1]"));
}

TEST_CASE("generate reproduces the published listings") {
  const auto lines = listings();
  CHECK(lines.size() == 17);
  for (const auto& line : lines) {
    const FlipSequence want = parse_sequence(line);
    CAPTURE(line);
    CHECK(format_sequence(generate_listing(want.n())) == line);
  }
}

TEST_CASE("listing order is a rotation of the extraction order") {
  for (int n : {15, 19, 23, 25, 26, 27, 28, 29}) {
    const FlipSequence g = generate(n);
    const FlipSequence l = generate_listing(n);
    bool found = false;
    for (std::size_t k = 0; k < g.length() && !found; ++k) found = rotate_seq(g, k) == l;
    CHECK(found);
    CHECK(sorts(l));
  }
}

TEST_CASE("family totality: templates are checkpoints up to 10^4") {
  int count = 0;
  for (int n = 15; n <= 10000; ++n) {
    const auto fam = family_of(n);
    if (!fam) continue;
    const SignedPerm s = pattern_stack(n);
    const auto kind = checkpoint_kind(s);
    if (!kind || (n % 2 == 0) != (*kind == CheckpointKind::EvenPatchwork)) FAIL_CHECK("n = " << n);
    ++count;
  }
  CHECK(count == 3 + (10000 - 24));
}

TEST_CASE("generate succeeds for every n up to 1000") {
  for (int n : table_sizes(1000)) {
    const FlipSequence g = generate(n);
    if (static_cast<int>(g.length()) != lower_bound(n) || !fortuitous(classify(g)))
      FAIL_CHECK("n = " << n);
  }
}

TEST_CASE("table") {
  CHECK(table_sizes(199).size() == 178);
  const auto rows = table(199);
  REQUIRE(rows.size() == 178);
  for (const auto& r : rows) {
    CHECK(r.verified());
    CHECK(r.certificate.length == lower_bound(r.n));
  }
  const auto serial = table_serial(199);
  REQUIRE(serial.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].sequence == rows[i].sequence);
}

TEST_CASE("table with splicing") {
  const auto rows = table(120, TableOptions{true, 0});
  const auto serial = table_serial(120, true);
  REQUIRE(rows.size() == serial.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRow& r = rows[i];
    CAPTURE(r.n);
    CHECK(r.verified());
    CHECK(r.spliced == serial[i].spliced);
    CHECK(r.splice_note == serial[i].splice_note);
    if (r.n == 35) CHECK(format_sequence(*r.spliced) == format_sequence(S(
        "(35 26 16 10 4 6 18 34 10 8 12 10 14 12 30 6 4 10 35 10 14 18 8 10 30 4 6 34 26 24 30 16 8 "
        "24 20 16 35 26 20 22 30 6 4 26 12 14 10 12 8 10 34 18 16 26)")));
    if (r.n == 52) {
      for (const auto& e : test::corpus())
        if (e.seq.n() == 52) CHECK(*r.spliced == e.seq);
    }
    const bool odd_route = r.n % 2 == 1 && r.n >= 27 && r.n != 29 && r.n != 33;
    const bool even_route = r.n % 2 == 0 && r.n >= 50;
    CHECK(r.spliced.has_value() == (odd_route || even_route));
  }
}
