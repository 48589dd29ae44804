#include <doctest.h>

#include <sstream>

#include "pancake/text_format.hpp"
#include "test_util.hpp"

using namespace pancake;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("stacks") {
  const SignedPerm s = parse_stack("[-2, 3 1]");
  CHECK(s == SignedPerm(std::vector<int>{-2, 3, 1}));
  CHECK(format_stack(s) == "[-2 3 1]");
  CHECK(parse_stack(format_stack(s)) == s);
  CHECK(kind_of([] { parse_stack("[1 1]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_stack("[1 2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_stack("[1 2] x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_stack("1 2"); }) == ErrorKind::ParseError);
}

TEST_CASE("sequences") {
  const FlipSequence w = parse_sequence("(3 2)^3");
  CHECK(w.n() == 3);
  CHECK(w.length() == 6);
  CHECK(format_sequence(w) == "(3 2 3 2 3 2)");
  CHECK(parse_sequence("(3,2,3,2,3,2)") == w);
  CHECK(parse_sequence("n=3 (3 2)^3") == w);
  const FlipSequence x = parse_sequence("n=5 (2 4)");
  CHECK(x.n() == 5);
  CHECK(format_sequence(x) == "n=5 (2 4)");
  CHECK(parse_sequence(format_sequence(x)) == x);
  CHECK(parse_sequence("n=4 ()").empty());
  CHECK(kind_of([] { parse_sequence("()"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_sequence("(3 4)"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_sequence("(3 0)"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_sequence("(3 2)^0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_sequence("(3 2"); }) == ErrorKind::ParseError);
}

TEST_CASE("round trip over the corpus") {
  for (const auto& e : test::corpus()) {
    const std::string line = format_sequence_line(e.seq, e.claims);
    const SequenceEntry back = parse_sequence_line(line);
    CHECK(back.seq == e.seq);
    CHECK(format_sequence_line(back.seq, back.claims) == line);
  }
}

TEST_CASE("sequence lines and files") {
  const SequenceEntry e = parse_sequence_line("(3 2)^3 : OddFortuitous !Double  # comment");
  REQUIRE(e.claims.size() == 2);
  CHECK(e.claims[0].cls == SeqClass::OddFortuitous);
  CHECK(e.claims[0].expected);
  CHECK(e.claims[1].cls == SeqClass::Double);
  CHECK_FALSE(e.claims[1].expected);
  CHECK(format_sequence_line(e.seq, e.claims) == "(3 2 3 2 3 2) : OddFortuitous !Double");
  CHECK(kind_of([] { parse_sequence_line("(3 2)^3 : Bogus"); }) == ErrorKind::ParseError);

  std::istringstream good("# header\n\n(2 1)^2\n  (3 2)^3 : Triple\n");
  const auto entries = parse_sequence_file(good, "good.txt");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].line == 3);
  CHECK(entries[1].line == 4);

  std::istringstream bad("(2 1)^2\n# ok\n(3 5)\n");
  try {
    parse_sequence_file(bad, "bad.txt");
    FAIL("expected ParseError");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ParseError);
    CHECK(std::string(err.what()).rfind("bad.txt:3: ", 0) == 0);
  }
}
