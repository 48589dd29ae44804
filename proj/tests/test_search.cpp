#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pancake/canonical.hpp"
#include "pancake/classify.hpp"
#include "pancake/patterns.hpp"
#include "pancake/search.hpp"
#include "test_util.hpp"

using namespace pancake;
using pancake::test::S;

namespace {

std::set<FlipSequence> as_set(const std::vector<FlipSequence>& v) { return {v.begin(), v.end()}; }

bool contains(const SearchResult& r, const FlipSequence& seq) {
  return std::find(r.sequences.begin(), r.sequences.end(), seq) != r.sequences.end();
}

bool contains_rotation(const SearchResult& r, const FlipSequence& seq) {
  for (const auto& s : r.sequences)
    for (std::size_t k = 0; k < s.length(); ++k)
      if (rotate_seq(s, k) == seq) return true;
  return false;
}

std::vector<std::vector<int>> phases_of(const FlipSequence& seq) {
  std::vector<std::vector<int>> out;
  for (int k : seq.flips()) {
    if (k == seq.n())
      out.emplace_back();
    else
      out.back().push_back(k);
  }
  return out;
}

FlipSequence join(int n, const std::vector<std::vector<int>>& phases) {
  std::vector<int> flips;
  for (const auto& ph : phases) {
    flips.push_back(n);
    flips.insert(flips.end(), ph.begin(), ph.end());
  }
  return FlipSequence(n, flips);
}

std::vector<int> rev(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// n s~1 n s~3 n s~2 (odd) or n s~1 n s~2 (even)
FlipSequence mirror(const FlipSequence& seq) {
  const auto p = phases_of(seq);
  if (p.size() == 3) return join(seq.n(), {rev(p[0]), rev(p[2]), rev(p[1])});
  return join(seq.n(), {rev(p[0]), rev(p[1])});
}

// a rotation of seq or of its mirror
bool contains_variant(const SearchResult& r, const FlipSequence& seq) {
  return contains_rotation(r, seq) || contains_rotation(r, mirror(seq));
}

FlipSequence corpus_entry(int n, const char* prefix) {
  for (const auto& e : test::corpus())
    if (e.seq.n() == n && format_sequence(e.seq).rfind(prefix, 0) == 0) return e.seq;
  throw std::runtime_error("missing corpus entry");
}

// Independent oracle for the palindromic search: every s1 of (n-1)/2 even
// flips below n from -f_n, kept when the sequence it determines is strict
// odd fortuitous with s1 = w (n-1) w~.
std::set<FlipSequence> naive_palindromic(int n) {
  const int m = (n - 1) / 2;
  const int choices = (n - 1) / 2;  // flips 2, 4, ..., n-1
  std::set<FlipSequence> out;
  std::vector<int> digits(m, 0);
  for (;;) {
    std::vector<int> s1(m);
    for (int i = 0; i < m; ++i) s1[i] = 2 * (digits[i] + 1);
    const bool palindrome = std::equal(s1.begin(), s1.end(), s1.rbegin()) && s1[m / 2] == n - 1;
    if (palindrome) {
      std::vector<int> prefix{n};
      prefix.insert(prefix.end(), s1.begin(), s1.end());
      const SignedPerm cp = apply_sequence(SignedPerm::minus_identity(n), FlipSequence(n, prefix));
      if (checkpoint_kind(cp) == CheckpointKind::TwoClanStack) {
        try {
          const FlipSequence seq = extract(cp);
          if (classify(seq).has(SeqClass::OddFortuitous)) out.insert(seq);
        } catch (const Error&) {
        }
      }
    }
    int i = 0;
    while (i < m && ++digits[i] == choices) digits[i++] = 0;
    if (i == m) break;
  }
  return out;
}

// Every checkpoint with 2-pieces over 1 (and -n on top for even n),
// extracted; the values of each piece are forced to {2m, 2m+1}.
std::set<FlipSequence> brute_force_patchwork(int n) {
  const bool odd = n % 2 == 1;
  const int pieces = odd ? (n - 1) / 2 : n / 2 - 1;
  std::vector<int> order(pieces);
  std::iota(order.begin(), order.end(), 0);
  std::set<FlipSequence> out;
  do {
    for (int mask = 0; mask < (1 << (2 * pieces)); ++mask) {
      std::vector<int> s;
      if (!odd) s.push_back(-n);
      for (int p = 0; p < pieces; ++p) {
        const int lo = 2 * order[p] + 2;
        const int bits = (mask >> (2 * p)) & 3;
        const int a = bits & 1 ? lo + 1 : lo;
        const int b = bits & 1 ? lo : lo + 1;
        const int sign = bits & 2 ? -1 : 1;
        s.push_back(sign * a);
        s.push_back(sign * b);
      }
      s.push_back(1);
      const SignedPerm cp(s);
      if (!checkpoint_kind(cp)) continue;
      try {
        const FlipSequence seq = extract(cp);
        const Certificate c = classify(seq);
        if (c.has(SeqClass::GeneralizedOddFortuitous) || c.has(SeqClass::EvenFortuitous)) out.insert(seq);
      } catch (const Error&) {
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace

TEST_CASE("partial permutation journal") {
  PartialPerm pp(4);
  CHECK(pp.set(2, -3));
  CHECK(pp.f(-2) == 3);
  CHECK(pp.inv(-3) == 2);
  CHECK(pp.inv(3) == -2);
  const auto m = pp.mark();
  CHECK(pp.set(1, 1));
  CHECK_FALSE(pp.set(4, 1));
  CHECK_FALSE(pp.set(1, 2));
  CHECK(pp.set(1, 1));
  pp.undo(m);
  CHECK(pp.f(1) == 0);
  CHECK(pp.f(2) == -3);
  CHECK(pp.assigned() == 1);
  CHECK(sign_rule(2) == 1);
  CHECK(sign_rule(3) == -1);
  CHECK(sign_rule(-3) == 1);
  CHECK(sign_rule(-4) == -1);
}

TEST_CASE("palindromic search counts") {
  CHECK(search_palindromic_odd(3).sequences == std::vector<FlipSequence>{S("(3 2)^3")});
  CHECK(search_palindromic_odd(15).sequences == std::vector<FlipSequence>{S("(15 10 4 6 14 6 4 10)^3")});
  CHECK(search_palindromic_odd(23).sequences.size() == 4);
  const SearchResult r27 = search_palindromic_odd(27);
  CHECK(r27.sequences.size() == 5);
  const FlipSequence w27 = corpus_entry(27, "(27 22 16 10");
  bool found = false;
  for (const auto& s : r27.sequences) found = found || listing_order(s, PatternFamily::Odd3Mod4) == w27;
  CHECK(found);
  for (const auto& s : r27.sequences) {
    const Certificate c = classify(s);
    CHECK(c.has(SeqClass::OddFortuitous));
    CHECK(is_sorted(r27.sequences.begin(), r27.sequences.end()));
  }
  CHECK_THROWS_AS(search_palindromic_odd(5), Error);
  CHECK_THROWS_AS(search_palindromic_odd(17), Error);
}

TEST_CASE("palindromic search agrees with naive enumeration") {
  for (int n : {3, 7, 11, 15}) {
    CAPTURE(n);
    CHECK(as_set(search_palindromic_odd(n).sequences) == naive_palindromic(n));
  }
}

TEST_CASE("palindromic result sets are closed under reversal of phases") {
  for (int n : {23, 27}) {
    const auto set = as_set(search_palindromic_odd(n).sequences);
    for (const auto& s : set) CHECK(set.count(mirror(s)) == 1);
  }
}

TEST_CASE("triple search") {
  CHECK(contains(search_triple(3), S("(3 2)^3")));
  CHECK(search_triple(15).sequences == std::vector<FlipSequence>{S("(15 10 4 6 14 6 4 10)^3")});
  for (const char* listed : {"(29 16 4 26 6 20 4 16 24 6 14 28 12 4 24)^3",
                             "(31 18 8 28 6 18 4 14 8 4 22 6 24 30 4 16)^3",
                             "(33 18 8 30 8 2 20 4 14 8 4 24 8 26 32 4 18)^3"}) {
    const FlipSequence seq = S(listed);
    const SearchResult r = search_triple(seq.n());
    CHECK(r.complete);
    CHECK(contains_rotation(r, seq));
    const auto set = as_set(r.sequences);
    for (const auto& s : set) {
      CHECK(classify(s).has(SeqClass::Triple));
      CHECK(set.count(mirror(s)) == 1);
    }
  }
  CHECK_THROWS_AS(search_triple(16), Error);
}

TEST_CASE("palindromic triple search") {
  CHECK(search_triple(39, kPalCenterN).sequences.size() == 5);
  for (const auto& e : test::corpus()) {
    const Certificate c = classify(e.seq);
    if (!c.has(SeqClass::Triple) || !c.has(SeqClass::Palindromic) || e.seq.n() < 35) continue;
    CAPTURE(e.line);
    const SearchResult r = search_triple(e.seq.n(), kPalCenterN);
    CHECK(contains_rotation(r, e.seq));
    for (const auto& s : r.sequences) CHECK(classify(s).has(SeqClass::Palindromic));
  }
}

TEST_CASE("patchwork search matches brute force for small n") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(as_set(search_patchwork(n).sequences) == brute_force_patchwork(n));
  }
  CHECK(search_patchwork(2).sequences == std::vector<FlipSequence>{S("(2 1)^2")});
  CHECK(search_patchwork(3).sequences == std::vector<FlipSequence>{S("(3 2)^3")});
}

TEST_CASE("patchwork search: odd sizes") {
  CHECK(search_patchwork(15).sequences == std::vector<FlipSequence>{S("(15 10 4 6 14 6 4 10)^3")});
  const SearchResult r19 = search_patchwork(19);
  REQUIRE(!r19.sequences.empty());
  for (const auto& s : r19.sequences) {
    const Certificate c = classify(s);
    CHECK(c.has(SeqClass::GeneralizedOddFortuitous));
    CHECK_FALSE(c.has(SeqClass::OddFortuitous));
  }
  CHECK(contains(r19, generate(19)));
}

TEST_CASE("patchwork search with symmetry") {
  const SearchResult d30 = search_patchwork(30, kDouble);
  CHECK(contains(d30, S("(30 22 14 7 3 24 7 27 13 15 10 29 15 20 18 5 23 14 20 13 28 3 19)^2")));
  const auto set = as_set(d30.sequences);
  for (const auto& s : set) {
    CHECK(classify(s).has(SeqClass::Double));
    CHECK(set.count(mirror(s)) == 1);
  }
}

TEST_CASE("hint presets find the published sequences") {
  for (int n : {26, 28, 30}) {
    CAPTURE(n);
    CHECK(contains(search_patchwork(n, kNoSymmetry, hint_preset("even-family", n)), generate(n)));
  }
  for (int n : {25, 27, 29, 31, 33}) {
    CAPTURE(n);
    CHECK(contains(search_patchwork(n, kNoSymmetry, hint_preset("generalized-odd", n)), generate(n)));
  }
  for (const auto& e : test::corpus()) {
    const Certificate c = classify(e.seq);
    const int n = e.seq.n();
    CAPTURE(e.line);
    if (c.has(SeqClass::Double) && !c.has(SeqClass::Palindromic) && n >= 30) {
      CHECK(contains(search_patchwork(n, kDouble, hint_preset("double", n)), e.seq));
    } else if (c.has(SeqClass::EvenFortuitous) && c.has(SeqClass::Palindromic) && !c.has(SeqClass::Double)) {
      CHECK(contains_variant(search_patchwork(n, kPalCenterNminus1, hint_preset("pal-n1", n)), e.seq));
    } else if (n >= 34 && n % 2 == 0 && e.seq[0] == n - 1) {
      // second even palindromic family, listed as (n-1 w n-1 w~)
      CHECK(contains_rotation(search_patchwork(n, kPalCenterN, hint_preset("pal-n", n)), e.seq));
    }
  }
  // the triple hints pick one member of each full triple set
  for (int n : {29, 31, 33}) {
    CAPTURE(n);
    SearchConfig cfg;
    cfg.n = n;
    cfg.mode = SearchMode::Triple;
    cfg.hints = hint_preset("triple", n);
    const SearchResult hinted = search(cfg);
    REQUIRE_FALSE(hinted.sequences.empty());
    const auto full = as_set(search_triple(n).sequences);
    for (const auto& seq : hinted.sequences) CHECK(full.count(seq) == 1);
  }
  CHECK_THROWS_AS(hint_preset("nope", 30), Error);
  CHECK_THROWS_AS(hint_preset("double", 32), Error);
}

TEST_CASE("parallel and serial searches agree") {
  std::vector<SearchConfig> cfgs;
  auto add = [&](int n, SearchMode mode, unsigned sym, Emit emit) {
    SearchConfig c;
    c.n = n;
    c.mode = mode;
    c.symmetry = sym;
    c.emit = emit;
    cfgs.push_back(c);
  };
  add(23, SearchMode::PalindromicOdd, kNoSymmetry, Emit::All);
  add(23, SearchMode::PalindromicOdd, kNoSymmetry, Emit::First);
  add(31, SearchMode::Triple, kNoSymmetry, Emit::All);
  add(31, SearchMode::Triple, kNoSymmetry, Emit::First);
  add(43, SearchMode::Triple, kPalCenterN, Emit::All);
  add(19, SearchMode::Patchwork, kNoSymmetry, Emit::All);
  add(19, SearchMode::Patchwork, kNoSymmetry, Emit::First);
  add(30, SearchMode::Patchwork, kDouble, Emit::All);
  add(30, SearchMode::Patchwork, kDouble, Emit::First);
  for (auto cfg : cfgs) {
    CAPTURE(cfg.n);
    const SearchResult serial = search_serial(cfg);
    for (int jobs : {1, 2, 4}) {
      cfg.jobs = jobs;
      const SearchResult par = search(cfg);
      CHECK(par.sequences == serial.sequences);
      CHECK(par.complete);
    }
    if (cfg.emit == Emit::First) CHECK(serial.sequences.size() == 1);
  }
}

TEST_CASE("budget marks results incomplete") {
  SearchConfig cfg;
  cfg.n = 26;
  cfg.budget_seconds = 0.2;
  const SearchResult r = search(cfg);
  CHECK_FALSE(r.complete);
  const SearchResult s = search_serial(cfg);
  CHECK_FALSE(s.complete);
}
