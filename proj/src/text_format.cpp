#include "pancake/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace pancake {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == ','))
      ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  bool peek(char c) {
    skip_space();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) parse_error(std::string("expected '") + c + "' at column " + std::to_string(i_ + 1));
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (s_.substr(i_, w.size()) != w) return false;
    i_ += w.size();
    return true;
  }
  bool at_number() {
    skip_space();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  }
  int number() {
    skip_space();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '+') start = ++i_;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + s_.size(), v);
    if (ec != std::errc{} || ptr == s_.data() + start)
      parse_error("expected an integer at column " + std::to_string(start + 1));
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  std::string_view rest() const { return s_.substr(i_); }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

FlipSequence parse_sequence_cursor(Cursor& c) {
  int n = 0;
  if (c.accept_word("n=") || c.accept_word("n =")) {
    n = c.number();
    if (n < 1) parse_error("n must be positive");
  }
  c.expect('(');
  std::vector<int> flips;
  while (c.at_number()) flips.push_back(c.number());
  c.expect(')');
  int times = 1;
  if (c.accept('^')) {
    times = c.number();
    if (times < 1) parse_error("exponent must be positive");
  }
  if (n == 0) {
    if (flips.empty()) parse_error("empty sequence needs an explicit n=");
    n = flips.front();
  }
  std::vector<int> all;
  all.reserve(flips.size() * static_cast<std::size_t>(times));
  for (int t = 0; t < times; ++t) all.insert(all.end(), flips.begin(), flips.end());
  try {
    return FlipSequence(n, std::move(all));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

}  // namespace

SignedPerm parse_stack(std::string_view text) {
  Cursor c(text);
  c.expect('[');
  std::vector<int> v;
  while (c.at_number()) v.push_back(c.number());
  c.expect(']');
  if (!c.done()) parse_error("trailing text after stack");
  try {
    return SignedPerm(std::move(v));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

FlipSequence parse_sequence(std::string_view text) {
  Cursor c(text);
  FlipSequence w = parse_sequence_cursor(c);
  if (!c.done()) parse_error("trailing text after sequence");
  return w;
}

std::string format_flips(std::span<const int> flips) {
  std::string out = "(";
  for (std::size_t i = 0; i < flips.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(flips[i]);
  }
  return out + ")";
}

std::string format_stack(const SignedPerm& s) {
  std::string out = "[";
  for (int i = 1; i <= s.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(s.at(i));
  }
  return out + "]";
}

std::string format_sequence(const FlipSequence& w) {
  std::string out;
  if (w.empty() || w[0] != w.n()) out = "n=" + std::to_string(w.n()) + " ";
  return out + format_flips(w.flips());
}

SequenceEntry parse_sequence_line(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto colon = line.find(':');
  SequenceEntry e;
  e.seq = parse_sequence(line.substr(0, colon));
  if (colon == std::string_view::npos) return e;
  std::istringstream claims{std::string(line.substr(colon + 1))};
  std::string tok;
  while (claims >> tok) {
    bool expected = true;
    std::string_view name = tok;
    if (name.front() == '!') {
      expected = false;
      name.remove_prefix(1);
    }
    const auto cls = parse_seq_class(name);
    if (!cls) parse_error("unknown class '" + std::string(name) + "'");
    e.claims.push_back({*cls, expected});
  }
  return e;
}

std::string format_sequence_line(const FlipSequence& w, const std::vector<Claim>& claims) {
  std::string out = format_sequence(w);
  if (claims.empty()) return out;
  out += " :";
  for (const Claim& c : claims) {
    out += ' ';
    if (!c.expected) out += '!';
    out += to_string(c.cls);
  }
  return out;
}

std::vector<SequenceEntry> parse_sequence_file(std::istream& in, std::string_view source) {
  std::vector<SequenceEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      SequenceEntry e = parse_sequence_line(line);
      e.line = lineno;
      out.push_back(std::move(e));
    } catch (const Error& e) {
      parse_error(std::string(source) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace pancake
