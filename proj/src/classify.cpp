#include "pancake/classify.hpp"

#include <algorithm>
#include <array>

#include "pancake/potential.hpp"

namespace pancake {

namespace {

constexpr std::array<std::pair<SeqClass, std::string_view>, 7> kClassNames{{
    {SeqClass::Sorting, "Sorting"},
    {SeqClass::OddFortuitous, "OddFortuitous"},
    {SeqClass::GeneralizedOddFortuitous, "GeneralizedOddFortuitous"},
    {SeqClass::EvenFortuitous, "EvenFortuitous"},
    {SeqClass::Palindromic, "Palindromic"},
    {SeqClass::Triple, "Triple"},
    {SeqClass::Double, "Double"},
}};

bool is_power(const FlipSequence& seq, std::size_t times) {
  const std::size_t len = seq.length();
  if (len == 0 || len % times != 0) return false;
  const std::size_t part = len / times;
  for (std::size_t i = part; i < len; ++i)
    if (seq[i] != seq[i - part]) return false;
  return true;
}

}  // namespace

std::string_view to_string(SeqClass c) {
  for (const auto& [cls, name] : kClassNames)
    if (cls == c) return name;
  return "Unknown";
}

std::optional<SeqClass> parse_seq_class(std::string_view name) {
  for (const auto& [cls, text] : kClassNames)
    if (text == name) return cls;
  return std::nullopt;
}

bool verify_sorts(const FlipSequence& seq) { return sorts(seq); }

std::optional<int> palindromic_center(const FlipSequence& seq) {
  const std::size_t len = seq.length();
  if (len < 4 || len % 2 != 0 || seq[0] != seq.n()) return std::nullopt;
  const std::size_t half = len / 2;
  for (std::size_t i = 1; i < half; ++i)
    if (seq[i] != seq[len - i]) return std::nullopt;
  if (!sorts(seq)) return std::nullopt;
  return seq[half];
}

std::optional<CentralFlip> central_flip_check(const FlipSequence& seq) {
  const auto c = palindromic_center(seq);
  if (!c) return std::nullopt;
  const int n = seq.n();
  return CentralFlip{*c, n % 2 == 1 ? *c == n - 1 : *c == n};
}

Certificate classify(const FlipSequence& seq) {
  Certificate cert;
  cert.n = seq.n();
  cert.length = static_cast<int>(seq.length());
  cert.bound = cert.n >= 2 ? lower_bound(cert.n) : 0;
  cert.sorts = sorts(seq);
  if (!cert.sorts) {
    cert.failures.push_back("does not sort -I");
    return cert;
  }
  cert.classes.insert(SeqClass::Sorting);
  const int n = cert.n;
  if (n < 2) return cert;
  if (cert.length != cert.bound)
    cert.failures.push_back("length " + std::to_string(cert.length) + " differs from bound " +
                            std::to_string(cert.bound));

  if (seq[0] != n) {
    cert.failures.push_back("first flip is not n");
    return cert;
  }

  int separators = 0;
  for (int k : seq.flips()) {
    if (k == n) {
      ++separators;
      cert.phases.emplace_back();
    } else {
      cert.phases.back().push_back(k);
    }
  }

  if (separators >= 2) {
    try {
      cert.checkpoint = checkpoint_of(seq);
    } catch (const Error& e) {
      cert.failures.push_back(std::string("checkpoint: ") + e.what());
    }
  } else {
    cert.failures.push_back("fewer than two flips n");
  }
  const auto kind = cert.checkpoint ? std::optional(cert.checkpoint->kind) : std::nullopt;
  const bool at_bound = cert.length == cert.bound;

  if (n % 2 == 1) {
    if (separators == 3) {
      const std::size_t third = static_cast<std::size_t>((n - 1) / 2);
      bool strict = true;
      for (const auto& ph : cert.phases) {
        if (ph.size() != third) strict = false;
        for (int k : ph)
          if (k % 2 != 0) strict = false;
      }
      if (strict) cert.classes.insert(SeqClass::OddFortuitous);
      const bool patchwork =
          kind == CheckpointKind::TwoClanStack || kind == CheckpointKind::OddPatchwork;
      if (at_bound && patchwork) cert.classes.insert(SeqClass::GeneralizedOddFortuitous);
      if (strict && !cert.has(SeqClass::GeneralizedOddFortuitous))
        cert.failures.push_back("strict odd shape without a patchwork checkpoint");
      if (!strict && !patchwork) cert.failures.push_back("checkpoint is not an odd patchwork");
    } else {
      cert.failures.push_back("odd n needs exactly three flips n, found " +
                              std::to_string(separators));
    }
    if (is_power(seq, 3) && (cert.has(SeqClass::OddFortuitous) ||
                             cert.has(SeqClass::GeneralizedOddFortuitous)))
      cert.classes.insert(SeqClass::Triple);
  } else {
    if (separators == 2 && at_bound && kind == CheckpointKind::EvenPatchwork)
      cert.classes.insert(SeqClass::EvenFortuitous);
    else if (separators != 2)
      cert.failures.push_back("even n needs exactly two flips n, found " +
                              std::to_string(separators));
    else if (kind != CheckpointKind::EvenPatchwork)
      cert.failures.push_back("checkpoint is not an even patchwork");
    if (is_power(seq, 2) && cert.has(SeqClass::EvenFortuitous))
      cert.classes.insert(SeqClass::Double);
  }

  if (const auto c = palindromic_center(seq)) {
    cert.classes.insert(SeqClass::Palindromic);
    cert.central_flip = *c;
  }
  return cert;
}

}  // namespace pancake
