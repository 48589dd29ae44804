#include "pancake/patterns.hpp"

#include <map>

#include <omp.h>

#include "pancake/compose.hpp"
#include "pancake/potential.hpp"

namespace pancake {

namespace {

std::vector<int> odd3_stack(int n) {
  std::vector<int> f{-8, -9};
  for (int k = (n - 15) / 4 - 1; k >= 0; --k) {
    f.insert(f.end(), {-(15 + 4 * k), -(14 + 4 * k), -(17 + 4 * k), -(16 + 4 * k)});
  }
  f.insert(f.end(), {-12, -13, -2, -3, 1 - n, -n, 5, 4, 7, 6, -10, -11, 1});
  return f;
}

std::vector<int> odd1_stack(int n) {
  const int pairs = (n - 21) / 4;
  std::vector<int> f{-8, -9, n - 3, n - 2, n - 7, n - 6, -12, -13, -2, -3};
  for (int k = pairs - 1; k >= 0; --k) f.insert(f.end(), {17 + 4 * k, 16 + 4 * k});
  f.insert(f.end(), {5, 4, 1 - n, -n});
  for (int k = 0; k < pairs; ++k) f.insert(f.end(), {15 + 4 * k, 14 + 4 * k});
  f.insert(f.end(), {5 - n, 4 - n, 7, 6, -10, -11, 1});
  return f;
}

std::vector<int> even_stack(int n) {
  std::vector<int> f{-n, 11, 10, -21, -20, -23, -22, -2, -3, -18, -19};
  for (int k = 0; k < (n - 26) / 4; ++k)
    f.insert(f.end(), {-(26 + 4 * k), -(27 + 4 * k), -(24 + 4 * k), -(25 + 4 * k)});
  f.insert(f.end(), {13, 12, -15, -14, 8, 9, 5, 4});
  // The tail pair (3-n, 4-n) appears exactly when 4 divides n.
  if (n % 4 == 0) f.insert(f.end(), {3 - n, 4 - n});
  f.insert(f.end(), {n - 2, n - 1, 7, 6, -17, -16, 1});
  return f;
}

// Position of the k-th flip n (0-based k) in seq.
std::size_t separator(const FlipSequence& seq, int k) {
  int seen = 0;
  for (std::size_t i = 0; i < seq.length(); ++i)
    if (seq[i] == seq.n() && seen++ == k) return i;
  throw Error(ErrorKind::NotFortuitousShape, "missing phase separator");
}

const std::map<int, FlipSequence>& seeds() {
  static const std::map<int, FlipSequence> s{
      {23, FlipSequence(23, {23, 14, 4,  6,  22, 10, 8,  12, 10, 14, 12, 18,
                             23, 10, 14, 18, 8,  10, 22, 10, 8,  18, 14, 10,
                             23, 18, 12, 14, 10, 12, 8,  10, 22, 6,  4,  14})},
      {26, FlipSequence(26, {26, 20, 14, 16, 11, 3, 24, 11, 16, 8, 19, 7,  13, 11,
                             25, 8,  21, 18, 3,  15, 26, 15, 3, 18, 5, 21, 8, 25,
                             13, 5,  19, 8,  16, 11, 24, 3,  11, 14, 10, 18})},
      {28, FlipSequence(28, {28, 22, 2,  16, 18, 13, 3,  26, 11, 18, 2,  10, 21, 7, 15,
                             13, 27, 8,  23, 20, 3,  17, 28, 15, 3,  18, 5,  21, 8, 27,
                             15, 5,  21, 10, 2,  18, 11, 26, 3,  13, 16, 10, 20})},
  };
  return s;
}

bool is_fortuitous(const Certificate& c) {
  const SeqClass want =
      c.n % 2 == 1 ? SeqClass::GeneralizedOddFortuitous : SeqClass::EvenFortuitous;
  return c.has(want) && c.length == c.bound;
}

TableRow generate_row(int n) {
  TableRow row;
  row.n = n;
  row.sequence = generate(n);
  row.certificate = classify(row.sequence);
  return row;
}

// Splice steps: odd n = 15 (+) (n-12), even n = 26 (+) (n-24). Returns the
// predecessor size, or 0 when n has no splice route inside the table.
int splice_predecessor(int n) {
  if (n % 2 == 1) return n >= 27 && family_of(n - 12) ? n - 12 : 0;
  return n >= 50 ? n - 24 : 0;
}

const FlipSequence& splice_base(const std::map<int, const TableRow*>& rows, int k) {
  if (has_splice_seed(k)) return splice_seed(k);
  const TableRow& r = *rows.at(k);
  return r.spliced ? *r.spliced : r.sequence;
}

void splice_row(TableRow& row, const std::map<int, const TableRow*>& rows, const FlipSequence& s15) {
  const int prev = splice_predecessor(row.n);
  if (prev == 0) {
    row.splice_note = has_splice_seed(row.n) ? "seed" : "none";
    return;
  }
  try {
    const FlipSequence& b = splice_base(rows, prev);
    row.spliced = row.n % 2 == 1 ? compose_odd(s15, b) : compose_even(splice_seed(26), b);
    row.spliced_certificate = classify(*row.spliced);
    row.splice_note = (row.n % 2 == 1 ? "15+" : "26+") + std::to_string(prev);
  } catch (const Error& e) {
    row.splice_note = std::string("failed: ") + e.what();
  }
}

std::map<int, const TableRow*> index_rows(const std::vector<TableRow>& rows) {
  std::map<int, const TableRow*> idx;
  for (const TableRow& r : rows) idx[r.n] = &r;
  return idx;
}

}  // namespace

std::string_view to_string(PatternFamily f) {
  switch (f) {
    case PatternFamily::Odd3Mod4: return "Odd3Mod4";
    case PatternFamily::Odd1Mod4: return "Odd1Mod4";
    case PatternFamily::Even: return "Even";
  }
  return "Unknown";
}

std::optional<PatternFamily> family_of(int n) {
  if (n % 2 == 0) return n >= 26 ? std::optional(PatternFamily::Even) : std::nullopt;
  if (n % 4 == 3) return n >= 15 ? std::optional(PatternFamily::Odd3Mod4) : std::nullopt;
  return n >= 25 ? std::optional(PatternFamily::Odd1Mod4) : std::nullopt;
}

SignedPerm pattern_stack(int n) {
  const auto fam = family_of(n);
  if (!fam) throw Error(ErrorKind::UnsupportedN, "no pattern family covers n = " + std::to_string(n));
  switch (*fam) {
    case PatternFamily::Odd3Mod4: return SignedPerm(odd3_stack(n));
    case PatternFamily::Odd1Mod4: return SignedPerm(odd1_stack(n));
    case PatternFamily::Even: return SignedPerm(even_stack(n));
  }
  throw Error(ErrorKind::UnsupportedN, "unreachable");
}

Checkpoint pattern_checkpoint(int n) { return make_checkpoint(pattern_stack(n)); }

FlipSequence generate(int n) { return extract(pattern_stack(n)); }

FlipSequence listing_order(const FlipSequence& extracted, PatternFamily family) {
  switch (family) {
    case PatternFamily::Odd3Mod4: return rotate_seq(extracted, separator(extracted, 2));
    case PatternFamily::Even: return rotate_seq(extracted, separator(extracted, 1));
    case PatternFamily::Odd1Mod4: return extracted;
  }
  return extracted;
}

FlipSequence generate_listing(int n) { return listing_order(generate(n), *family_of(n)); }

bool has_splice_seed(int n) { return seeds().count(n) != 0; }

const FlipSequence& splice_seed(int n) {
  const auto it = seeds().find(n);
  if (it == seeds().end()) throw Error(ErrorKind::UnsupportedN, "no splice seed for n = " + std::to_string(n));
  return it->second;
}

std::vector<int> table_sizes(int n_max) {
  std::vector<int> out;
  for (int n : {15, 19, 23})
    if (n <= n_max) out.push_back(n);
  for (int n = 25; n <= n_max; ++n) out.push_back(n);
  return out;
}

bool TableRow::verified() const {
  if (!is_fortuitous(certificate)) return false;
  if (splice_note.rfind("failed", 0) == 0) return false;
  return !spliced_certificate || is_fortuitous(*spliced_certificate);
}

std::vector<TableRow> table_serial(int n_max, bool splice) {
  std::vector<TableRow> rows;
  for (int n : table_sizes(n_max)) rows.push_back(generate_row(n));
  if (splice && !rows.empty()) {
    const auto idx = index_rows(rows);
    const FlipSequence s15 = generate(15);
    for (TableRow& r : rows) splice_row(r, idx, s15);
  }
  return rows;
}

std::vector<TableRow> table(int n_max, const TableOptions& opts) {
  const std::vector<int> sizes = table_sizes(n_max);
  std::vector<TableRow> rows(sizes.size());
  const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
  const long count = static_cast<long>(sizes.size());

  // Exceptions cannot cross the parallel region; park the first one.
  std::vector<std::string> errors(sizes.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
  for (long i = 0; i < count; ++i) {
    try {
      rows[i] = generate_row(sizes[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw Error(ErrorKind::ExtractionStuck, "n = " + std::to_string(sizes[i]) + ": " + errors[i]);
  if (!opts.splice || rows.empty()) return rows;

  const auto idx = index_rows(rows);
  const FlipSequence s15 = generate(15);
  // Each chain n, n+12, n+24, ... (odd) or n, n+24, ... (even) is sequential.
  std::map<int, std::vector<TableRow*>> chains;
  for (TableRow& r : rows) chains[r.n % 2 == 1 ? r.n % 12 : 12 + r.n % 24].push_back(&r);
  std::vector<std::vector<TableRow*>> work;
  for (auto& [key, chain] : chains) work.push_back(std::move(chain));
  const long nchains = static_cast<long>(work.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long c = 0; c < nchains; ++c)
    for (TableRow* r : work[c]) splice_row(*r, idx, s15);
  return rows;
}

}  // namespace pancake
