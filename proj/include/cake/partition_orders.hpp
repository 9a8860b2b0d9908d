#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cake/error.hpp"
#include "cake/rational.hpp"
#include "cake/subcake.hpp"

namespace cake {

using CutVector = std::vector<Rational>;

// Pieces indexed by player; together they tile the ambient subcake.
struct Partition {
  Subcake ambient;
  std::vector<Subcake> pieces;
};

// Word over a_1..a_n, stored as letter numbers 1..n.
using Word = std::vector<std::size_t>;

inline std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += "a" + std::to_string(w[k]);
  }
  return s;
}

// Graded order: a longer vector is greater; equal lengths compare on the
// first differing entry.
inline std::strong_ordering graded_compare(std::span<const Rational> u, std::span<const Rational> w) {
  if (u.size() != w.size()) return u.size() <=> w.size();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] < w[k]) return std::strong_ordering::less;
    if (w[k] < u[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// Sorted distinct piece endpoints strictly inside the ambient hull. Two
// touching intervals of the same piece are already merged, so only
// boundaries between different owners (or ambient gaps) appear.
inline CutVector merged_cut_vector(const Partition& p) {
  CutVector points;
  if (p.ambient.empty()) return points;
  const Rational& lo = p.ambient.min();
  const Rational& hi = p.ambient.sup();
  for (const auto& piece : p.pieces)
    for (const auto& iv : piece.intervals())
      for (const Rational* e : {&iv.lo, &iv.hi})
        if (lo < *e && *e < hi) points.push_back(*e);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// Scans the elementary intervals left to right and names each owner by
// order of first appearance. Zero-length elementary intervals carry no
// value and are skipped.
inline Word word_from_partition(const Partition& p) {
  Word word;
  if (p.ambient.empty()) return word;
  CutVector z = merged_cut_vector(p);
  z.insert(z.begin(), p.ambient.min());
  z.push_back(p.ambient.sup());
  std::vector<std::size_t> letter_of(p.pieces.size(), 0);
  std::size_t next_letter = 1;
  for (std::size_t l = 0; l + 1 < z.size(); ++l) {
    if (!(z[l] < z[l + 1])) continue;
    Subcake elementary = Subcake::between(z[l], z[l + 1]);
    Subcake inside = elementary.intersect(p.ambient);
    if (inside.empty()) continue;  // an ambient gap, not a piece
    std::optional<std::size_t> owner;
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
      Subcake overlap = p.pieces[i].intersect(inside);
      if (overlap.empty()) continue;
      if (owner || overlap != inside)
        throw DomainError("malformed partition: [" + format_rational(z[l]) + ", " + format_rational(z[l + 1]) +
                          "] is not inside exactly one piece");
      owner = i;
    }
    if (!owner)
      throw DomainError("malformed partition: [" + format_rational(z[l]) + ", " + format_rational(z[l + 1]) +
                        "] belongs to no piece");
    if (letter_of[*owner] == 0) letter_of[*owner] = next_letter++;
    word.push_back(letter_of[*owner]);
  }
  return word;
}

// Lexicographic order on words with a_n > ... > a_1.
inline std::strong_ordering lex_compare_words(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

inline std::strong_ordering lex_compare_partitions(const Partition& p, const Partition& q) {
  return lex_compare_words(word_from_partition(p), word_from_partition(q));
}

// Indices of the partitions that are least in graded order of their cut
// vectors and, among those, least in lexicographic order of their words.
// Survivors keep their input order.
inline std::vector<std::size_t> select_minimal_indices(std::span<const Partition> partitions) {
  if (partitions.empty()) throw DomainError("select_minimal on an empty list");
  std::vector<CutVector> cuts;
  cuts.reserve(partitions.size());
  for (const auto& p : partitions) cuts.push_back(merged_cut_vector(p));
  std::size_t best = 0;
  for (std::size_t k = 1; k < cuts.size(); ++k)
    if (graded_compare(cuts[k], cuts[best]) < 0) best = k;
  std::vector<std::size_t> graded_min;
  for (std::size_t k = 0; k < cuts.size(); ++k)
    if (graded_compare(cuts[k], cuts[best]) == 0) graded_min.push_back(k);
  if (graded_min.size() == 1) return graded_min;

  std::vector<Word> words;
  for (std::size_t k : graded_min) words.push_back(word_from_partition(partitions[k]));
  std::size_t best_word = 0;
  for (std::size_t k = 1; k < words.size(); ++k)
    if (lex_compare_words(words[k], words[best_word]) < 0) best_word = k;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words.size(); ++k)
    if (lex_compare_words(words[k], words[best_word]) == 0) out.push_back(graded_min[k]);
  return out;
}

inline std::vector<Partition> select_minimal(std::span<const Partition> partitions) {
  std::vector<Partition> out;
  for (std::size_t k : select_minimal_indices(partitions)) out.push_back(partitions[k]);
  return out;
}

// For partitions with equal cut vectors and equal words, the σ with
// p.pieces[σ(i)] == q.pieces[i] for every i. Pieces that are empty in both
// are paired in index order. Returns nullopt when no such σ exists.
inline std::optional<std::vector<std::size_t>> recover_permutation(const Partition& p, const Partition& q) {
  if (p.pieces.size() != q.pieces.size()) return std::nullopt;
  std::size_t n = p.pieces.size();
  std::vector<std::size_t> sigma(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && p.pieces[j] == q.pieces[i]) {
        sigma[i] = j;
        used[j] = true;
        break;
      }
    }
    if (sigma[i] == n) return std::nullopt;
  }
  return sigma;
}

}  // namespace cake
