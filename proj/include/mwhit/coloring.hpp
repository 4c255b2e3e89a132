#pragma once

#include "mwhit/typea.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace mwhit {

/// v[k] is true when the k-th entry (word position k+1) is positive.
using VanishingPattern = std::vector<bool>;

/// sigma[k] is sigma_{k+1}; sigma.back() is the input w', sigma.front() the output.
struct ColoringSequence {
  std::vector<Permutation> sigma;
  auto operator<=>(const ColoringSequence &) const = default;
  const Permutation &output() const { return sigma.front(); }
};

enum class DomainClass { RingOfIntegers, Units, MaximalIdeal };

inline std::string to_string(DomainClass d) {
  switch (d) {
  case DomainClass::RingOfIntegers:
    return "O";
  case DomainClass::Units:
    return "O^x";
  case DomainClass::MaximalIdeal:
    return "p";
  }
  return "?";
}

/**
 * All colorings of (word, v, w') grouped by output. Positions are read from N down to 1;
 * multiplying by s_i exchanges positions i and i+1 of the one-line color row.
 */
inline std::map<Permutation, std::vector<ColoringSequence>>
enumerate_colorings(const ReducedWord &word, const VanishingPattern &v, const Permutation &wprime) {
  if (word.size() != v.size())
    throw DomainError("enumerate_colorings: vanishing pattern length differs from word");
  for (int l : word)
    if (l < 1 || l >= wprime.size())
      throw DomainError("enumerate_colorings: word letter out of range for w'");
  int N = static_cast<int>(word.size());
  std::map<Permutation, std::vector<ColoringSequence>> out;
  std::vector<Permutation> seq(N + 1);
  seq[N] = wprime;
  auto rec = [&](auto &&self, int k) -> void {
    if (k == 0) {
      out[seq[0]].push_back({seq});
      return;
    }
    const Permutation &cur = seq[k];
    int l = word[k - 1];
    if (v[k - 1]) {
      seq[k - 1] = cur;
      self(self, k - 1);
    } else if (is_positive_after(cur, l)) {
      seq[k - 1] = cur.swap_positions(l);
      self(self, k - 1);
    } else {
      seq[k - 1] = cur;
      self(self, k - 1);
      seq[k - 1] = cur.swap_positions(l);
      self(self, k - 1);
    }
  };
  rec(rec, N);
  for (auto &[w, seqs] : out)
    std::sort(seqs.begin(), seqs.end());
  return out;
}

/// Domain of integration at each position, determined by (v_k, sigma_{k+1}, sigma_k).
inline std::vector<DomainClass> domain_classes(const ReducedWord &word, const ColoringSequence &seq,
                                               const VanishingPattern &v) {
  int N = static_cast<int>(word.size());
  if (static_cast<int>(seq.sigma.size()) != N + 1 || static_cast<int>(v.size()) != N)
    throw DomainError("domain_classes: length mismatch");
  std::vector<DomainClass> out(N);
  for (int k = N; k >= 1; --k) {
    const Permutation &next = seq.sigma[k];
    const Permutation &cur = seq.sigma[k - 1];
    int l = word[k - 1];
    Permutation swapped = next.swap_positions(l);
    if (v[k - 1]) {
      if (cur != next)
        throw DomainError("domain_classes: positive entry changed the coloring");
      out[k - 1] = DomainClass::Units;
    } else if (is_positive_after(next, l)) {
      if (cur != swapped)
        throw DomainError("domain_classes: forced swap missing");
      out[k - 1] = DomainClass::RingOfIntegers;
    } else if (cur == next) {
      out[k - 1] = DomainClass::Units;
    } else if (cur == swapped) {
      out[k - 1] = DomainClass::MaximalIdeal;
    } else {
      throw DomainError("domain_classes: inconsistent step");
    }
  }
  return out;
}

/// Color of the entry at word position k (1-based): sigma_k(l+1) for letter l.
inline std::vector<int> entry_colors(const ReducedWord &word, const ColoringSequence &seq) {
  std::vector<int> out(word.size());
  for (std::size_t k = 0; k < word.size(); ++k)
    out[k] = seq.sigma[k](word[k] + 1);
  return out;
}

} // namespace mwhit
