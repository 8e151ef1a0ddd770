#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace foldcalc::algebra {

using Int = boost::multiprecision::cpp_int;

// One signed letter of a group word: generator index plus sign (+1 / -1).
struct Letter {
  int gen = 0;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

// Free reduction plus removal of inverse pairs across the wraparound.
Word cyclic_reduce(Word w);

// Cyclic reduction followed by the lexicographically minimal rotation;
// canonical representative for equality tests on cyclic words.
Word normalize_cyclic(Word w);

struct Generator {
  std::string name;
  bool reverses_orientation = false;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct FpPresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;  // each cyclically reduced; empty words allowed

  int generator_index(const std::string& name) const;  // -1 when absent
  bool has_reversing_generator() const;
  // Letter indices in range and relators cyclically reduced.
  void check() const;

  friend bool operator==(const FpPresentation&, const FpPresentation&) = default;
};

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;  // row-major, rows*cols entries

  static IntMatrix zero(int r, int c);
  static IntMatrix identity(int n);

  Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  IntMatrix times(const IntMatrix& other) const;
  Int determinant() const;  // exact, square matrices only

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct SmithResult {
  std::vector<Int> diagonal;  // length min(rows, cols); nonnegative; d1 | d2 | ...
  IntMatrix left;             // unimodular, rows x rows
  IntMatrix right;            // unimodular, cols x cols; left*m*right diagonal
};

// Deterministic pivoting: smallest nonzero absolute value, ties broken by
// lowest row index then lowest column index.
SmithResult smith_normal_form(const IntMatrix& m);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;  // sorted, each >= 2, each dividing the next

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& a);

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const FpPresentation& g);

// Invariants of the cokernel of the relator exponent matrix.
AbelianInvariants abelianization(const FpPresentation& g);

// #generators minus the rank of the exponent matrix over the two-element field.
int z2_first_betti(const FpPresentation& g);

// Row-reduction rank over the two-element field (shared helper).
int z2_rank(std::vector<std::vector<std::uint8_t>> rows);

// Presentation of the kernel of the orientation character, computed by
// Reidemeister-Schreier rewriting along the transversal {1, x} where x is
// the first orientation-reversing generator. Output generators are all
// orientation-preserving; rewritten relators are cyclically reduced but the
// presentation is otherwise left unsimplified.
FpPresentation index2_subgroup(const FpPresentation& g);

// Safe cleanup only: drop empty relators, eliminate single-letter relators
// together with their generators, re-reduce cyclically, repeat to a fixpoint.
// Abelianization is preserved (checked internally).
FpPresentation tietze_reduce(const FpPresentation& g);

}  // namespace foldcalc::algebra
