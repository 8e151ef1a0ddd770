#include "foldcalc/algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "foldcalc/error.hpp"

namespace foldcalc::algebra {

namespace {

Letter inv(const Letter& l) { return Letter{l.gen, -l.sign}; }

}  // namespace

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

Word cyclic_reduce(Word w) {
  Word reduced;
  reduced.reserve(w.size());
  for (const Letter& l : w) {
    if (!reduced.empty() && reduced.back() == inv(l)) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }
  std::size_t lo = 0, hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == inv(reduced[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
              reduced.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word normalize_cyclic(Word w) {
  w = cyclic_reduce(std::move(w));
  if (w.size() < 2) return w;
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = w[(start + k) % n];
      const Letter& b = w[(best + k) % n];
      if (a < b) {
        best = start;
        break;
      }
      if (b < a) break;
    }
  }
  Word out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(w[(best + k) % n]);
  return out;
}

int FpPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

bool FpPresentation::has_reversing_generator() const {
  return std::any_of(generators.begin(), generators.end(),
                     [](const Generator& g) { return g.reverses_orientation; });
}

void FpPresentation::check() const {
  for (const Word& r : relators) {
    for (const Letter& l : r) {
      if (l.gen < 0 || l.gen >= static_cast<int>(generators.size())) {
        fail("InvalidData", "relator letter references an undeclared generator");
      }
      if (l.sign != 1 && l.sign != -1) {
        fail("InvalidData", "letter sign must be +1 or -1");
      }
    }
    if (cyclic_reduce(r) != r) {
      fail("InvalidData", "relator is not cyclically reduced");
    }
  }
}

IntMatrix IntMatrix::zero(int r, int c) {
  IntMatrix m;
  m.rows = r;
  m.cols = c;
  m.entries.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), Int(0));
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
  if (cols != other.rows) throw std::logic_error("matrix shape mismatch");
  IntMatrix out = zero(rows, other.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols; ++j) out.at(i, j) += a * other.at(k, j);
    }
  }
  return out;
}

Int IntMatrix::determinant() const {
  if (rows != cols) throw std::logic_error("determinant needs a square matrix");
  const int n = rows;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

struct SmithWorker {
  IntMatrix m, left, right;

  explicit SmithWorker(const IntMatrix& input)
      : m(input),
        left(IntMatrix::identity(input.rows)),
        right(IntMatrix::identity(input.cols)) {}

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < left.cols; ++j) std::swap(left.at(a, j), left.at(b, j));
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < right.rows; ++i) std::swap(right.at(i, a), right.at(i, b));
  }

  void add_row_multiple(int target, int source, const Int& factor) {
    for (int j = 0; j < m.cols; ++j) m.at(target, j) += factor * m.at(source, j);
    for (int j = 0; j < left.cols; ++j) left.at(target, j) += factor * left.at(source, j);
  }

  void add_col_multiple(int target, int source, const Int& factor) {
    for (int i = 0; i < m.rows; ++i) m.at(i, target) += factor * m.at(i, source);
    for (int i = 0; i < right.rows; ++i)
      right.at(i, target) += factor * right.at(i, source);
  }

  void negate_row(int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    for (int j = 0; j < left.cols; ++j) left.at(r, j) = -left.at(r, j);
  }

  // Smallest nonzero |entry| in the trailing block, ties by row then column.
  bool select_pivot(int k, int* pi, int* pj) const {
    bool found = false;
    Int best = 0;
    for (int i = k; i < m.rows; ++i) {
      for (int j = k; j < m.cols; ++j) {
        const Int& v = m.at(i, j);
        if (v == 0) continue;
        Int a = abs(v);
        if (!found || a < best) {
          found = true;
          best = a;
          *pi = i;
          *pj = j;
        }
      }
    }
    return found;
  }

  // Clears row k and column k using the pivot at (k, k), re-pivoting on any
  // nonzero remainder (which is strictly smaller in absolute value).
  void reduce_at(int k) {
    while (true) {
      int pi = k, pj = k;
      if (!select_pivot(k, &pi, &pj)) return;
      swap_rows(k, pi);
      swap_cols(k, pj);
      bool clean = true;
      for (int i = k + 1; i < m.rows && clean; ++i) {
        if (m.at(i, k) == 0) continue;
        Int q = m.at(i, k) / m.at(k, k);
        add_row_multiple(i, k, -q);
        if (m.at(i, k) != 0) clean = false;
      }
      if (!clean) continue;
      for (int j = k + 1; j < m.cols && clean; ++j) {
        if (m.at(k, j) == 0) continue;
        Int q = m.at(k, j) / m.at(k, k);
        add_col_multiple(j, k, -q);
        if (m.at(k, j) != 0) clean = false;
      }
      if (clean) return;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SmithWorker w(input);
  const int d = std::min(input.rows, input.cols);
  for (int k = 0; k < d; ++k) w.reduce_at(k);

  // Enforce the divisibility chain d1 | d2 | ... by folding offenders back
  // into earlier positions and re-reducing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < d; ++k) {
      const Int& a = w.m.at(k, k);
      const Int& b = w.m.at(k + 1, k + 1);
      if (a == 0 && b != 0) {
        // A zero ahead of a nonzero breaks the chain; pull the nonzero in.
        w.add_col_multiple(k, k + 1, 1);
        for (int j = k; j < d; ++j) w.reduce_at(j);
        changed = true;
      } else if (a != 0 && b % a != 0) {
        w.add_col_multiple(k, k + 1, 1);
        for (int j = k; j < d; ++j) w.reduce_at(j);
        changed = true;
      }
    }
  }

  for (int k = 0; k < d; ++k) {
    if (w.m.at(k, k) < 0) w.negate_row(k);
  }

  SmithResult out;
  out.diagonal.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) out.diagonal.push_back(w.m.at(k, k));
  out.left = std::move(w.left);
  out.right = std::move(w.right);
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  std::string s;
  for (int i = 0; i < a.free_rank; ++i) {
    if (!s.empty()) s += " + ";
    s += "Z";
  }
  for (const Int& t : a.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  if (s.empty()) s = "0";
  return s;
}

IntMatrix exponent_matrix(const FpPresentation& g) {
  IntMatrix m = IntMatrix::zero(static_cast<int>(g.relators.size()),
                                static_cast<int>(g.generators.size()));
  for (std::size_t r = 0; r < g.relators.size(); ++r) {
    for (const Letter& l : g.relators[r]) {
      m.at(static_cast<int>(r), l.gen) += l.sign;
    }
  }
  return m;
}

AbelianInvariants abelianization(const FpPresentation& g) {
  g.check();
  SmithResult snf = smith_normal_form(exponent_matrix(g));
  AbelianInvariants out;
  int rank = 0;
  for (const Int& dv : snf.diagonal) {
    if (dv != 0) ++rank;
    if (dv >= 2) out.torsion.push_back(dv);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  out.free_rank = static_cast<int>(g.generators.size()) - rank;
  return out;
}

int z2_rank(std::vector<std::vector<std::uint8_t>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot_row && rows[r][c]) {
        for (std::size_t j = c; j < cols; ++j) rows[r][j] ^= rows[pivot_row][j];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

int z2_first_betti(const FpPresentation& g) {
  g.check();
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(g.relators.size());
  for (const Word& r : g.relators) {
    std::vector<std::uint8_t> row(g.generators.size(), 0);
    for (const Letter& l : r) row[static_cast<std::size_t>(l.gen)] ^= 1;
    rows.push_back(std::move(row));
  }
  return static_cast<int>(g.generators.size()) - z2_rank(std::move(rows));
}

namespace {

std::string unique_name(std::string candidate, const std::vector<Generator>& taken) {
  auto clashes = [&](const std::string& n) {
    return std::any_of(taken.begin(), taken.end(),
                       [&](const Generator& g) { return g.name == n; });
  };
  while (clashes(candidate)) candidate += "'";
  return candidate;
}

}  // namespace

FpPresentation index2_subgroup(const FpPresentation& g) {
  g.check();
  int x = -1;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (g.generators[i].reverses_orientation) {
      x = static_cast<int>(i);
      break;
    }
  }
  if (x < 0) {
    fail("AllGeneratorsPreserveOrientation",
         "the orientation character is trivial; no index-2 kernel to present");
  }
  for (const Word& r : g.relators) {
    int parity = 0;
    for (const Letter& l : r) {
      if (g.generators[static_cast<std::size_t>(l.gen)].reverses_orientation) parity ^= 1;
    }
    if (parity != 0) {
      fail("InvalidData",
           "relator has odd orientation parity; the character does not descend");
    }
  }

  // Output generator table: x^2 for the chosen reverser, a coset-0 and a
  // coset-1 copy for every other generator.
  FpPresentation out;
  const int n = static_cast<int>(g.generators.size());
  std::vector<std::array<int, 2>> image(static_cast<std::size_t>(n), {-1, -1});
  for (int i = 0; i < n; ++i) {
    if (i == x) {
      image[static_cast<std::size_t>(i)][1] = static_cast<int>(out.generators.size());
      out.generators.push_back(
          Generator{unique_name(g.generators[static_cast<std::size_t>(i)].name + "^2",
                                out.generators),
                    false});
    } else {
      for (int t = 0; t < 2; ++t) {
        image[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
            static_cast<int>(out.generators.size());
        out.generators.push_back(Generator{
            unique_name(g.generators[static_cast<std::size_t>(i)].name + "_" +
                            std::to_string(t),
                        out.generators),
            false});
      }
    }
  }

  auto w1 = [&](int gen) {
    return g.generators[static_cast<std::size_t>(gen)].reverses_orientation ? 1 : 0;
  };
  // Schreier generator for (coset, generator); -1 encodes the trivial one
  // (traversing x from coset 0 lands on the transversal representative).
  auto schreier = [&](int coset, int gen) -> int {
    if (gen == x) return coset == 1 ? image[static_cast<std::size_t>(gen)][1] : -1;
    return image[static_cast<std::size_t>(gen)][static_cast<std::size_t>(coset)];
  };

  auto rewrite = [&](const Word& r, int start) {
    Word w;
    int t = start;
    for (const Letter& l : r) {
      if (l.sign > 0) {
        int s = schreier(t, l.gen);
        if (s >= 0) w.push_back(Letter{s, 1});
        t ^= w1(l.gen);
      } else {
        t ^= w1(l.gen);
        int s = schreier(t, l.gen);
        if (s >= 0) w.push_back(Letter{s, -1});
      }
    }
    return cyclic_reduce(std::move(w));
  };

  for (const Word& r : g.relators) {
    out.relators.push_back(rewrite(r, 0));
    out.relators.push_back(rewrite(r, 1));
  }
  return out;
}

FpPresentation tietze_reduce(const FpPresentation& g) {
  g.check();
  const AbelianInvariants before = abelianization(g);

  FpPresentation p = g;
  for (Word& r : p.relators) r = cyclic_reduce(std::move(r));

  bool changed = true;
  while (changed) {
    changed = false;

    for (auto it = p.relators.begin(); it != p.relators.end();) {
      if (it->empty()) {
        it = p.relators.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }

    int dead_gen = -1;
    std::size_t dead_rel = 0;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (p.relators[r].size() == 1) {
        dead_gen = p.relators[r][0].gen;
        dead_rel = r;
        break;
      }
    }
    if (dead_gen >= 0) {
      p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(dead_rel));
      p.generators.erase(p.generators.begin() + dead_gen);
      for (Word& r : p.relators) {
        Word next;
        next.reserve(r.size());
        for (const Letter& l : r) {
          if (l.gen == dead_gen) continue;
          next.push_back(Letter{l.gen > dead_gen ? l.gen - 1 : l.gen, l.sign});
        }
        r = cyclic_reduce(std::move(next));
      }
      changed = true;
    }
  }

  if (abelianization(p) != before) {
    throw std::logic_error("tietze_reduce changed the abelianization");
  }
  return p;
}

}  // namespace foldcalc::algebra
